// Copyright 2026 The advtext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "advtext/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "advtext/errors.hpp"
#include "advtext/grammar.hpp"
#include "advtext/rng.hpp"

namespace advtext {

namespace {

AttackOutcome attack_one(const VictimModel& victim, const AttackRecipe& recipe,
                         const LabeledText& seed, std::uint64_t rng_seed) {
  QueryCounter counter(victim);
  try {
    return run_attack(counter, recipe, seed.text, seed.label, rng_seed);
  } catch (const Error& e) {
    AttackOutcome out;
    out.status = AttackStatus::kFailed;
    out.x = seed.text;
    out.original_label = seed.label;
    out.final_label = seed.label;
    out.queries = counter.count();
    out.detail = e.what();
    return out;
  }
}

double mean(std::span<const double> v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double stddev(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  double m = mean(v), s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.index(i)]);
}

}  // namespace

CampaignReport summarize(const AttackRecipe& recipe, std::span<const AttackOutcome> outcomes,
                         const CampaignOptions& options) {
  CampaignReport r;
  r.preset = recipe.constraints.name();
  r.search = std::string(search_name(recipe.search.method));
  r.rng_seed = options.rng_seed;
  r.attempted = outcomes.size();
  double pert_sum = 0.0, query_sum = 0.0;
  std::size_t grammar_hits = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const AttackOutcome& o = outcomes[i];
    ExampleSummary e;
    e.index = i;
    e.status = o.status;
    e.original_label = o.original_label;
    e.final_label = o.final_label;
    e.queries = o.queries;
    e.swap_count = o.swaps.size();
    e.original_text = o.x.text();
    e.detail = o.detail;
    switch (o.status) {
      case AttackStatus::kSkippedMisclassified: ++r.skipped; break;
      case AttackStatus::kSuccess: ++r.successes; break;
      case AttackStatus::kFailed: ++r.failed; break;
      case AttackStatus::kBudgetExhausted: ++r.budget_exhausted; break;
    }
    if (o.status != AttackStatus::kSkippedMisclassified) query_sum += static_cast<double>(o.queries);
    if (o.status == AttackStatus::kSuccess && o.x_adv) {
      e.adversarial_text = o.x_adv->text();
      e.perturbed_word_pct = word_diff(o.x, *o.x_adv).perturbed_word_percentage;
      pert_sum += e.perturbed_word_pct;
      if (options.lexicon) {
        e.grammar_error_delta = grammar_error_delta(*options.lexicon, o.x, *o.x_adv);
        if (*e.grammar_error_delta > 0) ++grammar_hits;
      }
    }
    r.per_example.push_back(std::move(e));
  }
  const std::size_t eligible = r.attempted - r.skipped;
  r.skipped_all = r.attempted > 0 && eligible == 0;
  if (eligible > 0) {
    r.attack_success_rate = 100.0 * static_cast<double>(r.successes) / static_cast<double>(eligible);
    r.mean_queries = query_sum / static_cast<double>(eligible);
  }
  if (r.attempted > 0) {
    r.after_attack_accuracy =
        100.0 * static_cast<double>(eligible - r.successes) / static_cast<double>(r.attempted);
  }
  if (r.successes > 0) r.mean_perturbed_word_pct = pert_sum / static_cast<double>(r.successes);
  if (options.lexicon) {
    r.grammar_error_pct =
        r.successes > 0 ? 100.0 * static_cast<double>(grammar_hits) / static_cast<double>(r.successes)
                        : 0.0;
  }
  return r;
}

CampaignRun run_campaign_detailed(const VictimModel& victim, const AttackRecipe& recipe,
                                  std::span<const LabeledText> seeds,
                                  const CampaignOptions& options) {
  validate_recipe(recipe);
  if (seeds.empty()) throw ConfigError("run_campaign: no seed examples");
  std::vector<AttackOutcome> outcomes(seeds.size());
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, seeds.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      outcomes[i] = attack_one(victim, recipe, seeds[i], derive_seed(options.rng_seed, i));
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  CampaignRun run;
  run.report = summarize(recipe, outcomes, options);
  run.outcomes = std::move(outcomes);
  return run;
}

CampaignReport run_campaign(const VictimModel& victim, const AttackRecipe& recipe,
                            std::span<const LabeledText> seeds, const CampaignOptions& options) {
  return run_campaign_detailed(victim, recipe, seeds, options).report;
}

std::vector<std::string> validate_report(const CampaignReport& r) {
  std::vector<std::string> problems;
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };
  std::size_t skipped = 0, successes = 0, failed = 0, budget = 0;
  double pert = 0.0, queries = 0.0;
  for (const auto& e : r.per_example) {
    switch (e.status) {
      case AttackStatus::kSkippedMisclassified: ++skipped; break;
      case AttackStatus::kSuccess: ++successes; pert += e.perturbed_word_pct; break;
      case AttackStatus::kFailed: ++failed; break;
      case AttackStatus::kBudgetExhausted: ++budget; break;
    }
    if (e.status != AttackStatus::kSkippedMisclassified) queries += static_cast<double>(e.queries);
    if (e.status == AttackStatus::kSuccess && !e.adversarial_text) {
      problems.push_back("example " + std::to_string(e.index) + ": success without text");
    }
  }
  if (!r.per_example.empty()) {
    if (r.attempted != r.per_example.size()) problems.push_back("attempted != per_example count");
    if (r.skipped != skipped) problems.push_back("skipped count mismatch");
    if (r.successes != successes) problems.push_back("success count mismatch");
    if (r.failed != failed) problems.push_back("failed count mismatch");
    if (r.budget_exhausted != budget) problems.push_back("budget_exhausted count mismatch");
  }
  if (r.skipped + r.successes + r.failed + r.budget_exhausted != r.attempted) {
    problems.push_back("status counts do not sum to attempted");
  }
  if (r.skipped > r.attempted || r.successes > r.attempted - std::min(r.skipped, r.attempted)) {
    problems.push_back("successes exceed eligible seeds");
    return problems;
  }
  const std::size_t eligible = r.attempted - r.skipped;
  double rate = eligible ? 100.0 * static_cast<double>(r.successes) / static_cast<double>(eligible) : 0.0;
  double after = r.attempted ? 100.0 * static_cast<double>(eligible - r.successes) /
                                   static_cast<double>(r.attempted)
                             : 0.0;
  if (!near(r.attack_success_rate, rate)) problems.push_back("attack_success_rate mismatch");
  if (!near(r.after_attack_accuracy, after)) problems.push_back("after_attack_accuracy mismatch");
  if (r.skipped_all != (r.attempted > 0 && eligible == 0)) problems.push_back("skipped_all flag mismatch");
  if (!r.per_example.empty()) {
    double mp = successes ? pert / static_cast<double>(successes) : 0.0;
    double mq = eligible ? queries / static_cast<double>(eligible) : 0.0;
    if (!near(r.mean_perturbed_word_pct, mp)) problems.push_back("mean_perturbed_word_pct mismatch");
    if (!near(r.mean_queries, mq)) problems.push_back("mean_queries mismatch");
  }
  for (double v : {r.attack_success_rate, r.after_attack_accuracy, r.mean_perturbed_word_pct}) {
    if (v < 0.0 || v > 100.0) problems.push_back("percentage outside [0, 100]");
  }
  return problems;
}

AblationReport run_ablation(const VictimModel& victim, const AttackRecipe& recipe,
                            std::span<const LabeledText> seeds, const CampaignOptions& options) {
  if (recipe.constraints.size() < 2) throw ConfigError("ablation needs at least two constraints");
  AblationReport out;
  out.preset = recipe.constraints.name();
  out.search = std::string(search_name(recipe.search.method));
  out.baseline_success_rate = run_campaign(victim, recipe, seeds, options).attack_success_rate;
  for (std::size_t i = 0; i < recipe.constraints.size(); ++i) {
    AttackRecipe reduced = recipe;
    reduced.constraints = recipe.constraints.without(i);
    CampaignReport rep = run_campaign(victim, reduced, seeds, options);
    out.rows.push_back(AblationRow{recipe.constraints.constraints()[i]->id(),
                                   rep.attack_success_rate,
                                   rep.attack_success_rate - out.baseline_success_rate,
                                   rep.mean_queries});
  }
  auto top = std::max_element(out.rows.begin(), out.rows.end(),
                              [](const AblationRow& a, const AblationRow& b) { return a.delta < b.delta; });
  if (top->delta > 0.0) {
    out.findings.push_back("removing " + top->removed + " raises the success rate most (+" +
                           fmt1(top->delta) + " points)");
  } else {
    out.findings.push_back("no single removal raises the success rate");
  }
  for (const auto& row : out.rows) {
    if (row.delta < 0.0) {
      out.findings.push_back("removing " + row.removed + " lowers the success rate (" +
                             fmt1(row.delta) + " points); the search is not monotone here");
    }
  }
  return out;
}

const ComparisonCell* ComparisonReport::cell(const std::string& preset,
                                             const std::string& search) const {
  for (const auto& c : cells) {
    if (c.preset == preset && c.search == search) return &c;
  }
  return nullptr;
}

ComparisonReport compare_search_methods(const VictimModel& victim,
                                        const std::vector<AttackRecipe>& presets,
                                        const std::vector<SearchMethod>& searches,
                                        std::span<const LabeledText> seeds,
                                        const CampaignOptions& options) {
  if (presets.empty() || searches.empty()) throw ConfigError("comparison needs presets and searches");
  ComparisonReport out;
  for (const auto& p : presets) out.presets.push_back(p.constraints.name());
  for (SearchMethod m : searches) out.searches.emplace_back(search_name(m));
  for (const auto& p : presets) {
    for (SearchMethod m : searches) {
      AttackRecipe r = p;
      r.search.method = m;
      CampaignReport rep = run_campaign(victim, r, seeds, options);
      out.cells.push_back(ComparisonCell{rep.preset, rep.search, rep.attempted, rep.skipped,
                                         rep.successes, rep.attack_success_rate,
                                         rep.mean_perturbed_word_pct, rep.mean_queries});
    }
  }
  return out;
}

AugmentReport augment_and_retrain(std::span<const LabeledText> train_set,
                                  std::span<const LabeledText> test_set,
                                  std::shared_ptr<const EmbeddingStore> store,
                                  const AttackRecipe& recipe, const AugmentOptions& options) {
  if (train_set.empty() || test_set.empty()) throw ConfigError("augment needs train and test data");
  if (options.run_seeds.empty()) throw ConfigError("augment needs at least one run seed");
  AugmentReport out;
  out.epochs = options.hyper.epochs;
  out.train_size = train_set.size();
  for (std::uint64_t seed : options.run_seeds) {
    AugmentRun run;
    run.seed = seed;
    TrainHyper hyper = options.hyper;
    hyper.seed = seed;
    auto record = [&](std::vector<double>& into) {
      return [&into, &test_set](std::size_t, const BagOfEmbeddingsClassifier& m) {
        into.push_back(accuracy(m, test_set));
      };
    };
    BagOfEmbeddingsClassifier original = train(train_set, store, hyper, record(run.original_accuracy));
    CampaignOptions copts;
    copts.workers = options.workers;
    copts.rng_seed = seed;
    CampaignRun campaign = run_campaign_detailed(original, recipe, train_set, copts);
    std::vector<LabeledText> augmented(train_set.begin(), train_set.end());
    for (const auto& o : campaign.outcomes) {
      if (o.status != AttackStatus::kSuccess || !o.x_adv) continue;
      augmented.push_back(LabeledText{o.x_adv->with_label(o.original_label), o.original_label});
      ++run.successes;
    }
    run.augmented_size = augmented.size();
    if (run.successes == 0) {
      out.zero_successes = true;
      run.augmented_accuracy = run.original_accuracy;
    } else {
      train(augmented, store, hyper, record(run.augmented_accuracy));
    }
    out.runs.push_back(std::move(run));
  }
  for (std::size_t e = 0; e < out.epochs; ++e) {
    std::vector<double> a, b;
    for (const auto& run : out.runs) {
      a.push_back(run.original_accuracy[e]);
      b.push_back(run.augmented_accuracy[e]);
    }
    out.original_mean.push_back(mean(a));
    out.original_std.push_back(stddev(a));
    out.augmented_mean.push_back(mean(b));
    out.augmented_std.push_back(stddev(b));
  }
  return out;
}

SuspicionReport train_suspicion_classifier(std::shared_ptr<const EmbeddingStore> store,
                                           std::span<const TokenizedText> real,
                                           std::span<const TokenizedText> perturbed,
                                           std::uint64_t split_seed, const TrainHyper& hyper) {
  if (real.empty() || perturbed.empty()) {
    throw DegenerateDataset("suspicion classifier needs real and perturbed texts");
  }
  SuspicionReport out;
  out.real_count = real.size();
  out.perturbed_count = perturbed.size();
  Rng rng(split_seed);
  std::vector<std::size_t> r(real.size()), p(perturbed.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  shuffle(r, rng);
  shuffle(p, rng);
  const double big = static_cast<double>(std::max(r.size(), p.size()));
  const double small = static_cast<double>(std::min(r.size(), p.size()));
  if (big > kMaxClassRatio * small) {
    auto& larger = r.size() > p.size() ? r : p;
    larger.resize(static_cast<std::size_t>(small));
    out.rebalanced = true;
    out.note = "class ratio exceeded 10:1; larger class downsampled to " +
               std::to_string(larger.size());
  }
  std::vector<LabeledText> train_set, test_set;
  auto split = [&](const std::vector<std::size_t>& idx, std::span<const TokenizedText> texts,
                   int label) {
    std::size_t n_test = idx.size() / 5;
    if (idx.size() >= 2 && n_test == 0) n_test = 1;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      LabeledText s{texts[idx[k]].with_label(label), label};
      (k < n_test ? test_set : train_set).push_back(std::move(s));
    }
  };
  split(r, real, 0);
  split(p, perturbed, 1);
  if (test_set.empty() || train_set.empty()) {
    throw DegenerateDataset("suspicion classifier: too few texts for an 80/20 split");
  }
  out.train_size = train_set.size();
  out.test_size = test_set.size();
  TrainHyper h = hyper;
  h.seed = split_seed;
  BagOfEmbeddingsClassifier model = train(train_set, store, h);
  out.accuracy = accuracy(model, test_set);
  return out;
}

GrammarEvalReport evaluate_grammar_pairs(
    const PosLexicon& lexicon, const std::vector<std::pair<std::string, std::string>>& pairs) {
  GrammarEvalReport out;
  for (const auto& [a, b] : pairs) {
    TokenizedText x = tokenize(a), y = tokenize(b);
    auto before = check_grammar(lexicon, x);
    auto after = check_grammar(lexicon, y);
    GrammarPair gp;
    gp.original = a;
    gp.perturbed = b;
    gp.errors_before = static_cast<int>(before.size());
    gp.errors_after = static_cast<int>(after.size());
    gp.delta = gp.errors_after - gp.errors_before;
    for (const auto& m : after) {
      bool seen = std::any_of(before.begin(), before.end(),
                              [&](const RuleMatch& o) { return o.rule_id == m.rule_id; });
      if (!seen) gp.new_rules.push_back(m.rule_id);
    }
    if (gp.delta > 0) ++out.positive;
    out.pairs.push_back(std::move(gp));
  }
  if (!out.pairs.empty()) {
    out.positive_pct = 100.0 * static_cast<double>(out.positive) / static_cast<double>(out.pairs.size());
  }
  return out;
}

}  // namespace advtext
