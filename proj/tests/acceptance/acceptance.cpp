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

// Acceptance checks over the bundled toy benchmark. Prints one PASS/FAIL
// line per criterion and exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "advtext/embedding.hpp"
#include "advtext/grammar.hpp"
#include "advtext/harness.hpp"
#include "advtext/recipe.hpp"
#include "advtext/search.hpp"
#include "cli.hpp"
#include "fixtures.hpp"

namespace advtext {
namespace {

namespace fs = std::filesystem;
using testing::toy;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c, d);
  return buf;
}

// Every Success produced anywhere in this run, re-checked by criterion 7.
struct Produced {
  AttackRecipe recipe;
  std::vector<AttackOutcome> outcomes;
};
std::vector<Produced> produced;

CampaignRun campaign(const AttackRecipe& r, std::span<const LabeledText> seeds,
                     std::uint64_t rng_seed = 0) {
  CampaignOptions o;
  o.rng_seed = rng_seed;
  o.lexicon = toy().lexicon.get();
  CampaignRun run = run_campaign_detailed(*toy().model, r, seeds, o);
  produced.push_back({r, run.outcomes});
  return run;
}

Verdict filter_equivalence() {
  auto t0 = Clock::now();
  std::mt19937_64 gen(101);
  std::normal_distribution<double> g;
  const std::size_t n = 1200, dim = 12;
  std::vector<std::string> words;
  std::vector<double> values;
  for (std::size_t i = 0; i < n; ++i) {
    words.push_back("v" + std::to_string(i));
    for (std::size_t j = 0; j < dim; ++j) values.push_back(g(gen));
  }
  EmbeddingStore store = normalize(EmbeddingStore(dim, words, values));
  std::uniform_real_distribution<double> eps_dist(-1.0, 1.0);
  std::size_t compared = 0, mismatched = 0;
  for (int e = 0; e < 20; ++e) {
    double eps = eps_dist(gen);
    double radius = euclidean_threshold_from_cosine(eps);
    for (std::size_t q = 0; q < n; q += 40) {
      auto by_cos = nearest_neighbors(store, words[q], n, eps);
      auto by_dist = nearest_neighbors_within(store, words[q], n, radius);
      std::vector<std::string> a, b;
      for (const auto& x : by_cos) a.push_back(x.word);
      for (const auto& x : by_dist) b.push_back(x.word);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ++compared;
      if (a != b) ++mismatched;
    }
  }
  double s = seconds_since(t0);
  return {mismatched == 0 && s < 10.0,
          fmt("%.0f vectors, 20 eps, %.0f queries, %.0f mismatches, %.2fs", n, compared,
              mismatched, s)};
}

Verdict grammar_gate() {
  auto t0 = Clock::now();
  const auto& t = toy();
  std::size_t successes = 0, violations = 0, seeds = 0;
  for (auto m : {SearchMethod::kGreedy, SearchMethod::kGenetic}) {
    AttackRecipe r = make_recipe("strict", m, t.resources());
    CampaignRun run = campaign(r, t.train.samples);
    seeds = run.report.attempted;
    for (const auto& e : run.report.per_example) {
      if (e.status != AttackStatus::kSuccess) continue;
      ++successes;
      if (!e.grammar_error_delta || *e.grammar_error_delta > 0) ++violations;
    }
  }
  double s = seconds_since(t0);
  return {seeds >= 200 && successes > 0 && violations == 0 && s < 120.0,
          fmt("%.0f seeds x {greedy, genetic}, %.0f successes, %.0f with delta > 0, %.1fs", seeds,
              successes, violations, s)};
}

Verdict rule_fidelity() {
  const auto& lex = *toy().lexicon;
  const std::vector<std::pair<std::string, std::string>> quoted = {
      {"a grates, lanky flick", "A_PLURAL"},    {"can't compares", "DID_BASEFORM"},
      {"they does a ok operating", "NON3PRS_VERB"}, {"we wanting", "PRP_VBG"},
      {"want to knew", "TO_NON_BASE"},          {"we can appreciative", "PRP_MD_NN"},
      {"it game like a readings", "PRP_VB"}};
  const std::vector<std::string> controls = {
      "a great, lanky flick",  "i can't compare",     "they do an ok job",
      "we want it",            "we wanted to know",   "we can appreciate it",
      "it is a game like a reading"};
  std::size_t fired = 0, clean = 0;
  std::string miss;
  for (const auto& [text, rule] : quoted) {
    auto m = check_grammar(lex, tokenize(text));
    if (std::any_of(m.begin(), m.end(), [&](const RuleMatch& r) { return r.rule_id == rule; })) {
      ++fired;
    } else {
      miss += " [" + text + "]";
    }
  }
  for (const auto& text : controls) {
    if (check_grammar(lex, tokenize(text)).empty()) {
      ++clean;
    } else {
      miss += " [" + text + "]";
    }
  }
  return {fired == 7 && clean == 7,
          fmt("%.0f/7 contexts fire their rule, %.0f/7 controls clean", fired, clean) + miss};
}

Verdict tightening_collapse() {
  auto t0 = Clock::now();
  const auto& t = toy();
  auto res = t.resources();
  std::vector<LabeledText> short_seeds;
  for (const auto& s : t.test.samples) {
    if (s.text.size() <= 12) short_seeds.push_back(s);
  }
  auto exhaustive = [&](const std::string& preset) {
    AttackRecipe r = make_recipe(preset, SearchMethod::kExhaustive, res);
    r.search.exhaustive.max_swaps = 3;
    r.search.exhaustive.max_combinations = 5'000'000;
    r.query_budget = 5'000'000;
    return campaign(r, short_seeds);
  };
  CampaignRun el = exhaustive("loose"), es = exhaustive("strict");
  // Per-seed inclusion: a STRICT success must also be a LOOSE success.
  std::size_t not_included = 0, errors = 0;
  for (std::size_t i = 0; i < short_seeds.size(); ++i) {
    if (es.outcomes[i].status == AttackStatus::kSuccess &&
        el.outcomes[i].status != AttackStatus::kSuccess) {
      ++not_included;
    }
    if (!el.outcomes[i].detail.empty() && el.outcomes[i].status == AttackStatus::kFailed) ++errors;
    if (!es.outcomes[i].detail.empty() && es.outcomes[i].status == AttackStatus::kFailed) ++errors;
  }
  AttackRecipe gl = make_recipe("loose", SearchMethod::kGreedy, res);
  AttackRecipe gs = make_recipe("strict", SearchMethod::kGreedy, res);
  double loose = campaign(gl, t.test.samples).report.attack_success_rate;
  double strict = campaign(gs, t.test.samples).report.attack_success_rate;
  double s = seconds_since(t0);
  bool ok = es.report.attack_success_rate <= el.report.attack_success_rate && not_included == 0 &&
            errors == 0 && strict <= 0.7 * loose && s < 300.0;
  return {ok, fmt("exhaustive on %.0f short seeds: strict %.1f%% <= loose %.1f%%", short_seeds.size(),
                  es.report.attack_success_rate, el.report.attack_success_rate) +
                  fmt("; greedy: strict %.1f%% <= 0.7 x loose %.1f%%; %.1fs", strict, loose, s) +
                  (not_included || errors ? fmt(" (%.0f not included, %.0f errors)", not_included,
                                                errors)
                                          : "")};
}

Verdict search_comparison() {
  auto t0 = Clock::now();
  const auto& t = toy();
  auto res = t.resources();
  CampaignReport g = campaign(make_recipe("strict", SearchMethod::kGreedy, res), t.test.samples).report;
  CampaignReport a =
      campaign(make_recipe("strict", SearchMethod::kGenetic, res), t.test.samples).report;
  double s = seconds_since(t0);
  double ratio = g.mean_queries > 0 ? a.mean_queries / g.mean_queries : 0.0;
  bool ok = a.attack_success_rate >= g.attack_success_rate && ratio >= 10.0 && s < 600.0;
  return {ok, fmt("strict preset: genetic %.1f%% vs greedy %.1f%% success; ", a.attack_success_rate,
                  g.attack_success_rate) +
                  fmt("mean queries %.1f vs %.2f (x%.2f); %.1fs", a.mean_queries, g.mean_queries,
                      ratio, s)};
}

// Random clustered vocabulary and a random linear victim over it. Synonyms
// share most of their weight, so single swaps often fall short and some
// instances cannot be flipped at all.
Verdict oracle_dominance() {
  std::mt19937_64 gen(2024);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> len_dist(2, 5);
  std::size_t instances = 0, attacked = 0, violations = 0, exhaustive_wins = 0;
  std::size_t heuristic_successes = 0, exhaustive_successes = 0;
  while (instances < 100) {
    const std::size_t clusters = 6, per = 4, dim = 8;
    std::vector<std::pair<std::string, std::vector<double>>> rows;
    std::unordered_map<std::string, double> weight;
    for (std::size_t c = 0; c < clusters; ++c) {
      std::vector<double> center(dim);
      for (double& v : center) v = g(gen);
      const double cluster_weight = g(gen);
      for (std::size_t k = 0; k < per; ++k) {
        std::vector<double> v = center;
        for (double& x : v) x += 0.25 * g(gen);
        std::string w = "c" + std::to_string(c) + "w" + std::to_string(k);
        weight[w] = cluster_weight + 0.6 * g(gen);
        rows.emplace_back(w, v);
      }
    }
    auto store = testing::make_store(rows);
    double bias = 1.5 * g(gen);
    testing::FunctionVictim victim([&weight, bias](std::span<const std::string> toks) {
      double z = bias;
      for (const auto& w : toks) {
        auto it = weight.find(w);
        if (it != weight.end()) z += it->second;
      }
      return z;
    });
    std::size_t len = static_cast<std::size_t>(len_dist(gen));
    std::vector<std::string> toks;
    for (std::size_t i = 0; i < len; ++i) toks.push_back(rows[gen() % rows.size()].first);
    TokenizedText x = tokenize([&] {
      std::string s;
      for (const auto& w : toks) s += (s.empty() ? "" : " ") + w;
      return s;
    }());
    int label = static_cast<int>(argmax(victim.predict_proba(x)));
    ++instances;

    AttackRecipe r;
    r.store = store;
    r.constraints = ConstraintSet(
        "random", {std::make_shared<WordEmbeddingDistance>(store, 0.5),
                   std::make_shared<MaxWordsPerturbed>(len > 2 ? len - 1 : len)});
    auto run = [&](SearchMethod m) {
      AttackRecipe rr = r;
      rr.search.method = m;
      rr.search.exhaustive.max_swaps = len;
      rr.search.genetic.population_size = 20;
      rr.search.genetic.generations = 10;
      rr.query_budget = 100000;
      QueryCounter c(victim);
      AttackOutcome o = run_attack(c, rr, x, label, instances);
      produced.push_back({rr, {o}});
      return o.status;
    };
    AttackStatus ex = run(SearchMethod::kExhaustive);
    AttackStatus gr = run(SearchMethod::kGreedy);
    AttackStatus ge = run(SearchMethod::kGenetic);
    ++attacked;
    if (ex == AttackStatus::kSuccess) ++exhaustive_successes;
    for (AttackStatus h : {gr, ge}) {
      if (h == AttackStatus::kSuccess) ++heuristic_successes;
      if (h == AttackStatus::kSuccess && ex != AttackStatus::kSuccess) ++violations;
      if (ex == AttackStatus::kFailed && h != AttackStatus::kFailed) ++violations;
    }
    if (ex == AttackStatus::kSuccess && (gr != AttackStatus::kSuccess || ge != AttackStatus::kSuccess)) {
      ++exhaustive_wins;
    }
  }
  return {violations == 0 && heuristic_successes > 0,
          fmt("%.0f instances, exhaustive solves %.0f, heuristic successes %.0f/200, ", attacked,
              exhaustive_successes, heuristic_successes) +
              fmt("%.0f solved by exhaustive only, %.0f violations", exhaustive_wins, violations)};
}

Verdict validity_recheck() {
  std::size_t successes = 0, invalid = 0;
  std::string first;
  for (const auto& p : produced) {
    for (const auto& o : p.outcomes) {
      if (o.status != AttackStatus::kSuccess) continue;
      ++successes;
      // Random-instance outcomes come from their own victims; those are
      // re-checked against the constraints only.
      const VictimModel* model = toy().model.get();
      if (p.recipe.store != toy().store) {
        bool ok = o.x_adv && apply_swaps(o.x, o.swaps) == *o.x_adv;
        for (const auto& v : ok ? p.recipe.constraints.check_all(o.x, *o.x_adv)
                                : std::vector<ConstraintVerdict>{}) {
          ok = ok && v.passed;
        }
        if (!ok) ++invalid;
        continue;
      }
      Verification ver = verify_outcome(*model, p.recipe, o);
      if (!ver.ok) {
        ++invalid;
        if (first.empty() && !ver.problems.empty()) first = ver.problems.front();
      }
    }
  }
  return {successes > 0 && invalid == 0,
          fmt("%.0f successes re-checked, %.0f invalid", successes, invalid) +
              (first.empty() ? "" : " (" + first + ")")};
}

Verdict victim_plumbing() {
  const auto& t = toy();
  double acc = accuracy(*t.model, t.test.samples);
  std::vector<std::vector<double>> feats;
  std::vector<int> labels;
  for (const auto& s : t.train.samples) {
    feats.push_back(t.model->features(s.text.tokens()));
    labels.push_back(s.label);
  }
  SoftmaxObjective obj(feats, labels, 2, 1e-4);
  std::vector<double> params = t.model->weights();
  params.insert(params.end(), t.model->bias().begin(), t.model->bias().end());
  std::mt19937_64 gen(8);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int trial = 0; trial < 2; ++trial) {
    std::vector<double> p = params;
    if (trial == 1) {
      for (double& v : p) v = 0.5 * g(gen);
    }
    std::vector<double> grad(p.size());
    obj.loss_and_gradient(p, grad);
    const double h = 1e-5;
    for (std::size_t k = 0; k < p.size(); ++k) {
      auto up = p, down = p;
      up[k] += h;
      down[k] -= h;
      double fd = (obj.loss(up) - obj.loss(down)) / (2 * h);
      double rel = std::abs(grad[k] - fd) / std::max({std::abs(grad[k]), std::abs(fd), 1e-3});
      worst = std::max(worst, rel);
    }
  }
  return {acc >= 75.0 && worst <= 1e-4,
          fmt("held-out accuracy %.1f%%, max gradient relative error %.2e", acc, worst)};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict determinism() {
  fs::path dir = fs::temp_directory_path() / "advtext_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string config = (testing::source_dir() / "configs" / "toy.json").string();
  std::string sizes;
  bool ok = true;
  for (const char* search : {"greedy", "genetic"}) {
    std::vector<std::string> bodies;
    for (const char* workers : {"1", "3"}) {
      fs::path out = dir / (std::string(search) + "_" + workers + ".json");
      std::vector<std::string> args = {"advtext", "attack",  "--config", config,   "--search",
                                       search,    "--workers", workers,  "--out",  out.string()};
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream so, se;
      int code = cli::run(static_cast<int>(argv.size()), argv.data(), so, se);
      if (code != 0) {
        ok = false;
        sizes += std::string(" ") + search + " exit " + std::to_string(code) + ": " + se.str();
      }
      bodies.push_back(read_file(out));
    }
    ok = ok && !bodies[0].empty() && bodies[0] == bodies[1];
    sizes += std::string(" ") + search + " " + std::to_string(bodies[0].size()) + " bytes " +
             (bodies[0] == bodies[1] ? "identical" : "DIFFER");
  }
  fs::remove_all(dir);
  return {ok, "workers 1 vs 3:" + sizes};
}

Verdict suspicion_sanity() {
  const auto& t = toy();
  std::vector<TokenizedText> all;
  for (const auto& s : t.train.samples) all.push_back(s.text);
  for (const auto& s : t.test.samples) all.push_back(s.text);
  const std::string sentinel = "wape";
  for (const auto& x : all) {
    for (const auto& w : x.tokens()) {
      if (w == sentinel) return {false, "sentinel occurs in the toy corpus"};
    }
  }
  if (!t.store->contains(sentinel)) return {false, "sentinel is not in the vocabulary"};
  // Mean over five random real/real partitions; one split has only 60
  // held-out texts, so a single run is noisy.
  double rr_sum = 0.0, st_min = 100.0;
  std::string per;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::vector<TokenizedText> shuffled = all;
    std::mt19937_64 gen(seed);
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    std::vector<TokenizedText> a(shuffled.begin(), shuffled.begin() + 150);
    std::vector<TokenizedText> b(shuffled.begin() + 150, shuffled.end());
    double rr = train_suspicion_classifier(t.store, a, b, seed).accuracy;
    std::vector<TokenizedText> marked;
    for (const auto& x : b) marked.push_back(tokenize(x.text() + " " + sentinel));
    double st = train_suspicion_classifier(t.store, a, marked, seed).accuracy;
    rr_sum += rr;
    st_min = std::min(st_min, st);
    per += fmt(" %.1f/%.1f", rr, st);
  }
  double rr_mean = rr_sum / 5.0;
  return {std::abs(rr_mean - 50.0) <= 10.0 && st_min >= 95.0,
          fmt("real-vs-real mean %.1f%%, sentinel min %.1f%% (per split:", rr_mean, st_min) + per +
              ")"};
}

}  // namespace
}  // namespace advtext

int main() {
  using namespace advtext;
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria = {
      {1, filter_equivalence}, {2, grammar_gate},       {3, rule_fidelity},
      {4, tightening_collapse}, {5, search_comparison}, {6, oracle_dominance},
      {7, validity_recheck},    {8, victim_plumbing},   {9, determinism},
      {10, suspicion_sanity}};
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
