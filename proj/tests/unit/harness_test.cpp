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

#include <gtest/gtest.h>

#include "advtext/errors.hpp"
#include "advtext/recipe.hpp"
#include "fixtures.hpp"

namespace advtext {
namespace {

using testing::FunctionVictim;
using testing::make_store;
using testing::toy;

std::shared_ptr<const EmbeddingStore> mini_store() {
  return make_store({{"riveting", {1, 0.2, 0}}, {"baffling", {1, -0.3, 0}}, {"movie", {0, 0, 1}}});
}

double sentiment(std::span<const std::string> t) {
  double z = 0;
  for (const auto& w : t) z += w == "riveting" ? 3 : w == "baffling" ? -3 : 0;
  return z;
}

AttackRecipe mini_recipe() {
  AttackRecipe r;
  r.store = mini_store();
  r.constraints = ConstraintSet("mini", {std::make_shared<WordEmbeddingDistance>(r.store, 0.5),
                                         std::make_shared<StopwordModification>()});
  return r;
}

class AlwaysPass : public Constraint {
 public:
  std::string id() const override { return "always"; }
  ConstraintVerdict check(const TokenizedText&, const TokenizedText&,
                          std::span<const SwapRecord>) const override {
    return {true, id(), std::nullopt, ""};
  }
};

std::vector<LabeledText> head(const std::vector<LabeledText>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

TEST(Summarize, RateFromHandBuiltOutcomes) {
  AttackRecipe r = mini_recipe();
  std::vector<AttackOutcome> outs;
  for (int i = 0; i < 10; ++i) {
    AttackOutcome o;
    o.x = tokenize("a riveting movie");
    o.original_label = 1;
    o.queries = static_cast<std::size_t>(i + 1);
    if (i < 4) {
      o.status = AttackStatus::kSuccess;
      o.x_adv = tokenize("a baffling movie");
      o.swaps = swaps_between(o.x, *o.x_adv);
    } else if (i < 6) {
      o.status = AttackStatus::kSkippedMisclassified;
    } else {
      o.status = AttackStatus::kFailed;
    }
    outs.push_back(o);
  }
  CampaignReport rep = summarize(r, outs, {});
  EXPECT_EQ(rep.attempted, 10u);
  EXPECT_EQ(rep.skipped, 2u);
  EXPECT_EQ(rep.successes, 4u);
  EXPECT_DOUBLE_EQ(rep.attack_success_rate, 50.0);
  EXPECT_DOUBLE_EQ(rep.after_attack_accuracy, 40.0);
  // Non-skipped queries: 1+2+3+4+7+8+9+10 over 8 seeds.
  EXPECT_DOUBLE_EQ(rep.mean_queries, 44.0 / 8.0);
  EXPECT_NEAR(rep.mean_perturbed_word_pct, 100.0 / 3.0, 1e-12);
  EXPECT_TRUE(validate_report(rep).empty());
  rep.successes = 5;
  EXPECT_FALSE(validate_report(rep).empty());
}

TEST(Campaign, FourOfTenSucceed) {
  FunctionVictim v(sentiment);
  std::vector<LabeledText> seeds;
  for (int i = 0; i < 4; ++i) seeds.push_back({tokenize("a riveting movie w" + std::to_string(i)), 1});
  for (int i = 0; i < 6; ++i) seeds.push_back({tokenize("a movie w" + std::to_string(i)), 0});
  CampaignReport rep = run_campaign(v, mini_recipe(), seeds, {});
  EXPECT_EQ(rep.successes, 4u);
  EXPECT_EQ(rep.failed, 6u);
  EXPECT_DOUBLE_EQ(rep.attack_success_rate, 40.0);
  EXPECT_DOUBLE_EQ(rep.after_attack_accuracy, 60.0);
  ASSERT_EQ(rep.per_example.size(), 10u);
  EXPECT_EQ(rep.per_example[0].adversarial_text, "a baffling movie w0");
  EXPECT_EQ(rep.per_example[0].swap_count, 1u);
  EXPECT_FALSE(rep.per_example[5].adversarial_text.has_value());
}

TEST(Campaign, EverySeedMisclassified) {
  FunctionVictim v(sentiment);
  std::vector<LabeledText> seeds = {{tokenize("a riveting movie"), 0},
                                    {tokenize("a baffling movie"), 1}};
  CampaignReport rep = run_campaign(v, mini_recipe(), seeds, {});
  EXPECT_TRUE(rep.skipped_all);
  EXPECT_EQ(rep.skipped, 2u);
  EXPECT_DOUBLE_EQ(rep.attack_success_rate, 0.0);
  EXPECT_DOUBLE_EQ(rep.after_attack_accuracy, 0.0);
  EXPECT_TRUE(validate_report(rep).empty());
}

TEST(Campaign, ErrorsBecomeFailedSeeds) {
  FunctionVictim v(sentiment);
  AttackRecipe r = mini_recipe();
  r.search.method = SearchMethod::kExhaustive;
  r.search.exhaustive.max_combinations = 0;
  std::vector<LabeledText> seeds = {{tokenize("a riveting movie"), 1}};
  CampaignReport rep = run_campaign(v, r, seeds, {});
  EXPECT_EQ(rep.failed, 1u);
  EXPECT_FALSE(rep.per_example[0].detail.empty());
}

TEST(Campaign, WorkerCountDoesNotChangeResults) {
  const auto& t = toy();
  auto seeds = head(t.test.samples, 24);
  AttackRecipe r = make_recipe("loose", SearchMethod::kGenetic, t.resources());
  r.search.genetic.population_size = 10;
  r.search.genetic.generations = 3;
  CampaignOptions one, three;
  one.rng_seed = three.rng_seed = 9;
  three.workers = 3;
  one.lexicon = three.lexicon = t.lexicon.get();
  CampaignReport a = run_campaign(*t.model, r, seeds, one);
  CampaignReport b = run_campaign(*t.model, r, seeds, three);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.grammar_error_pct.has_value());
  EXPECT_TRUE(validate_report(a).empty());
}

TEST(Ablation, OneRowPerConstraint) {
  const auto& t = toy();
  auto seeds = head(t.test.samples, 20);
  AttackRecipe r = make_recipe("strict", SearchMethod::kGreedy, t.resources());
  AblationReport rep = run_ablation(*t.model, r, seeds, {});
  ASSERT_EQ(rep.rows.size(), 5u);
  EXPECT_EQ(rep.rows[0].removed, "word_embedding");
  EXPECT_DOUBLE_EQ(rep.baseline_success_rate,
                   run_campaign(*t.model, r, seeds, {}).attack_success_rate);
  for (const auto& row : rep.rows) {
    EXPECT_DOUBLE_EQ(row.delta, row.success_rate - rep.baseline_success_rate);
  }
  EXPECT_FALSE(rep.findings.empty());
  AttackRecipe single = r;
  single.constraints = ConstraintSet("one", {r.constraints.constraints()[0]});
  EXPECT_THROW(run_ablation(*t.model, single, seeds, {}), ConfigError);
}

TEST(Ablation, ExhaustiveSearchIsMonotone) {
  const auto& t = toy();
  std::vector<LabeledText> seeds;
  for (const auto& s : t.test.samples) {
    if (s.text.size() <= 10 && seeds.size() < 15) seeds.push_back(s);
  }
  AttackRecipe r = make_recipe("strict", SearchMethod::kExhaustive, t.resources());
  r.search.exhaustive.max_swaps = 1;
  CampaignRun base = run_campaign_detailed(*t.model, r, seeds, {});
  for (std::size_t i = 0; i < r.constraints.size(); ++i) {
    AttackRecipe reduced = r;
    reduced.constraints = r.constraints.without(i);
    CampaignRun less = run_campaign_detailed(*t.model, reduced, seeds, {});
    EXPECT_GE(less.report.attack_success_rate, base.report.attack_success_rate);
    for (std::size_t k = 0; k < seeds.size(); ++k) {
      if (base.outcomes[k].status == AttackStatus::kSuccess) {
        EXPECT_EQ(less.outcomes[k].status, AttackStatus::kSuccess) << "seed " << k;
      }
    }
  }
}

TEST(Ablation, AllPassConstraintChangesNothing) {
  const auto& t = toy();
  auto seeds = head(t.test.samples, 15);
  AttackRecipe r = make_recipe("loose", SearchMethod::kGreedy, t.resources());
  auto with = r.constraints.constraints();
  with.push_back(std::make_shared<AlwaysPass>());
  AttackRecipe r2 = r;
  r2.constraints = ConstraintSet("loose+always", with);
  CampaignReport a = run_campaign(*t.model, r, seeds, {});
  CampaignReport b = run_campaign(*t.model, r2, seeds, {});
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_DOUBLE_EQ(a.mean_queries, b.mean_queries);
  AblationReport rep = run_ablation(*t.model, r2, seeds, {});
  EXPECT_EQ(rep.rows.back().removed, "always");
  EXPECT_DOUBLE_EQ(rep.rows.back().delta, 0.0);
}

TEST(Comparison, TwoByTwoGrid) {
  const auto& t = toy();
  auto seeds = head(t.test.samples, 10);
  auto res = t.resources();
  std::vector<AttackRecipe> presets = {make_recipe("loose", SearchMethod::kGreedy, res),
                                       make_recipe("strict", SearchMethod::kGreedy, res)};
  for (auto& p : presets) {
    p.search.genetic.population_size = 8;
    p.search.genetic.generations = 2;
  }
  ComparisonReport rep = compare_search_methods(
      *t.model, presets, {SearchMethod::kGreedy, SearchMethod::kGenetic}, seeds, {});
  ASSERT_EQ(rep.cells.size(), 4u);
  EXPECT_EQ(rep.cells[1].preset, "loose");
  EXPECT_EQ(rep.cells[1].search, "genetic");
  const ComparisonCell* c = rep.cell("strict", "greedy");
  ASSERT_NE(c, nullptr);
  EXPECT_DOUBLE_EQ(c->attack_success_rate,
                   run_campaign(*t.model, presets[1], seeds, {}).attack_success_rate);
  EXPECT_EQ(rep.cell("strict", "beam"), nullptr);
  EXPECT_THROW(compare_search_methods(*t.model, {}, {SearchMethod::kGreedy}, seeds, {}),
               ConfigError);
}

TEST(Augment, ShapesAndSizes) {
  const auto& t = toy();
  auto train_set = head(t.train.samples, 40);
  AttackRecipe r = make_recipe("loose", SearchMethod::kGreedy, t.resources());
  AugmentOptions o;
  o.hyper.epochs = 80;
  o.run_seeds = {0, 1};
  AugmentReport rep = augment_and_retrain(train_set, t.test.samples, t.store, r, o);
  EXPECT_EQ(rep.epochs, 80u);
  EXPECT_EQ(rep.train_size, 40u);
  ASSERT_EQ(rep.runs.size(), 2u);
  for (const auto& run : rep.runs) {
    EXPECT_EQ(run.original_accuracy.size(), 80u);
    EXPECT_EQ(run.augmented_accuracy.size(), 80u);
    EXPECT_EQ(run.augmented_size, 40u + run.successes);
    EXPECT_GT(run.successes, 0u);
  }
  EXPECT_EQ(rep.original_mean.size(), 80u);
  EXPECT_EQ(rep.augmented_std.size(), 80u);
  EXPECT_NEAR(rep.original_mean[0],
              0.5 * (rep.runs[0].original_accuracy[0] + rep.runs[1].original_accuracy[0]), 1e-12);
  EXPECT_FALSE(rep.zero_successes);
}

TEST(Augment, NoSuccessesKeepsOriginalCurve) {
  const auto& t = toy();
  auto train_set = head(t.train.samples, 30);
  AttackRecipe r = make_recipe("loose", SearchMethod::kGreedy, t.resources());
  auto cs = r.constraints.constraints();
  cs.push_back(std::make_shared<MaxWordsPerturbed>(0));
  r.constraints = ConstraintSet("frozen", cs);
  AugmentOptions o;
  o.hyper.epochs = 4;
  o.run_seeds = {5};
  AugmentReport rep = augment_and_retrain(train_set, t.test.samples, t.store, r, o);
  EXPECT_TRUE(rep.zero_successes);
  EXPECT_EQ(rep.runs[0].successes, 0u);
  EXPECT_EQ(rep.runs[0].augmented_accuracy, rep.runs[0].original_accuracy);
  EXPECT_EQ(rep.original_std, std::vector<double>(4, 0.0));
}

TEST(Suspicion, AccuracyInRangeAndSplitSizes) {
  const auto& t = toy();
  std::vector<TokenizedText> real, perturbed;
  for (std::size_t i = 0; i < t.test.samples.size(); ++i) {
    (i % 2 ? real : perturbed).push_back(t.test.samples[i].text);
  }
  SuspicionReport rep = train_suspicion_classifier(t.store, real, perturbed, 1);
  EXPECT_GE(rep.accuracy, 0.0);
  EXPECT_LE(rep.accuracy, 100.0);
  EXPECT_EQ(rep.train_size + rep.test_size, 100u);
  EXPECT_EQ(rep.test_size, 20u);
  EXPECT_FALSE(rep.rebalanced);
}

TEST(Suspicion, ExtremeImbalanceIsDownsampled) {
  const auto& t = toy();
  std::vector<TokenizedText> real, perturbed;
  for (std::size_t i = 0; i < 60; ++i) real.push_back(t.test.samples[i].text);
  for (std::size_t i = 60; i < 65; ++i) perturbed.push_back(t.test.samples[i].text);
  SuspicionReport rep = train_suspicion_classifier(t.store, real, perturbed, 1);
  EXPECT_TRUE(rep.rebalanced);
  EXPECT_EQ(rep.train_size + rep.test_size, 10u);
  EXPECT_FALSE(rep.note.empty());
  EXPECT_THROW(train_suspicion_classifier(t.store, real, {}, 1), DegenerateDataset);
}

TEST(GrammarEval, CountsPositiveDeltas) {
  GrammarEvalReport rep = evaluate_grammar_pairs(
      *toy().lexicon, {{"they compare it", "they compares it"}, {"a good movie", "a fine movie"}});
  ASSERT_EQ(rep.pairs.size(), 2u);
  EXPECT_EQ(rep.pairs[0].delta, 1);
  EXPECT_EQ(rep.pairs[0].new_rules, std::vector<std::string>{"NON3PRS_VERB"});
  EXPECT_EQ(rep.pairs[1].delta, 0);
  EXPECT_EQ(rep.positive, 1u);
  EXPECT_DOUBLE_EQ(rep.positive_pct, 50.0);
}

}  // namespace
}  // namespace advtext
