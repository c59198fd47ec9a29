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

#ifndef ADVTEXT_HARNESS_HPP_
#define ADVTEXT_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "advtext/pos.hpp"
#include "advtext/search.hpp"
#include "advtext/victim.hpp"

namespace advtext {

struct ExampleSummary {
  std::size_t index = 0;
  AttackStatus status = AttackStatus::kFailed;
  int original_label = 0;
  int final_label = 0;
  std::size_t queries = 0;
  std::size_t swap_count = 0;
  double perturbed_word_pct = 0.0;
  std::string original_text;
  std::optional<std::string> adversarial_text;
  std::optional<int> grammar_error_delta;
  std::string detail;

  bool operator==(const ExampleSummary&) const = default;
};

struct CampaignReport {
  std::string preset;
  std::string search;
  std::uint64_t rng_seed = 0;
  std::size_t attempted = 0;
  std::size_t skipped = 0;
  std::size_t successes = 0;
  std::size_t failed = 0;
  std::size_t budget_exhausted = 0;
  double attack_success_rate = 0.0;
  double after_attack_accuracy = 0.0;
  double mean_perturbed_word_pct = 0.0;
  double mean_queries = 0.0;
  // Every seed was misclassified, so the success rate is reported as 0.
  bool skipped_all = false;
  // Share of successes with a positive grammar delta, when a lexicon is given.
  std::optional<double> grammar_error_pct;
  std::vector<ExampleSummary> per_example;

  bool operator==(const CampaignReport&) const = default;
};

struct CampaignOptions {
  std::size_t workers = 1;
  std::uint64_t rng_seed = 0;
  const PosLexicon* lexicon = nullptr;
};

struct CampaignRun {
  CampaignReport report;
  std::vector<AttackOutcome> outcomes;
};

// Outcomes are ordered by seed index; example i draws its randomness from
// derive_seed(rng_seed, i), so results do not depend on the worker count.
CampaignRun run_campaign_detailed(const VictimModel& victim, const AttackRecipe& recipe,
                                  std::span<const LabeledText> seeds,
                                  const CampaignOptions& options);
CampaignReport run_campaign(const VictimModel& victim, const AttackRecipe& recipe,
                            std::span<const LabeledText> seeds, const CampaignOptions& options);

// Aggregates outcomes into a report; exposed for tests and re-aggregation.
CampaignReport summarize(const AttackRecipe& recipe, std::span<const AttackOutcome> outcomes,
                         const CampaignOptions& options);

// Empty when the metric identities hold.
std::vector<std::string> validate_report(const CampaignReport& report);

struct AblationRow {
  std::string removed;
  double success_rate = 0.0;
  double delta = 0.0;
  double mean_queries = 0.0;

  bool operator==(const AblationRow&) const = default;
};

struct AblationReport {
  std::string preset;
  std::string search;
  double baseline_success_rate = 0.0;
  std::vector<AblationRow> rows;
  std::vector<std::string> findings;

  bool operator==(const AblationReport&) const = default;
};

// One campaign per removed constraint, same seeds and seeding as baseline.
AblationReport run_ablation(const VictimModel& victim, const AttackRecipe& recipe,
                            std::span<const LabeledText> seeds, const CampaignOptions& options);

struct ComparisonCell {
  std::string preset;
  std::string search;
  std::size_t attempted = 0;
  std::size_t skipped = 0;
  std::size_t successes = 0;
  double attack_success_rate = 0.0;
  double mean_perturbed_word_pct = 0.0;
  double mean_queries = 0.0;

  bool operator==(const ComparisonCell&) const = default;
};

struct ComparisonReport {
  std::vector<std::string> presets;
  std::vector<std::string> searches;
  std::vector<ComparisonCell> cells;  // preset-major

  const ComparisonCell* cell(const std::string& preset, const std::string& search) const;
  bool operator==(const ComparisonReport&) const = default;
};

ComparisonReport compare_search_methods(const VictimModel& victim,
                                        const std::vector<AttackRecipe>& presets,
                                        const std::vector<SearchMethod>& searches,
                                        std::span<const LabeledText> seeds,
                                        const CampaignOptions& options);

struct AugmentRun {
  std::uint64_t seed = 0;
  std::size_t successes = 0;
  std::size_t augmented_size = 0;
  std::vector<double> original_accuracy;
  std::vector<double> augmented_accuracy;

  bool operator==(const AugmentRun&) const = default;
};

struct AugmentReport {
  std::size_t epochs = 0;
  std::size_t train_size = 0;
  std::vector<AugmentRun> runs;
  std::vector<double> original_mean;
  std::vector<double> original_std;
  std::vector<double> augmented_mean;
  std::vector<double> augmented_std;
  // Some run found no adversarial examples, so its trajectories coincide.
  bool zero_successes = false;

  bool operator==(const AugmentReport&) const = default;
};

struct AugmentOptions {
  TrainHyper hyper;
  std::vector<std::uint64_t> run_seeds = {0, 1, 2};
  std::size_t workers = 1;
};

// Per run seed: train on train_set, attack the training seeds, append each
// successful x_adv under its original label, retrain from scratch, and
// record test accuracy after every epoch for both models.
AugmentReport augment_and_retrain(std::span<const LabeledText> train_set,
                                  std::span<const LabeledText> test_set,
                                  std::shared_ptr<const EmbeddingStore> store,
                                  const AttackRecipe& recipe, const AugmentOptions& options);

struct SuspicionReport {
  double accuracy = 0.0;
  std::size_t real_count = 0;
  std::size_t perturbed_count = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  bool rebalanced = false;
  std::string note;

  bool operator==(const SuspicionReport&) const = default;
};

inline constexpr double kMaxClassRatio = 10.0;

// The detector trains longer than the victim; at the victim's 300 epochs it is
// still far from converged on easily separable inputs.
inline TrainHyper suspicion_hyper() {
  TrainHyper h;
  h.epochs = 1000;
  return h;
}

// Real (0) versus perturbed (1) texts, stratified 80/20 split. Held-out
// accuracy near 50 means the perturbations are not detectable this way.
SuspicionReport train_suspicion_classifier(std::shared_ptr<const EmbeddingStore> store,
                                           std::span<const TokenizedText> real,
                                           std::span<const TokenizedText> perturbed,
                                           std::uint64_t split_seed,
                                           const TrainHyper& hyper = suspicion_hyper());

struct GrammarPair {
  std::string original;
  std::string perturbed;
  int errors_before = 0;
  int errors_after = 0;
  int delta = 0;
  std::vector<std::string> new_rules;

  bool operator==(const GrammarPair&) const = default;
};

struct GrammarEvalReport {
  std::vector<GrammarPair> pairs;
  std::size_t positive = 0;
  double positive_pct = 0.0;

  bool operator==(const GrammarEvalReport&) const = default;
};

GrammarEvalReport evaluate_grammar_pairs(
    const PosLexicon& lexicon, const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace advtext

#endif  // ADVTEXT_HARNESS_HPP_
