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

#ifndef ADVTEXT_SEARCH_HPP_
#define ADVTEXT_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "advtext/constraints.hpp"
#include "advtext/embedding.hpp"
#include "advtext/goal.hpp"
#include "advtext/text.hpp"
#include "advtext/victim.hpp"

namespace advtext {

enum class SearchMethod { kGreedy, kGenetic, kExhaustive };

// kRandom draws one random (position, candidate) pair per mutation. kBest
// picks a random position and keeps the highest-scoring candidate there,
// which costs one query per candidate.
enum class MutationStrategy { kRandom, kBest };

struct GeneticParams {
  std::size_t population_size = 60;
  std::size_t generations = 20;
  std::uint64_t seed = 0;
  MutationStrategy mutation = MutationStrategy::kRandom;
  // Draws per mutation before giving up and leaving the member unchanged.
  std::size_t mutation_attempts = 20;
};

struct ExhaustiveParams {
  std::size_t max_swaps = 3;
  std::uint64_t max_combinations = 1'000'000;
};

struct SearchConfig {
  SearchMethod method = SearchMethod::kGreedy;
  GeneticParams genetic;
  ExhaustiveParams exhaustive;
};

struct AttackRecipe {
  // Swap candidates: the max_candidates nearest neighbors of the original
  // word, then filtered by the swap constraints in `constraints`.
  std::shared_ptr<const EmbeddingStore> store;
  std::size_t max_candidates = 50;
  ConstraintSet constraints;
  GoalKind goal = GoalKind::kUntargeted;
  std::optional<int> target_label;
  SearchConfig search;
  std::size_t query_budget = 20000;
};

// Throws ConfigError on an unusable recipe.
void validate_recipe(const AttackRecipe& recipe);

enum class AttackStatus { kSuccess, kFailed, kSkippedMisclassified, kBudgetExhausted };

std::string_view status_name(AttackStatus status);
std::optional<AttackStatus> parse_status(std::string_view name);
std::string_view search_name(SearchMethod method);
// Throws ConfigError naming the valid ids.
SearchMethod parse_search(std::string_view name);
const std::vector<std::string>& search_names();

struct AttackOutcome {
  AttackStatus status = AttackStatus::kFailed;
  TokenizedText x;
  std::optional<TokenizedText> x_adv;
  std::vector<SwapRecord> swaps;
  std::size_t queries = 0;
  int original_label = 0;
  int final_label = 0;
  double final_score = 0.0;
  std::string detail;
};

GoalFunction make_goal(const AttackRecipe& recipe, int original_label);

std::vector<SwapRecord> candidate_swaps(const EmbeddingStore& store,
                                        const ConstraintSet& constraints, const TokenizedText& x,
                                        std::size_t index, std::size_t max_candidates = 50);

// Deletion importance, highest first. Stopword and out-of-vocabulary
// indices are left out.
std::vector<std::size_t> rank_word_importance(QueryCounter& counter, const GoalFunction& goal,
                                              const TokenizedText& x,
                                              const EmbeddingStore& store);

AttackOutcome greedy_wir_search(QueryCounter& counter, const GoalFunction& goal,
                                const AttackRecipe& recipe, const TokenizedText& x);

AttackOutcome genetic_search(QueryCounter& counter, const GoalFunction& goal,
                             const AttackRecipe& recipe, const TokenizedText& x,
                             const GeneticParams& hyper);

// Throws InstanceTooLarge when the number of combinations exceeds
// hyper.max_combinations.
AttackOutcome exhaustive_search(QueryCounter& counter, const GoalFunction& goal,
                                const AttackRecipe& recipe, const TokenizedText& x,
                                const ExhaustiveParams& hyper);

// Dispatches on recipe.search.method. `seed` replaces the genetic seed.
AttackOutcome run_attack(QueryCounter& counter, const AttackRecipe& recipe,
                         const TokenizedText& x, int label, std::uint64_t seed);

struct Verification {
  bool ok = true;
  std::vector<std::string> problems;
};

// Re-derives a Success from scratch: the swaps rebuild x_adv, the goal holds
// on a fresh prediction, and every constraint passes on (x, x_adv).
// Non-success outcomes verify trivially.
Verification verify_outcome(const VictimModel& model, const AttackRecipe& recipe,
                            const AttackOutcome& outcome);

}  // namespace advtext

#endif  // ADVTEXT_SEARCH_HPP_
