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

#include "advtext/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "advtext/errors.hpp"
#include "advtext/rng.hpp"

namespace advtext {

namespace {

// Installs a per-search query cap on the counter and restores the previous
// cap on exit.
class BudgetScope {
 public:
  BudgetScope(QueryCounter& counter, std::size_t budget)
      : counter_(counter), start_(counter.count()), saved_(counter.limit()) {
    std::size_t cap = start_ + budget;
    if (saved_) cap = std::min(cap, *saved_);
    counter_.set_limit(cap);
  }
  ~BudgetScope() { counter_.set_limit(saved_); }
  std::size_t used() const { return counter_.count() - start_; }

 private:
  QueryCounter& counter_;
  std::size_t start_;
  std::optional<std::size_t> saved_;
};

GoalResult evaluate(QueryCounter& counter, const GoalFunction& goal, const TokenizedText& t) {
  return goal.evaluate(counter.predict(t));
}

AttackOutcome base_outcome(const TokenizedText& x, const GoalFunction& goal) {
  AttackOutcome out;
  out.x = x;
  out.original_label = goal.original_label();
  out.final_label = goal.original_label();
  return out;
}

// Shared prologue: the initial prediction. Returns false when x is already
// misclassified.
bool check_seed(QueryCounter& counter, const GoalFunction& goal, const TokenizedText& x,
                AttackOutcome& out, GoalResult& initial) {
  std::vector<double> probs = counter.predict(x);
  initial = goal.evaluate(probs);
  out.final_label = initial.predicted_label;
  out.final_score = initial.score;
  if (initial.predicted_label != goal.original_label()) {
    out.status = AttackStatus::kSkippedMisclassified;
    out.detail = "seed already misclassified";
    return false;
  }
  return true;
}

void set_success(AttackOutcome& out, const TokenizedText& x, const TokenizedText& x_adv,
                 const GoalResult& r) {
  out.status = AttackStatus::kSuccess;
  out.x_adv = x_adv;
  out.swaps = swaps_between(x, x_adv);
  out.final_label = r.predicted_label;
  out.final_score = r.score;
}

template <typename Body>
AttackOutcome guarded(QueryCounter& counter, const AttackRecipe& recipe, const TokenizedText& x,
                      const GoalFunction& goal, Body&& body) {
  BudgetScope scope(counter, recipe.query_budget);
  AttackOutcome out = base_outcome(x, goal);
  try {
    body(out);
  } catch (const BudgetExhausted&) {
    AttackOutcome partial = base_outcome(x, goal);
    partial.status = AttackStatus::kBudgetExhausted;
    partial.detail = "query budget of " + std::to_string(recipe.query_budget) + " exhausted";
    partial.final_label = out.final_label;
    partial.final_score = out.final_score;
    out = std::move(partial);
  }
  out.queries = scope.used();
  return out;
}

std::vector<std::vector<SwapRecord>> all_candidates(const AttackRecipe& recipe,
                                                    const TokenizedText& x) {
  std::vector<std::vector<SwapRecord>> cands(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    cands[i] = candidate_swaps(*recipe.store, recipe.constraints, x, i, recipe.max_candidates);
  }
  return cands;
}

TokenizedText replace_token(const TokenizedText& t, std::size_t index, const std::string& word) {
  std::vector<std::string> tokens = t.tokens();
  tokens[index] = word;
  return t.with_tokens(std::move(tokens));
}

bool better(const GoalResult& a, const GoalResult& b) {
  if (a.succeeded != b.succeeded) return a.succeeded;
  return a.score > b.score;
}

}  // namespace

void validate_recipe(const AttackRecipe& recipe) {
  if (!recipe.store) throw ConfigError("recipe has no embedding store");
  if (recipe.query_budget < 1) throw ConfigError("query_budget must be >= 1");
  if (recipe.max_candidates < 1) throw ConfigError("max_candidates must be >= 1");
  if (recipe.goal == GoalKind::kTargeted && !recipe.target_label) {
    throw ConfigError("targeted goal requires a target label");
  }
  if (recipe.search.method == SearchMethod::kGenetic &&
      recipe.search.genetic.population_size < 2) {
    throw ConfigError("population_size must be >= 2");
  }
}

std::string_view status_name(AttackStatus status) {
  switch (status) {
    case AttackStatus::kSuccess: return "success";
    case AttackStatus::kFailed: return "failed";
    case AttackStatus::kSkippedMisclassified: return "skipped_misclassified";
    case AttackStatus::kBudgetExhausted: return "budget_exhausted";
  }
  return "failed";
}

std::optional<AttackStatus> parse_status(std::string_view name) {
  for (AttackStatus s : {AttackStatus::kSuccess, AttackStatus::kFailed,
                         AttackStatus::kSkippedMisclassified, AttackStatus::kBudgetExhausted}) {
    if (status_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view search_name(SearchMethod method) {
  switch (method) {
    case SearchMethod::kGreedy: return "greedy";
    case SearchMethod::kGenetic: return "genetic";
    case SearchMethod::kExhaustive: return "exhaustive";
  }
  return "greedy";
}

const std::vector<std::string>& search_names() {
  static const std::vector<std::string> names = {"greedy", "genetic", "exhaustive"};
  return names;
}

SearchMethod parse_search(std::string_view name) {
  if (name == "greedy") return SearchMethod::kGreedy;
  if (name == "genetic") return SearchMethod::kGenetic;
  if (name == "exhaustive") return SearchMethod::kExhaustive;
  throw ConfigError("unknown search '" + std::string(name) +
                    "'; valid searches: greedy, genetic, exhaustive");
}

GoalFunction make_goal(const AttackRecipe& recipe, int original_label) {
  if (recipe.goal == GoalKind::kTargeted) {
    if (!recipe.target_label) throw ConfigError("targeted goal requires a target label");
    return GoalFunction::targeted(original_label, *recipe.target_label);
  }
  return GoalFunction::untargeted(original_label);
}

std::vector<SwapRecord> candidate_swaps(const EmbeddingStore& store,
                                        const ConstraintSet& constraints, const TokenizedText& x,
                                        std::size_t index, std::size_t max_candidates) {
  if (index >= x.size()) throw IndexError("candidate_swaps: index out of range");
  const std::string& word = x.token(index);
  std::vector<SwapRecord> out;
  if (!store.contains(word)) return out;
  for (const Neighbor& n : nearest_neighbors(store, word, max_candidates, -1.0)) {
    SwapRecord s{index, word, n.word};
    if (constraints.allows_swap(x, s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::size_t> rank_word_importance(QueryCounter& counter, const GoalFunction& goal,
                                              const TokenizedText& x,
                                              const EmbeddingStore& store) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_stopword(x.token(i)) && store.contains(x.token(i))) indices.push_back(i);
  }
  if (indices.empty()) return indices;
  const double base = evaluate(counter, goal, x).score;
  std::vector<double> importance(x.size(), 0.0);
  for (std::size_t i : indices) {
    importance[i] = evaluate(counter, goal, x.without_token(i)).score - base;
  }
  std::stable_sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
    return importance[a] > importance[b];
  });
  return indices;
}

AttackOutcome greedy_wir_search(QueryCounter& counter, const GoalFunction& goal,
                                const AttackRecipe& recipe, const TokenizedText& x) {
  validate_recipe(recipe);
  return guarded(counter, recipe, x, goal, [&](AttackOutcome& out) {
    GoalResult current;
    if (!check_seed(counter, goal, x, out, current)) return;
    TokenizedText working = x;
    for (std::size_t i : rank_word_importance(counter, goal, x, *recipe.store)) {
      std::optional<TokenizedText> best_text;
      GoalResult best;
      for (const SwapRecord& s :
           candidate_swaps(*recipe.store, recipe.constraints, x, i, recipe.max_candidates)) {
        TokenizedText y = replace_token(working, i, s.replacement_word);
        if (!recipe.constraints.allows_text(x, working, y)) continue;
        GoalResult r = evaluate(counter, goal, y);
        if (!best_text || better(r, best)) {
          best_text = std::move(y);
          best = r;
        }
      }
      if (!best_text || !(best.succeeded || best.score > current.score)) continue;
      working = std::move(*best_text);
      current = best;
      if (current.succeeded) {
        set_success(out, x, working, current);
        return;
      }
    }
    out.status = AttackStatus::kFailed;
    out.final_label = current.predicted_label;
    out.final_score = current.score;
  });
}

namespace {

struct Member {
  TokenizedText text;
  GoalResult result;
};

class GeneticRun {
 public:
  GeneticRun(QueryCounter& counter, const GoalFunction& goal, const AttackRecipe& recipe,
             const TokenizedText& x, const GeneticParams& hyper)
      : counter_(counter),
        goal_(goal),
        recipe_(recipe),
        x_(x),
        hyper_(hyper),
        rng_(hyper.seed),
        cands_(all_candidates(recipe, x)) {
    for (std::size_t i = 0; i < cands_.size(); ++i) {
      if (!cands_[i].empty()) positions_.push_back(i);
    }
  }

  bool has_positions() const { return !positions_.empty(); }

  Member evaluate_member(TokenizedText t) {
    GoalResult r = evaluate(counter_, goal_, t);
    return Member{std::move(t), r};
  }

  Member mutate(const Member& m) {
    if (hyper_.mutation == MutationStrategy::kBest) return mutate_best(m);
    for (std::size_t a = 0; a < hyper_.mutation_attempts; ++a) {
      std::size_t pos = positions_[rng_.index(positions_.size())];
      const auto& options = cands_[pos];
      const std::string& word = options[rng_.index(options.size())].replacement_word;
      if (m.text.token(pos) == word) continue;
      TokenizedText y = replace_token(m.text, pos, word);
      if (!recipe_.constraints.allows_text(x_, m.text, y)) continue;
      return evaluate_member(std::move(y));
    }
    return m;
  }

  Member mutate_best(const Member& m) {
    for (std::size_t a = 0; a < hyper_.mutation_attempts; ++a) {
      std::size_t pos = positions_[rng_.index(positions_.size())];
      std::optional<Member> best;
      for (const SwapRecord& s : cands_[pos]) {
        if (m.text.token(pos) == s.replacement_word) continue;
        TokenizedText y = replace_token(m.text, pos, s.replacement_word);
        if (!recipe_.constraints.allows_text(x_, m.text, y)) continue;
        Member c = evaluate_member(std::move(y));
        if (!best || better(c.result, best->result)) best = std::move(c);
      }
      if (best) return *best;
    }
    return m;
  }

  std::size_t sample_parent(const std::vector<Member>& pop, double total) {
    if (total <= 0.0) return rng_.index(pop.size());
    double r = rng_.uniform() * total;
    for (std::size_t i = 0; i < pop.size(); ++i) {
      r -= pop[i].result.score;
      if (r < 0.0) return i;
    }
    return pop.size() - 1;
  }

  Member crossover(const Member& a, const Member& b) {
    std::vector<std::string> tokens = a.text.tokens();
    for (std::size_t pos : positions_) {
      if (!rng_.coin()) tokens[pos] = b.text.token(pos);
    }
    TokenizedText child = x_.with_tokens(std::move(tokens));
    const Member& fitter = better(b.result, a.result) ? b : a;
    if (child == a.text) return a;
    if (child == b.text) return b;
    if (!recipe_.constraints.allows_text(x_, fitter.text, child)) return fitter;
    return evaluate_member(std::move(child));
  }

  static std::size_t best_index(const std::vector<Member>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (better(pop[i].result, pop[best].result)) best = i;
    }
    return best;
  }

  void run(AttackOutcome& out) {
    Member seed{x_, {}};
    seed.result = evaluate(counter_, goal_, x_);
    std::vector<Member> pop;
    pop.reserve(hyper_.population_size);
    for (std::size_t i = 0; i < hyper_.population_size; ++i) pop.push_back(mutate(seed));
    for (std::size_t g = 0;; ++g) {
      const Member& best = pop[best_index(pop)];
      out.final_label = best.result.predicted_label;
      out.final_score = best.result.score;
      if (best.result.succeeded) {
        set_success(out, x_, best.text, best.result);
        return;
      }
      if (g >= hyper_.generations) break;
      double total = 0.0;
      for (const Member& m : pop) total += m.result.score;
      std::vector<Member> next;
      next.reserve(pop.size());
      next.push_back(best);
      while (next.size() < pop.size()) {
        std::size_t p1 = sample_parent(pop, total);
        std::size_t p2 = sample_parent(pop, total);
        next.push_back(mutate(crossover(pop[p1], pop[p2])));
      }
      pop = std::move(next);
    }
    out.status = AttackStatus::kFailed;
  }

 private:
  QueryCounter& counter_;
  const GoalFunction& goal_;
  const AttackRecipe& recipe_;
  const TokenizedText& x_;
  const GeneticParams& hyper_;
  Rng rng_;
  std::vector<std::vector<SwapRecord>> cands_;
  std::vector<std::size_t> positions_;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

// Number of swap combinations of size 1..max_swaps over positions with the
// given candidate counts (elementary symmetric sums).
std::uint64_t combination_count(const std::vector<std::size_t>& sizes, std::size_t max_swaps) {
  std::vector<std::uint64_t> e(max_swaps + 1, 0);
  e[0] = 1;
  for (std::size_t s : sizes) {
    for (std::size_t k = max_swaps; k >= 1; --k) {
      e[k] = saturating_add(e[k], saturating_mul(e[k - 1], s));
    }
  }
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= max_swaps; ++k) total = saturating_add(total, e[k]);
  return total;
}

}  // namespace

AttackOutcome genetic_search(QueryCounter& counter, const GoalFunction& goal,
                             const AttackRecipe& recipe, const TokenizedText& x,
                             const GeneticParams& hyper) {
  validate_recipe(recipe);
  if (hyper.population_size < 2) throw ConfigError("population_size must be >= 2");
  return guarded(counter, recipe, x, goal, [&](AttackOutcome& out) {
    GoalResult initial;
    if (!check_seed(counter, goal, x, out, initial)) return;
    GeneticRun run(counter, goal, recipe, x, hyper);
    if (!run.has_positions()) {
      out.status = AttackStatus::kFailed;
      out.detail = "no candidate swaps";
      return;
    }
    run.run(out);
  });
}

AttackOutcome exhaustive_search(QueryCounter& counter, const GoalFunction& goal,
                                const AttackRecipe& recipe, const TokenizedText& x,
                                const ExhaustiveParams& hyper) {
  validate_recipe(recipe);
  auto cands = all_candidates(recipe, x);
  std::vector<std::size_t> positions;
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!cands[i].empty()) {
      positions.push_back(i);
      sizes.push_back(cands[i].size());
    }
  }
  const std::size_t max_swaps = std::min(hyper.max_swaps, positions.size());
  const std::uint64_t total = combination_count(sizes, max_swaps);
  if (total > hyper.max_combinations) {
    throw InstanceTooLarge("exhaustive search: " + std::to_string(total) +
                           " combinations exceed the cap of " +
                           std::to_string(hyper.max_combinations));
  }
  return guarded(counter, recipe, x, goal, [&](AttackOutcome& out) {
    GoalResult initial;
    if (!check_seed(counter, goal, x, out, initial)) return;
    for (std::size_t k = 1; k <= max_swaps; ++k) {
      std::vector<std::size_t> combo(k);
      std::iota(combo.begin(), combo.end(), 0);
      while (true) {
        std::vector<std::size_t> choice(k, 0);
        while (true) {
          std::vector<std::string> tokens = x.tokens();
          for (std::size_t j = 0; j < k; ++j) {
            tokens[positions[combo[j]]] = cands[positions[combo[j]]][choice[j]].replacement_word;
          }
          TokenizedText y = x.with_tokens(std::move(tokens));
          if (recipe.constraints.allows_text(x, x, y)) {
            GoalResult r = evaluate(counter, goal, y);
            if (r.succeeded) {
              set_success(out, x, y, r);
              return;
            }
          }
          bool carried = true;
          for (std::size_t j = k; j-- > 0;) {
            if (++choice[j] < sizes[combo[j]]) {
              carried = false;
              break;
            }
            choice[j] = 0;
          }
          if (carried) break;
        }
        std::size_t j = k;
        while (j > 0 && combo[j - 1] == positions.size() - k + (j - 1)) --j;
        if (j == 0) break;
        ++combo[j - 1];
        for (std::size_t t = j; t < k; ++t) combo[t] = combo[t - 1] + 1;
      }
    }
    out.status = AttackStatus::kFailed;
  });
}

AttackOutcome run_attack(QueryCounter& counter, const AttackRecipe& recipe,
                         const TokenizedText& x, int label, std::uint64_t seed) {
  GoalFunction goal = make_goal(recipe, label);
  switch (recipe.search.method) {
    case SearchMethod::kGreedy:
      return greedy_wir_search(counter, goal, recipe, x);
    case SearchMethod::kGenetic: {
      GeneticParams hyper = recipe.search.genetic;
      hyper.seed = seed;
      return genetic_search(counter, goal, recipe, x, hyper);
    }
    case SearchMethod::kExhaustive:
      return exhaustive_search(counter, goal, recipe, x, recipe.search.exhaustive);
  }
  throw ConfigError("unknown search method");
}

Verification verify_outcome(const VictimModel& model, const AttackRecipe& recipe,
                            const AttackOutcome& outcome) {
  Verification v;
  if (outcome.status != AttackStatus::kSuccess) return v;
  auto problem = [&](std::string p) {
    v.ok = false;
    v.problems.push_back(std::move(p));
  };
  if (!outcome.x_adv) {
    problem("success without x_adv");
    return v;
  }
  const TokenizedText& x = outcome.x;
  const TokenizedText& x_adv = *outcome.x_adv;
  try {
    if (!(apply_swaps(x, outcome.swaps) == x_adv)) problem("swaps do not rebuild x_adv");
  } catch (const Error& e) {
    problem(std::string("invalid swaps: ") + e.what());
  }
  GoalFunction goal = make_goal(recipe, outcome.original_label);
  if (!goal.evaluate(model.predict_proba(x_adv)).succeeded) problem("goal not met on x_adv");
  for (const ConstraintVerdict& c : recipe.constraints.check_all(x, x_adv)) {
    if (!c.passed) problem(c.constraint_id + ": " + c.detail);
  }
  return v;
}

}  // namespace advtext
