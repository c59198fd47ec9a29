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

#include "advtext/recipe.hpp"

#include <set>
#include <string>

#include "advtext/errors.hpp"

namespace advtext {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("bad value for '" + std::string(key) + "' in " + where);
  }
}

std::size_t get_count(const json& j, const char* key, std::size_t fallback,
                      const std::string& where) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError("'" + std::string(key) + "' in " + where + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string_view mutation_name(MutationStrategy m) {
  return m == MutationStrategy::kBest ? "best" : "random";
}

}  // namespace

json constraint_to_json(const Constraint& c) {
  json j;
  j["type"] = c.id();
  for (const auto& [k, v] : c.params()) {
    if (k == "window_radius" || k == "max_words" || k == "max_distance" || k == "max_delta") {
      j[k] = static_cast<long long>(v);
    } else {
      j[k] = v;
    }
  }
  if (c.compares_against() == CompareAgainst::kPreviousStep) j["compare_against"] = "previous_step";
  return j;
}

std::shared_ptr<const Constraint> constraint_from_json(const json& j,
                                                       const LanguageResources& res) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw ConfigError("constraint entry needs a string 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  const std::string where = "constraint '" + type + "'";
  if (type == "word_embedding") {
    reject_unknown(j, {"type", "min_cos"}, where);
    return std::make_shared<WordEmbeddingDistance>(res.store,
                                                   get_or(j, "min_cos", kLooseWordCosine, where));
  }
  if (type == "part_of_speech") {
    reject_unknown(j, {"type"}, where);
    return std::make_shared<PartOfSpeechConsistency>(res.lexicon);
  }
  if (type == "stopword") {
    reject_unknown(j, {"type"}, where);
    return std::make_shared<StopwordModification>();
  }
  if (type == "sentence_encoder") {
    reject_unknown(j, {"type", "min_sim", "window_radius", "compare_against"}, where);
    std::optional<std::size_t> radius;
    if (j.contains("window_radius")) radius = get_count(j, "window_radius", 0, where);
    std::string against = get_or<std::string>(j, "compare_against", "original", where);
    if (against != "original" && against != "previous_step") {
      throw ConfigError("compare_against must be 'original' or 'previous_step'");
    }
    return std::make_shared<SentenceEncoderSimilarity>(
        res.encoder, get_or(j, "min_sim", kStrictSentenceSimilarity, where), radius,
        against == "original" ? CompareAgainst::kOriginal : CompareAgainst::kPreviousStep);
  }
  if (type == "grammar") {
    reject_unknown(j, {"type", "max_delta"}, where);
    return std::make_shared<GrammarErrorBound>(res.lexicon, get_or(j, "max_delta", 0, where));
  }
  if (type == "max_words_perturbed") {
    reject_unknown(j, {"type", "max_words"}, where);
    if (!j.contains("max_words")) throw ConfigError(where + " needs 'max_words'");
    return std::make_shared<MaxWordsPerturbed>(get_count(j, "max_words", 0, where));
  }
  if (type == "levenshtein") {
    reject_unknown(j, {"type", "max_distance"}, where);
    if (!j.contains("max_distance")) throw ConfigError(where + " needs 'max_distance'");
    return std::make_shared<EditDistanceLimit>(get_count(j, "max_distance", 0, where));
  }
  throw ConfigError("unknown constraint type '" + type +
                    "'; valid types: word_embedding, part_of_speech, stopword, sentence_encoder, "
                    "grammar, max_words_perturbed, levenshtein");
}

json recipe_to_json(const AttackRecipe& recipe) {
  json j;
  j["format_version"] = kRecipeFormatVersion;
  j["preset"] = recipe.constraints.name();
  json cs = json::array();
  for (const auto& c : recipe.constraints.constraints()) cs.push_back(constraint_to_json(*c));
  j["constraints"] = cs;
  j["max_candidates"] = recipe.max_candidates;
  j["query_budget"] = recipe.query_budget;
  json goal;
  goal["kind"] = recipe.goal == GoalKind::kTargeted ? "targeted" : "untargeted";
  if (recipe.goal == GoalKind::kTargeted && recipe.target_label) {
    goal["target_label"] = *recipe.target_label;
  }
  j["goal"] = goal;
  json search;
  search["id"] = std::string(search_name(recipe.search.method));
  if (recipe.search.method == SearchMethod::kGenetic) {
    const auto& g = recipe.search.genetic;
    search["population_size"] = g.population_size;
    search["generations"] = g.generations;
    search["mutation"] = std::string(mutation_name(g.mutation));
    search["mutation_attempts"] = g.mutation_attempts;
  } else if (recipe.search.method == SearchMethod::kExhaustive) {
    search["max_swaps"] = recipe.search.exhaustive.max_swaps;
    search["max_combinations"] = recipe.search.exhaustive.max_combinations;
  }
  j["search"] = search;
  return j;
}

AttackRecipe recipe_from_json(const json& j, const LanguageResources& res) {
  reject_unknown(j,
                 {"format_version", "preset", "constraints", "max_candidates", "query_budget",
                  "goal", "search"},
                 "recipe");
  if (j.contains("format_version") && j["format_version"] != kRecipeFormatVersion) {
    throw ConfigError("unsupported recipe format_version");
  }
  AttackRecipe r;
  r.store = res.store;
  std::string preset = get_or<std::string>(j, "preset", "", "recipe");
  if (j.contains("constraints")) {
    if (!j["constraints"].is_array()) throw ConfigError("'constraints' must be an array");
    std::vector<std::shared_ptr<const Constraint>> cs;
    for (const auto& c : j["constraints"]) cs.push_back(constraint_from_json(c, res));
    r.constraints = ConstraintSet(preset.empty() ? "custom" : preset, std::move(cs));
  } else if (!preset.empty()) {
    r.constraints = make_preset(preset, res);
  } else {
    throw ConfigError("recipe needs 'preset' or 'constraints'");
  }
  r.max_candidates = get_count(j, "max_candidates", r.max_candidates, "recipe");
  r.query_budget = get_count(j, "query_budget", r.query_budget, "recipe");
  if (j.contains("goal")) {
    const json& g = j["goal"];
    reject_unknown(g, {"kind", "target_label"}, "goal");
    std::string kind = get_or<std::string>(g, "kind", "untargeted", "goal");
    if (kind == "targeted") {
      r.goal = GoalKind::kTargeted;
      if (!g.contains("target_label")) throw ConfigError("targeted goal needs 'target_label'");
      r.target_label = get_or(g, "target_label", 0, "goal");
    } else if (kind != "untargeted") {
      throw ConfigError("goal kind must be 'untargeted' or 'targeted'");
    }
  }
  if (j.contains("search")) {
    const json& s = j["search"];
    if (s.is_string()) {
      r.search.method = parse_search(s.get<std::string>());
    } else {
      reject_unknown(s,
                     {"id", "population_size", "generations", "mutation", "mutation_attempts",
                      "max_swaps", "max_combinations"},
                     "search");
      r.search.method = parse_search(get_or<std::string>(s, "id", "greedy", "search"));
      auto& g = r.search.genetic;
      g.population_size = get_count(s, "population_size", g.population_size, "search");
      g.generations = get_count(s, "generations", g.generations, "search");
      g.mutation_attempts = get_count(s, "mutation_attempts", g.mutation_attempts, "search");
      std::string m = get_or<std::string>(s, "mutation", "random", "search");
      if (m == "best") {
        g.mutation = MutationStrategy::kBest;
      } else if (m != "random") {
        throw ConfigError("mutation must be 'random' or 'best'");
      }
      auto& e = r.search.exhaustive;
      e.max_swaps = get_count(s, "max_swaps", e.max_swaps, "search");
      e.max_combinations = get_count(s, "max_combinations", e.max_combinations, "search");
    }
  }
  validate_recipe(r);
  return r;
}

AttackRecipe make_recipe(const std::string& preset, SearchMethod method,
                         const LanguageResources& res) {
  AttackRecipe r;
  r.store = res.store;
  r.constraints = make_preset(preset, res);
  r.search.method = method;
  return r;
}

}  // namespace advtext
