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

// JSON form of an AttackRecipe. Constraints are written out explicitly even
// when the recipe came from a preset, so a serialized recipe pins every
// threshold.

#ifndef ADVTEXT_RECIPE_HPP_
#define ADVTEXT_RECIPE_HPP_

#include <memory>

#include <nlohmann/json.hpp>

#include "advtext/constraints.hpp"
#include "advtext/search.hpp"

namespace advtext {

inline constexpr int kRecipeFormatVersion = 1;

nlohmann::json constraint_to_json(const Constraint& c);
// Throws ConfigError for unknown types or parameters.
std::shared_ptr<const Constraint> constraint_from_json(const nlohmann::json& j,
                                                       const LanguageResources& res);

nlohmann::json recipe_to_json(const AttackRecipe& recipe);
// Accepts either "preset" or an explicit "constraints" list; missing fields
// take their defaults. Unknown keys are rejected.
AttackRecipe recipe_from_json(const nlohmann::json& j, const LanguageResources& res);

// Default recipe around a preset and a search id.
AttackRecipe make_recipe(const std::string& preset, SearchMethod method,
                         const LanguageResources& res);

}  // namespace advtext

#endif  // ADVTEXT_RECIPE_HPP_
