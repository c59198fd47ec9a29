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

#include "advtext/goal.hpp"

#include <algorithm>
#include <string>

#include "advtext/errors.hpp"
#include "advtext/victim.hpp"

namespace advtext {

GoalFunction GoalFunction::untargeted(int original_label) {
  return GoalFunction(GoalKind::kUntargeted, original_label, -1);
}

GoalFunction GoalFunction::targeted(int original_label, int target_label) {
  if (target_label == original_label) {
    throw ConfigError("targeted goal: target label " + std::to_string(target_label) +
                      " equals the original label");
  }
  if (target_label < 0) throw ConfigError("targeted goal: negative target label");
  return GoalFunction(GoalKind::kTargeted, original_label, target_label);
}

std::optional<int> GoalFunction::target_label() const {
  if (kind_ == GoalKind::kTargeted) return target_;
  return std::nullopt;
}

GoalResult GoalFunction::evaluate(std::span<const double> probabilities) const {
  GoalResult r;
  r.predicted_label = static_cast<int>(argmax(probabilities));
  auto prob = [&](int label) {
    if (label < 0 || static_cast<std::size_t>(label) >= probabilities.size()) return 0.0;
    return probabilities[static_cast<std::size_t>(label)];
  };
  if (kind_ == GoalKind::kUntargeted) {
    r.score = std::clamp(1.0 - prob(original_), 0.0, 1.0);
    r.succeeded = r.predicted_label != original_;
  } else {
    r.score = std::clamp(prob(target_), 0.0, 1.0);
    r.succeeded = r.predicted_label == target_;
  }
  return r;
}

}  // namespace advtext
