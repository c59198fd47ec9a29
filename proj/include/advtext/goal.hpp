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

#ifndef ADVTEXT_GOAL_HPP_
#define ADVTEXT_GOAL_HPP_

#include <optional>
#include <span>

namespace advtext {

enum class GoalKind { kUntargeted, kTargeted };

struct GoalResult {
  bool succeeded = false;
  int predicted_label = 0;
  double score = 0.0;  // in [0, 1], higher is closer to the goal
};

// Untargeted: score = 1 - P(original), success when the argmax differs from
// the original label. Targeted: score = P(target), success when the argmax
// is the target. Argmax ties resolve to the lowest label.
class GoalFunction {
 public:
  static GoalFunction untargeted(int original_label);
  // Throws ConfigError when target == original_label.
  static GoalFunction targeted(int original_label, int target_label);

  GoalKind kind() const { return kind_; }
  int original_label() const { return original_; }
  std::optional<int> target_label() const;

  GoalResult evaluate(std::span<const double> probabilities) const;

 private:
  GoalFunction(GoalKind kind, int original, int target)
      : kind_(kind), original_(original), target_(target) {}

  GoalKind kind_;
  int original_;
  int target_;
};

}  // namespace advtext

#endif  // ADVTEXT_GOAL_HPP_
