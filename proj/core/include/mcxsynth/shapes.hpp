// Copyright 2026 The mcxsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mcxsynth/circuit.hpp"

namespace mcx {

enum class Rule { ControlToControl, TargetToTarget, ControlToTarget, TargetToControl };

/// control<->target rules swap, the other two map to themselves.
Rule opposite(Rule r);
/// "c2c", "t2t", "c2t", "t2c".
std::string_view rule_name(Rule r);
Rule parse_rule(std::string_view s);

enum class Orientation { Descending, Ascending };

/// Listed in the fixed composition order.
enum class ShapeKind { Backslash, Downstairs, V, I, Upstairs, Slash };

std::string_view shape_name(ShapeKind k);
ShapeKind parse_shape(std::string_view s);
int shape_rank(ShapeKind k);

struct ShapeTetrad {
  std::vector<int> controls;
  std::vector<int> supports;
  int target = -1;
  Rule rule = Rule::TargetToControl;
  /// Indices of negated sub-product terms, one term per CCX of the chain.
  std::set<int> negation_marks;
};

/// Number of CCX gates in a stair chain over `n` controls.
int stair_terms(Rule r, int n);
/// Number of supports a stair chain over `n` controls needs.
int stair_supports(Rule r, int n);

/// Stair chain on the qubits of `frame` (the returned circuit has no gates
/// from `frame`, only its qubit list). Descending without marks is the
/// backslash shape, with marks the downstairs shape; ascending is the
/// gate-reversed descending chain of the opposite rule.
Circuit build_stair(const Circuit& frame, const ShapeTetrad& t, Orientation o);
Circuit build_stair(const ShapeTetrad& t, Orientation o);

/// Backslash over n controls (target->control) then slash over n-1.
Circuit build_vshape(const Circuit& frame, const std::vector<int>& controls,
                     const std::vector<int>& supports, int target);
Circuit build_vshape(const std::vector<int>& controls, const std::vector<int>& supports,
                     int target);

/// V shape followed by a backslash over (s1, c3..cn) into the target.
Circuit build_i_shape(const Circuit& frame, const std::vector<int>& controls,
                      const std::vector<int>& supports, int target);
Circuit build_i_shape(const std::vector<int>& controls, const std::vector<int>& supports,
                      int target);

/// Dispatch on shape kind; V and I ignore the tetrad's rule and marks.
Circuit build_shape(const Circuit& frame, ShapeKind kind, const ShapeTetrad& t);

/// Qubits 0..max index of the tetrad, with roles and labels c1.., s1.., t.
Circuit standard_frame(const ShapeTetrad& t);

}  // namespace mcx
