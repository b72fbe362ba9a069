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

namespace mcx {

/// Negation pattern over n controls. control_polarity[i] set means control
/// i+1 enters the product negated. term_polarity lists negated sub-product
/// terms for stair shapes.
struct PolarityMask {
  std::vector<bool> control_polarity;
  std::set<int> term_polarity;

  static PolarityMask positive(int n) {
    return {std::vector<bool>(static_cast<std::size_t>(n), false), {}};
  }
  /// Bitstring ordered c1..cn, leftmost is c1. Throws ParseError.
  static PolarityMask parse(std::string_view bits);

  int size() const { return static_cast<int>(control_polarity.size()); }
  int num_negated() const;
  std::string to_string() const;
};

}  // namespace mcx
