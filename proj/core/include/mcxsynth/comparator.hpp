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

#include <cstdint>
#include <string>
#include <vector>

#include "mcxsynth/circuit.hpp"

namespace mcx {

struct CompareResult {
  bool lt = false;
  bool eq = false;
  bool gt = false;

  bool operator==(const CompareResult&) const = default;
};

/// Throws OutOfRange unless 1 <= n <= 31 and 0 <= x, y < 2^n.
CompareResult classical_compare(std::int64_t x, std::int64_t y, int n);

struct ComparatorCircuit {
  int n = 0;
  Circuit circuit;
  /// x[0] and y[0] are the least significant bits.
  std::vector<int> x;
  std::vector<int> y;
  int out_lt = -1;
  int out_eq = -1;
  int out_gt = -1;
};

/// Wires x1..xn, y1..yn, then dedicated lt, eq, gt results.
ComparatorCircuit synth_comparator(int n);

/// Four-bit less-than that reuses the y4 wire as the V target, with one
/// extra wire carrying the third support. On exit the y4 wire holds x < y
/// and the extra wire holds the original y4.
struct ReuseLessThan4 {
  Circuit circuit;
  std::vector<int> x;
  std::vector<int> y;
  /// Wire that ends holding x < y (the y4 wire).
  int lt_wire = -1;
  /// Extra wire that ends holding the original y4.
  int moved_y4 = -1;
};

ReuseLessThan4 reuse_less_than_4();

struct ComparatorReport {
  std::uint64_t pairs_checked = 0;
  bool outputs_match = true;
  bool one_hot = true;
  bool inputs_restored = true;
  bool gt_identity = true;

  bool ok() const { return outputs_match && one_hot && inputs_restored && gt_identity; }
  std::string summary() const;
};

/// Exhaustive over all 2^(2n) input pairs with results starting at 0.
ComparatorReport verify_comparator(const ComparatorCircuit& c);

}  // namespace mcx
