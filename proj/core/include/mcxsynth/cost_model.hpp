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

#include <optional>
#include <string>
#include <vector>

#include "mcxsynth/circuit.hpp"
#include "mcxsynth/composer.hpp"

namespace mcx {

struct CostRecord {
  long x_count = 0;
  long cx_count = 0;
  long ccx_count = 0;
  long swap_count = 0;
  long total_size = 0;
  std::optional<long> depth;
  int support_count = 0;
  /// Nominal total: controls + supports + target.
  int total_qubits = 0;
  /// Physically distinct wires.
  int distinct_qubits = 0;
};

/// j = ceil(p/2) - floor(p/2) for p = n - n_s - 1.
int wave_parity(int n, int n_s);

CostRecord predict(Variant variant, int n, int n_s);
CostRecord measure(const Circuit& c);

/// ASAP depth of the first downstairs element of the sequence, composed
/// alone. Empty when the sequence has no stair segment.
std::optional<long> stair_segment_depth(const CompositionSequence& seq);

/// Published depth envelope for the stair segment: 2*log2(k+1) for seq2,
/// 2*sqrt(2(n+1)) for seq3.
std::optional<double> predicted_stair_depth(Variant variant, int n, int n_s);

struct CostRow {
  Variant variant;
  int n = 0;
  int n_s = 0;
  CostRecord predicted;
  CostRecord measured;

  bool match() const {
    return predicted.x_count == measured.x_count && predicted.ccx_count == measured.ccx_count;
  }
};

CostRow cost_row(Variant variant, int n, int n_s);

/// Tab-separated table with a header line.
std::string format_cost_table(const std::vector<CostRow>& rows);

}  // namespace mcx
