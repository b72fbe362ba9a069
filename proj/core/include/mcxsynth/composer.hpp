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

#include <string>
#include <string_view>
#include <vector>

#include "mcxsynth/circuit.hpp"
#include "mcxsynth/shapes.hpp"

namespace mcx {

enum class Variant { Seq1, Seq2, Seq3, Custom };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view s);

/// One (count, tetrad function, shape) triple. The tetrad function is
/// tabulated: tetrads[i] is the tetrad of repetition i. A transition
/// element holds at most one tetrad.
struct SequenceElement {
  ShapeKind shape = ShapeKind::V;
  std::vector<ShapeTetrad> tetrads;
  bool transition = false;

  int count() const { return static_cast<int>(tetrads.size()); }
};

/// A composed shaped structure: elements in the fixed shape order.
struct Segment {
  std::vector<SequenceElement> elements;
};

struct CompositionSequence {
  std::vector<Segment> segments;
  /// Segments [0, split) form the first step-decreasing structure M,
  /// [split, end) the second structure M'.
  std::size_t split = 0;
  int total_controls = 0;
  int support_count = 0;
  Variant variant = Variant::Custom;
  /// Qubit layout: controls, then supports, then the target.
  std::vector<Qubit> qubits;
};

struct LadderDecomposition {
  int k = 0;
  int m = 0;
};

/// Canonical n = k(k+1)/2 + m with k maximal. Throws TooFewControls.
LadderDecomposition ladder_split(int n);

/// Throws EmptySequence, BadRule (shape order, transition count).
void validate(const CompositionSequence& seq);

/// Throws BadSupportCount, BadVariant, TooFewControls.
CompositionSequence make_sequence(Variant v, int n, int n_s);

/// Standard qubit layout for n controls and n_s supports.
std::vector<Qubit> standard_qubits(int n, int n_s);

Circuit compose(const CompositionSequence& seq, const std::vector<Qubit>& pool);
Circuit compose(const CompositionSequence& seq);

struct ComposedHalves {
  Circuit m;
  Circuit m_prime;
};
ComposedHalves compose_halves(const CompositionSequence& seq);

/// Line-oriented text form, one `(count, shape, rule, controls, supports,
/// target, marks)` line per repetition.
std::string serialize(const CompositionSequence& seq);

}  // namespace mcx
