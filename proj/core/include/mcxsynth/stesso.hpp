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

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcxsynth/circuit.hpp"
#include "mcxsynth/composer.hpp"
#include "mcxsynth/polarity.hpp"

namespace mcx {

/// A synthesized Toffoli together with its two composed halves.
struct StessoCircuit {
  Circuit circuit;
  Circuit m;
  Circuit m_prime;
  std::vector<int> controls;
  std::vector<int> supports;
  int target = -1;
  CompositionSequence sequence;
};

StessoCircuit build_pp(int n, Variant variant, int n_s);
StessoCircuit build_mp(int n, const PolarityMask& mask, Variant variant, int n_s);

Circuit synth_pp(int n, Variant variant, int n_s);
Circuit synth_mp(int n, const PolarityMask& mask, Variant variant, int n_s);

/// Default support count for a variant: n-2 for seq1, 1 otherwise.
int default_supports(Variant variant, int n);

/// size(mp) - size(pp) - n_neg. Zero when negation costs exactly one X
/// per negated control.
long mp_size_excess(int n, const PolarityMask& mask, Variant variant, int n_s);

struct ConstrainedUnitary {
  Circuit circuit;
  /// Declared footprint; the touched qubits are used when absent.
  std::optional<std::set<int>> footprint;

  std::set<int> effective_footprint() const;
};

struct ConstraintVerdict {
  bool footprint_ok = true;
  bool kinds_ok = true;
  std::string reason;

  bool ok() const { return footprint_ok && kinds_ok; }
};

ConstraintVerdict validate_constrained(const ConstrainedUnitary& u,
                                       const std::set<int>& allowed);

std::set<int> u1_allowed(const std::vector<int>& controls, const std::vector<int>& supports);
std::set<int> u2_allowed(const std::vector<int>& controls, const std::vector<int>& supports,
                         int target);

/// Emits U1 U2 M U1^-1 M' U2^-1 in execution order. Throws
/// FootprintViolation or GateKindViolation.
Circuit synth_g(const Circuit& m, const Circuit& m_prime, const ConstrainedUnitary& u1,
                const ConstrainedUnitary& u2, const std::vector<int>& controls,
                const std::vector<int>& supports, int target);
Circuit synth_g(const StessoCircuit& mp, const ConstrainedUnitary& u1,
                const ConstrainedUnitary& u2);

}  // namespace mcx
