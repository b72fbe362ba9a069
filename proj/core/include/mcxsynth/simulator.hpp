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
#include <optional>
#include <string>
#include <vector>

#include "mcxsynth/circuit.hpp"
#include "mcxsynth/polarity.hpp"

namespace mcx {

/// Bit i holds qubit i. Text form is big-endian by qubit index: q0 first.
struct BasisState {
  int num_qubits = 0;
  std::uint64_t bits = 0;

  bool get(int q) const { return (bits >> q) & 1U; }
  void set(int q, bool v) {
    bits = v ? (bits | (std::uint64_t{1} << q)) : (bits & ~(std::uint64_t{1} << q));
  }
  std::string to_string() const;
  static BasisState parse(const std::string& text);

  bool operator==(const BasisState&) const = default;
};

inline constexpr int kMaxSimQubits = 64;
inline constexpr int kMaxTableQubits = 20;

/// Gate list lowered to bit masks for fast repeated application.
class CompiledCircuit {
 public:
  explicit CompiledCircuit(const Circuit& c);
  std::uint64_t run(std::uint64_t state) const;
  int num_qubits() const { return num_qubits_; }

 private:
  struct Op {
    GateKind kind;
    std::uint64_t ctrl;
    std::uint64_t tgt;
  };
  int num_qubits_;
  std::vector<Op> ops_;
};

/// Throws LengthMismatch or TooManyQubits.
BasisState apply(const Circuit& c, const BasisState& s);

struct PermutationTable {
  std::vector<std::uint32_t> mapping;

  bool is_bijective() const;
  bool is_identity() const;
  bool operator==(const PermutationTable&) const = default;
};

/// Exhaustive table; throws TooManyQubits above kMaxTableQubits.
PermutationTable permutation_table(const Circuit& c);

struct McxVerdict {
  bool mcx = true;
  bool restore = true;
  bool support_independent = true;
  bool exhaustive = true;
  std::uint64_t states_checked = 0;
  std::optional<BasisState> counterexample;

  bool ok() const { return mcx && restore && support_independent; }
  /// "mcx: ok, restore: ok, support-independent: ok"
  std::string summary() const;
};

struct VerifyOptions {
  std::uint64_t sample_budget = 100000;
  std::uint64_t seed = 0x5eed;
  /// Qubit counts above this switch to sampling.
  int exhaustive_limit = kMaxTableQubits;
};

/// Checks target <- target xor prod(l_i) with l_i = c_i or not c_i per mask,
/// restoration of every other qubit, and independence of the target outcome
/// from the support initialization.
McxVerdict verify_mcx(const Circuit& c, const std::vector<int>& controls,
                      const PolarityMask& mask, int target,
                      const std::vector<int>& supports,
                      const VerifyOptions& opts = {});

/// Table of the mixed-polarity multi-controlled X over `num_qubits`, built
/// directly from its definition.
PermutationTable mcx_table(int num_qubits, const std::vector<int>& controls,
                           const PolarityMask& mask, int target);

}  // namespace mcx
