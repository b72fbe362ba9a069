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

// Reference semantics written without the library simulator: a gate list
// is replayed bit by bit on a std::vector<bool>.

#include <cstdint>
#include <functional>
#include <vector>

#include "mcxsynth/circuit.hpp"

namespace mcx::testing {

inline std::vector<bool> unpack(std::uint64_t s, int nq) {
  std::vector<bool> b(static_cast<std::size_t>(nq));
  for (int i = 0; i < nq; ++i) b[static_cast<std::size_t>(i)] = (s >> i) & 1U;
  return b;
}

inline std::uint64_t pack(const std::vector<bool>& b) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) s |= std::uint64_t{1} << i;
  }
  return s;
}

inline std::vector<bool> replay(const Circuit& c, std::vector<bool> b) {
  for (const Gate& g : c.gates()) {
    auto at = [&](int i) { return b[static_cast<std::size_t>(g.operand(i))]; };
    switch (g.kind()) {
      case GateKind::X: b[static_cast<std::size_t>(g.operand(0))] = !at(0); break;
      case GateKind::CX:
        if (at(0)) b[static_cast<std::size_t>(g.operand(1))] = !at(1);
        break;
      case GateKind::CCX:
        if (at(0) && at(1)) b[static_cast<std::size_t>(g.operand(2))] = !at(2);
        break;
      case GateKind::SWAP: {
        bool t = at(0);
        b[static_cast<std::size_t>(g.operand(0))] = at(1);
        b[static_cast<std::size_t>(g.operand(1))] = t;
        break;
      }
    }
  }
  return b;
}

inline std::uint64_t replay(const Circuit& c, std::uint64_t s) {
  return pack(replay(c, unpack(s, c.num_qubits())));
}

/// Expected output of an ideal multi-controlled X with the given control
/// polarities (true = negated).
inline std::uint64_t ideal_mcx(std::uint64_t s, const std::vector<int>& controls,
                               const std::vector<bool>& negated, int target) {
  bool all = true;
  for (std::size_t i = 0; i < controls.size(); ++i) {
    bool v = (s >> controls[i]) & 1U;
    if (!negated.empty() && negated[i]) v = !v;
    all = all && v;
  }
  return all ? s ^ (std::uint64_t{1} << target) : s;
}

/// True when the circuit equals the ideal MCX on every basis state.
inline bool is_exact_mcx(const Circuit& c, const std::vector<int>& controls,
                         const std::vector<bool>& negated, int target) {
  const std::uint64_t states = std::uint64_t{1} << c.num_qubits();
  for (std::uint64_t s = 0; s < states; ++s) {
    if (replay(c, s) != ideal_mcx(s, controls, negated, target)) return false;
  }
  return true;
}

inline std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

}  // namespace mcx::testing
