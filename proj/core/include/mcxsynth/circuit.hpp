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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mcxsynth/errors.hpp"

namespace mcx {

enum class Role { Control, Support, Target, Auxiliary };

struct Qubit {
  int index = 0;
  Role role = Role::Auxiliary;
  std::string label;

  bool operator==(const Qubit&) const = default;
};

enum class GateKind : std::uint8_t { X, CX, CCX, SWAP };

std::string_view gate_name(GateKind kind);

/// For CX and CCX the last operand is the target.
class Gate {
 public:
  static Gate x(int q) { return Gate(GateKind::X, {q, -1, -1}); }
  static Gate cx(int c, int t) { return Gate(GateKind::CX, {c, t, -1}); }
  static Gate ccx(int c1, int c2, int t) {
    return Gate(GateKind::CCX, {c1, c2, t});
  }
  static Gate swap(int a, int b) { return Gate(GateKind::SWAP, {a, b, -1}); }

  GateKind kind() const { return kind_; }
  int arity() const;
  int operand(int i) const { return ops_[static_cast<std::size_t>(i)]; }
  int target() const { return ops_[static_cast<std::size_t>(arity() - 1)]; }
  bool touches(int q) const;

  /// Same gate with every operand mapped through `map`.
  Gate remapped(const std::vector<int>& map) const;

  bool operator==(const Gate&) const = default;

 private:
  Gate(GateKind kind, std::array<int, 3> ops) : kind_(kind), ops_(ops) {}

  GateKind kind_;
  std::array<int, 3> ops_;
};

std::string to_string(const Gate& g);

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::vector<Qubit> qubits);
  /// `n` auxiliary qubits labelled q0..q{n-1}.
  static Circuit with_qubits(int n);

  int num_qubits() const { return static_cast<int>(qubits_.size()); }
  const std::vector<Qubit>& qubits() const { return qubits_; }
  const Qubit& qubit(int i) const { return qubits_.at(static_cast<std::size_t>(i)); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws UnknownQubit or DuplicateOperand.
  void add(const Gate& g);
  void add_all(const Circuit& other);

  std::size_t count(GateKind kind) const;
  std::size_t depth() const;
  std::vector<int> qubits_with_role(Role role) const;

  bool operator==(const Circuit&) const = default;

 private:
  std::vector<Qubit> qubits_;
  std::vector<Gate> gates_;
};

Circuit append(const Circuit& c, const Gate& g);
Circuit concat(const Circuit& a, const Circuit& b);
std::size_t size(const Circuit& c);
std::size_t depth(const Circuit& c);

/// All gate kinds are self-inverse, so this is reversal.
Circuit inverse(const Circuit& c);

/// Removes identical gates that are neighbours in the gate sequence until
/// none remain. No commutation is attempted.
Circuit cancel_adjacent_x(const Circuit& c);

/// Empty circuit on the same qubits.
Circuit empty_like(const Circuit& c);

}  // namespace mcx
