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

#include "mcxsynth/circuit.hpp"

#include <algorithm>

namespace mcx {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::UnknownQubit: return "UnknownQubit";
    case Errc::DuplicateOperand: return "DuplicateOperand";
    case Errc::BadRule: return "BadRule";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::QubitClash: return "QubitClash";
    case Errc::BadSupportCount: return "BadSupportCount";
    case Errc::BadVariant: return "BadVariant";
    case Errc::TooFewControls: return "TooFewControls";
    case Errc::MaskLengthMismatch: return "MaskLengthMismatch";
    case Errc::FootprintViolation: return "FootprintViolation";
    case Errc::GateKindViolation: return "GateKindViolation";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooManyQubits: return "TooManyQubits";
    case Errc::NotEnoughQubits: return "NotEnoughQubits";
    case Errc::BadDims: return "BadDims";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::CX: return "cx";
    case GateKind::CCX: return "ccx";
    case GateKind::SWAP: return "swap";
  }
  return "?";
}

int Gate::arity() const {
  switch (kind_) {
    case GateKind::X: return 1;
    case GateKind::CX: return 2;
    case GateKind::CCX: return 3;
    case GateKind::SWAP: return 2;
  }
  return 0;
}

bool Gate::touches(int q) const {
  for (int i = 0; i < arity(); ++i) {
    if (operand(i) == q) return true;
  }
  return false;
}

Gate Gate::remapped(const std::vector<int>& map) const {
  Gate g = *this;
  for (int i = 0; i < arity(); ++i) {
    g.ops_[static_cast<std::size_t>(i)] = map.at(static_cast<std::size_t>(operand(i)));
  }
  return g;
}

std::string to_string(const Gate& g) {
  std::string s(gate_name(g.kind()));
  s += '(';
  for (int i = 0; i < g.arity(); ++i) {
    if (i) s += ',';
    s += std::to_string(g.operand(i));
  }
  s += ')';
  return s;
}

Circuit::Circuit(std::vector<Qubit> qubits) : qubits_(std::move(qubits)) {
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (qubits_[i].index != static_cast<int>(i)) {
      throw Error(Errc::UnknownQubit,
                  "qubit index " + std::to_string(qubits_[i].index) +
                      " at position " + std::to_string(i));
    }
  }
}

Circuit Circuit::with_qubits(int n) {
  std::vector<Qubit> qs;
  qs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    qs.push_back({i, Role::Auxiliary, "q" + std::to_string(i)});
  }
  return Circuit(std::move(qs));
}

void Circuit::add(const Gate& g) {
  for (int i = 0; i < g.arity(); ++i) {
    int q = g.operand(i);
    if (q < 0 || q >= num_qubits()) {
      throw Error(Errc::UnknownQubit, to_string(g));
    }
    for (int j = 0; j < i; ++j) {
      if (g.operand(j) == q) throw Error(Errc::DuplicateOperand, to_string(g));
    }
  }
  gates_.push_back(g);
}

void Circuit::add_all(const Circuit& other) {
  for (const Gate& g : other.gates()) add(g);
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(),
      [kind](const Gate& g) { return g.kind() == kind; }));
}

std::size_t Circuit::depth() const {
  std::vector<std::size_t> level(qubits_.size(), 0);
  std::size_t d = 0;
  for (const Gate& g : gates_) {
    std::size_t l = 0;
    for (int i = 0; i < g.arity(); ++i) {
      l = std::max(l, level[static_cast<std::size_t>(g.operand(i))]);
    }
    ++l;
    for (int i = 0; i < g.arity(); ++i) {
      level[static_cast<std::size_t>(g.operand(i))] = l;
    }
    d = std::max(d, l);
  }
  return d;
}

std::vector<int> Circuit::qubits_with_role(Role role) const {
  std::vector<int> out;
  for (const Qubit& q : qubits_) {
    if (q.role == role) out.push_back(q.index);
  }
  return out;
}

Circuit append(const Circuit& c, const Gate& g) {
  Circuit out = c;
  out.add(g);
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.add_all(b);
  return out;
}

std::size_t size(const Circuit& c) { return c.size(); }
std::size_t depth(const Circuit& c) { return c.depth(); }

Circuit empty_like(const Circuit& c) { return Circuit(c.qubits()); }

Circuit inverse(const Circuit& c) {
  Circuit out = empty_like(c);
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.add(*it);
  return out;
}

Circuit cancel_adjacent_x(const Circuit& c) {
  // A stack scan reaches the fixpoint in one pass: removing a pair exposes
  // the next candidate pair at the top of the stack.
  std::vector<Gate> kept;
  kept.reserve(c.size());
  for (const Gate& g : c.gates()) {
    if (!kept.empty() && kept.back() == g) {
      kept.pop_back();
    } else {
      kept.push_back(g);
    }
  }
  Circuit out = empty_like(c);
  for (const Gate& g : kept) out.add(g);
  return out;
}

}  // namespace mcx
