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

#include "mcxsynth/simulator.hpp"

#include <random>
#include <sstream>

namespace mcx {

int PolarityMask::num_negated() const {
  int n = 0;
  for (bool b : control_polarity) n += b ? 1 : 0;
  return n;
}

std::string PolarityMask::to_string() const {
  std::string s;
  for (bool b : control_polarity) s += b ? '1' : '0';
  return s;
}

PolarityMask PolarityMask::parse(std::string_view bits) {
  PolarityMask m;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw Error(Errc::ParseError, "polarity mask must be a bitstring");
    }
    m.control_polarity.push_back(ch == '1');
  }
  return m;
}

std::string BasisState::to_string() const {
  std::string s;
  for (int q = 0; q < num_qubits; ++q) s += get(q) ? '1' : '0';
  return s;
}

BasisState BasisState::parse(const std::string& text) {
  if (text.size() > kMaxSimQubits) throw Error(Errc::TooManyQubits, text);
  BasisState s{static_cast<int>(text.size()), 0};
  for (int q = 0; q < s.num_qubits; ++q) {
    char ch = text[static_cast<std::size_t>(q)];
    if (ch != '0' && ch != '1') throw Error(Errc::ParseError, text);
    s.set(q, ch == '1');
  }
  return s;
}

CompiledCircuit::CompiledCircuit(const Circuit& c) : num_qubits_(c.num_qubits()) {
  if (num_qubits_ > kMaxSimQubits) {
    throw Error(Errc::TooManyQubits, std::to_string(num_qubits_));
  }
  ops_.reserve(c.size());
  for (const Gate& g : c.gates()) {
    auto bit = [&](int i) { return std::uint64_t{1} << g.operand(i); };
    switch (g.kind()) {
      case GateKind::X: ops_.push_back({g.kind(), 0, bit(0)}); break;
      case GateKind::CX: ops_.push_back({g.kind(), bit(0), bit(1)}); break;
      case GateKind::CCX: ops_.push_back({g.kind(), bit(0) | bit(1), bit(2)}); break;
      case GateKind::SWAP: ops_.push_back({g.kind(), bit(0), bit(1)}); break;
    }
  }
}

std::uint64_t CompiledCircuit::run(std::uint64_t s) const {
  for (const Op& op : ops_) {
    if (op.kind == GateKind::SWAP) {
      bool a = (s & op.ctrl) != 0;
      bool b = (s & op.tgt) != 0;
      if (a != b) s ^= op.ctrl | op.tgt;
    } else if ((s & op.ctrl) == op.ctrl) {
      s ^= op.tgt;
    }
  }
  return s;
}

BasisState apply(const Circuit& c, const BasisState& s) {
  if (s.num_qubits != c.num_qubits()) {
    throw Error(Errc::LengthMismatch, "state has " + std::to_string(s.num_qubits) +
                                          " qubits, circuit has " +
                                          std::to_string(c.num_qubits()));
  }
  return {s.num_qubits, CompiledCircuit(c).run(s.bits)};
}

bool PermutationTable::is_bijective() const {
  std::vector<bool> seen(mapping.size(), false);
  for (std::uint32_t v : mapping) {
    if (v >= mapping.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool PermutationTable::is_identity() const {
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (mapping[i] != i) return false;
  }
  return true;
}

PermutationTable permutation_table(const Circuit& c) {
  if (c.num_qubits() > kMaxTableQubits) {
    throw Error(Errc::TooManyQubits, std::to_string(c.num_qubits()) + " > " +
                                         std::to_string(kMaxTableQubits));
  }
  CompiledCircuit cc(c);
  std::size_t n = std::size_t{1} << c.num_qubits();
  PermutationTable t;
  t.mapping.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    t.mapping[s] = static_cast<std::uint32_t>(cc.run(s));
  }
  if (!t.is_bijective()) {
    // Unreachable for the gate alphabet; guards against a corrupted IR.
    throw Error(Errc::OutOfRange, "permutation table is not bijective");
  }
  return t;
}

namespace {

struct MaskSet {
  std::uint64_t ctrl = 0;
  std::uint64_t want = 0;
  std::uint64_t tgt = 0;
  std::uint64_t sup = 0;
};

MaskSet make_masks(int nq, const std::vector<int>& controls, const PolarityMask& mask,
                   int target, const std::vector<int>& supports) {
  if (mask.size() != static_cast<int>(controls.size())) {
    throw Error(Errc::MaskLengthMismatch, "mask " + std::to_string(mask.size()) +
                                              " vs " + std::to_string(controls.size()) +
                                              " controls");
  }
  auto check = [nq](int q) {
    if (q < 0 || q >= nq) throw Error(Errc::UnknownQubit, std::to_string(q));
  };
  MaskSet m;
  for (std::size_t i = 0; i < controls.size(); ++i) {
    check(controls[i]);
    m.ctrl |= std::uint64_t{1} << controls[i];
    if (!mask.control_polarity[i]) m.want |= std::uint64_t{1} << controls[i];
  }
  check(target);
  m.tgt = std::uint64_t{1} << target;
  for (int s : supports) {
    check(s);
    m.sup |= std::uint64_t{1} << s;
  }
  return m;
}

}  // namespace

PermutationTable mcx_table(int num_qubits, const std::vector<int>& controls,
                           const PolarityMask& mask, int target) {
  if (num_qubits > kMaxTableQubits) {
    throw Error(Errc::TooManyQubits, std::to_string(num_qubits));
  }
  MaskSet m = make_masks(num_qubits, controls, mask, target, {});
  std::size_t n = std::size_t{1} << num_qubits;
  PermutationTable t;
  t.mapping.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    bool fire = (s & m.ctrl) == m.want;
    t.mapping[s] = static_cast<std::uint32_t>(fire ? (s ^ m.tgt) : s);
  }
  return t;
}

std::string McxVerdict::summary() const {
  auto w = [](bool b) { return b ? "ok" : "FAIL"; };
  std::ostringstream os;
  os << "mcx: " << w(mcx) << ", restore: " << w(restore)
     << ", support-independent: " << w(support_independent);
  return os.str();
}

McxVerdict verify_mcx(const Circuit& c, const std::vector<int>& controls,
                      const PolarityMask& mask, int target,
                      const std::vector<int>& supports, const VerifyOptions& opts) {
  const int nq = c.num_qubits();
  MaskSet m = make_masks(nq, controls, mask, target, supports);
  CompiledCircuit cc(c);
  McxVerdict v;

  auto check_state = [&](std::uint64_t s, std::uint64_t alt_support_bits) {
    std::uint64_t out = cc.run(s);
    bool fire = (s & m.ctrl) == m.want;
    std::uint64_t expect_t = ((s & m.tgt) != 0) != fire ? m.tgt : 0;
    bool ok_mcx = (out & m.tgt) == expect_t;
    bool ok_restore = (out & ~m.tgt) == (s & ~m.tgt);
    std::uint64_t s2 = (s & ~m.sup) | (alt_support_bits & m.sup);
    bool ok_indep = (cc.run(s2) & m.tgt) == (out & m.tgt);
    if (!ok_mcx || !ok_restore || !ok_indep) {
      v.mcx = v.mcx && ok_mcx;
      v.restore = v.restore && ok_restore;
      v.support_independent = v.support_independent && ok_indep;
      if (!v.counterexample) v.counterexample = BasisState{nq, s};
    }
    ++v.states_checked;
  };

  if (nq <= opts.exhaustive_limit) {
    std::uint64_t n = std::uint64_t{1} << nq;
    for (std::uint64_t s = 0; s < n; ++s) check_state(s, 0);
  } else {
    v.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    std::uint64_t all = nq == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nq) - 1;
    for (std::uint64_t i = 0; i < opts.sample_budget; ++i) {
      check_state(rng() & all, rng());
    }
  }
  return v;
}

}  // namespace mcx
