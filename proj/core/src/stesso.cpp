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

#include "mcxsynth/stesso.hpp"

#include <algorithm>

namespace mcx {

int default_supports(Variant variant, int n) { return variant == Variant::Seq1 ? n - 2 : 1; }

StessoCircuit build_pp(int n, Variant variant, int n_s) {
  StessoCircuit out;
  out.sequence = make_sequence(variant, n, n_s);
  ComposedHalves h = compose_halves(out.sequence);
  out.circuit = concat(h.m, h.m_prime);
  out.m = std::move(h.m);
  out.m_prime = std::move(h.m_prime);
  for (int i = 0; i < n; ++i) out.controls.push_back(i);
  for (int i = 0; i < n_s; ++i) out.supports.push_back(n + i);
  out.target = n + n_s;
  return out;
}

StessoCircuit build_mp(int n, const PolarityMask& mask, Variant variant, int n_s) {
  if (mask.size() != n) {
    throw Error(Errc::MaskLengthMismatch, "mask has " + std::to_string(mask.size()) +
                                              " bits for " + std::to_string(n) + " controls");
  }
  StessoCircuit out = build_pp(n, variant, n_s);
  Circuit prefix = empty_like(out.circuit);
  for (int i = 0; i < n; ++i) {
    if (mask.control_polarity[static_cast<std::size_t>(i)]) prefix.add(Gate::x(i));
  }
  out.m = concat(prefix, out.m);
  out.m_prime = concat(out.m_prime, prefix);
  out.circuit = cancel_adjacent_x(concat(out.m, out.m_prime));
  return out;
}

Circuit synth_pp(int n, Variant variant, int n_s) { return build_pp(n, variant, n_s).circuit; }

Circuit synth_mp(int n, const PolarityMask& mask, Variant variant, int n_s) {
  return build_mp(n, mask, variant, n_s).circuit;
}

long mp_size_excess(int n, const PolarityMask& mask, Variant variant, int n_s) {
  const auto mp = static_cast<long>(synth_mp(n, mask, variant, n_s).size());
  const auto pp = static_cast<long>(synth_pp(n, variant, n_s).size());
  return mp - pp - mask.num_negated();
}

std::set<int> ConstrainedUnitary::effective_footprint() const {
  if (footprint) return *footprint;
  std::set<int> s;
  for (const Gate& g : circuit.gates()) {
    for (int i = 0; i < g.arity(); ++i) s.insert(g.operand(i));
  }
  return s;
}

ConstraintVerdict validate_constrained(const ConstrainedUnitary& u,
                                       const std::set<int>& allowed) {
  ConstraintVerdict v;
  std::set<int> fp = u.effective_footprint();
  for (const Gate& g : u.circuit.gates()) {
    for (int i = 0; i < g.arity(); ++i) fp.insert(g.operand(i));
    if (g.kind() == GateKind::SWAP && v.kinds_ok) {
      v.kinds_ok = false;
      v.reason = "gate " + to_string(g) + " is not X, CX or CCX";
    }
  }
  for (int q : fp) {
    if (!allowed.count(q)) {
      v.footprint_ok = false;
      if (v.reason.empty()) v.reason = "qubit " + std::to_string(q) + " outside footprint";
      break;
    }
  }
  return v;
}

std::set<int> u1_allowed(const std::vector<int>& controls, const std::vector<int>& supports) {
  std::set<int> s(supports.begin(), supports.end());
  for (std::size_t i = 0; i < controls.size() && i < 2; ++i) s.insert(controls[i]);
  return s;
}

std::set<int> u2_allowed(const std::vector<int>& controls, const std::vector<int>& supports,
                         int target) {
  std::set<int> s(supports.begin(), supports.end());
  for (std::size_t i = 2; i < controls.size(); ++i) s.insert(controls[i]);
  s.insert(target);
  return s;
}

namespace {

void require(const ConstrainedUnitary& u, const std::set<int>& allowed, const char* name) {
  ConstraintVerdict v = validate_constrained(u, allowed);
  if (!v.kinds_ok) throw Error(Errc::GateKindViolation, std::string(name) + ": " + v.reason);
  if (!v.footprint_ok) {
    throw Error(Errc::FootprintViolation, std::string(name) + ": " + v.reason);
  }
}

}  // namespace

Circuit synth_g(const Circuit& m, const Circuit& m_prime, const ConstrainedUnitary& u1,
                const ConstrainedUnitary& u2, const std::vector<int>& controls,
                const std::vector<int>& supports, int target) {
  require(u1, u1_allowed(controls, supports), "U1");
  require(u2, u2_allowed(controls, supports, target), "U2");
  Circuit out = empty_like(m);
  out.add_all(u1.circuit);
  out.add_all(u2.circuit);
  out.add_all(m);
  out.add_all(inverse(u1.circuit));
  out.add_all(m_prime);
  out.add_all(inverse(u2.circuit));
  return out;
}

Circuit synth_g(const StessoCircuit& mp, const ConstrainedUnitary& u1,
                const ConstrainedUnitary& u2) {
  return synth_g(mp.m, mp.m_prime, u1, u2, mp.controls, mp.supports, mp.target);
}

}  // namespace mcx
