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

#include "mcxsynth/comparator.hpp"

#include <sstream>

#include "mcxsynth/shapes.hpp"
#include "mcxsynth/simulator.hpp"
#include "mcxsynth/stesso.hpp"

namespace mcx {

CompareResult classical_compare(std::int64_t x, std::int64_t y, int n) {
  if (n < 1 || n > 31) throw Error(Errc::OutOfRange, "width " + std::to_string(n));
  const std::int64_t lim = std::int64_t{1} << n;
  if (x < 0 || y < 0 || x >= lim || y >= lim) {
    throw Error(Errc::OutOfRange, "operands must lie in [0, " + std::to_string(lim) + ")");
  }
  return {x < y, x == y, x > y};
}

namespace {

std::vector<Qubit> comparator_qubits(int n, int extra, const std::vector<std::string>& names) {
  std::vector<Qubit> qs;
  for (int i = 0; i < n; ++i) qs.push_back({i, Role::Control, "x" + std::to_string(i + 1)});
  for (int i = 0; i < n; ++i) qs.push_back({n + i, Role::Control, "y" + std::to_string(i + 1)});
  for (int i = 0; i < extra; ++i) {
    qs.push_back({2 * n + i, Role::Target, names[static_cast<std::size_t>(i)]});
  }
  return qs;
}

// x_i -> not(x_i) xor y_i on every x wire.
Circuit equality_prep(const Circuit& frame, int n, int first = 0) {
  Circuit c = empty_like(frame);
  for (int i = first; i < n; ++i) {
    c.add(Gate::cx(n + i, i));
    c.add(Gate::x(i));
  }
  return c;
}

}  // namespace

ComparatorCircuit synth_comparator(int n) {
  if (n < 1) throw Error(Errc::OutOfRange, "width must be positive");
  ComparatorCircuit out;
  out.n = n;
  for (int i = 0; i < n; ++i) out.x.push_back(i), out.y.push_back(n + i);
  out.out_lt = 2 * n;
  out.out_eq = 2 * n + 1;
  out.out_gt = 2 * n + 2;
  Circuit c(comparator_qubits(n, 3, {"lt", "eq", "gt"}));

  // Less-than as a generalized Stesso around one V shape:
  // c1 = y1, c2 = not x1, c_{i+1} = not x_i xor y_i, s1 = y2,
  // s_j = y_j xor y_{j+1}. The V leaves lt xor y_n on the result.
  std::vector<int> controls{n, 0};
  for (int i = 1; i < n; ++i) controls.push_back(i);
  std::vector<int> supports;
  for (int i = 1; i < n; ++i) supports.push_back(n + i);
  ConstrainedUnitary u1{empty_like(c), std::nullopt};
  u1.circuit.add(Gate::x(0));
  ConstrainedUnitary u2{equality_prep(c, n, 1), std::nullopt};
  for (int j = n - 2; j >= 1; --j) u2.circuit.add(Gate::cx(n + j, n + j + 1));
  Circuit m = build_vshape(c, controls, supports, out.out_lt);
  c.add_all(synth_g(m, empty_like(c), u1, u2, controls, supports, out.out_lt));
  if (n >= 2) c.add(Gate::cx(2 * n - 1, out.out_lt));

  // Equality: product of the n agreement bits, y wires as dirty supports.
  Circuit prep = equality_prep(c, n);
  c.add_all(prep);
  if (n == 1) {
    c.add(Gate::cx(0, out.out_eq));
  } else if (n == 2) {
    c.add(Gate::ccx(0, 1, out.out_eq));
  } else {
    Circuit pp = synth_pp(n, Variant::Seq1, n - 2);
    std::vector<int> map;
    for (int i = 0; i < n; ++i) map.push_back(i);
    for (int i = 0; i < n - 2; ++i) map.push_back(n + i);
    map.push_back(out.out_eq);
    for (const Gate& g : pp.gates()) c.add(g.remapped(map));
  }
  c.add_all(inverse(prep));

  c.add(Gate::cx(out.out_lt, out.out_gt));
  c.add(Gate::cx(out.out_eq, out.out_gt));
  c.add(Gate::x(out.out_gt));
  out.circuit = std::move(c);
  return out;
}

ReuseLessThan4 reuse_less_than_4() {
  constexpr int n = 4;
  ReuseLessThan4 out;
  for (int i = 0; i < n; ++i) out.x.push_back(i), out.y.push_back(n + i);
  const int ra = 2 * n;
  const int y2 = n + 1, y3 = n + 2, y4 = n + 3;
  out.lt_wire = y4;
  out.moved_y4 = ra;
  Circuit c(comparator_qubits(n, 1, {"r"}));
  Circuit ctrl = empty_like(c);
  ctrl.add(Gate::x(0));
  ctrl.add_all(equality_prep(c, n, 1));
  c.add_all(ctrl);
  // Extra wire: y4 then y3 xor y4 (s3). The y3 wire becomes s2.
  c.add(Gate::cx(y4, ra));
  c.add(Gate::cx(y3, ra));
  c.add(Gate::cx(y2, y3));
  c.add_all(build_vshape(c, {n, 0, 1, 2, 3}, {y2, y3, ra}, y4));
  c.add(Gate::cx(y2, y3));
  c.add(Gate::cx(y3, ra));
  // The y4 wire now holds lt, so x4 is restored from the copy.
  const Circuit undo = inverse(ctrl);
  for (const Gate& g : undo.gates()) {
    c.add(g == Gate::cx(y4, 3) ? Gate::cx(ra, 3) : g);
  }
  out.circuit = std::move(c);
  return out;
}

std::string ComparatorReport::summary() const {
  std::ostringstream os;
  auto f = [](bool b) { return b ? "ok" : "FAIL"; };
  os << "pairs: " << pairs_checked << ", outputs: " << f(outputs_match)
     << ", one-hot: " << f(one_hot) << ", restore: " << f(inputs_restored)
     << ", gt-identity: " << f(gt_identity);
  return os.str();
}

ComparatorReport verify_comparator(const ComparatorCircuit& c) {
  ComparatorReport rep;
  const int n = c.n;
  CompiledCircuit cc(c.circuit);
  const std::uint64_t lim = std::uint64_t{1} << n;
  for (std::uint64_t xv = 0; xv < lim; ++xv) {
    for (std::uint64_t yv = 0; yv < lim; ++yv) {
      std::uint64_t in = 0;
      for (int i = 0; i < n; ++i) {
        if ((xv >> i) & 1U) in |= std::uint64_t{1} << c.x[static_cast<std::size_t>(i)];
        if ((yv >> i) & 1U) in |= std::uint64_t{1} << c.y[static_cast<std::size_t>(i)];
      }
      const std::uint64_t out = cc.run(in);
      auto bit = [&](int q) { return ((out >> q) & 1U) != 0; };
      CompareResult got{bit(c.out_lt), bit(c.out_eq), bit(c.out_gt)};
      CompareResult want = classical_compare(static_cast<std::int64_t>(xv),
                                             static_cast<std::int64_t>(yv), n);
      ++rep.pairs_checked;
      if (!(got == want)) rep.outputs_match = false;
      if (int{got.lt} + int{got.eq} + int{got.gt} != 1) rep.one_hot = false;
      if (got.gt != (got.lt != !got.eq)) rep.gt_identity = false;
      const std::uint64_t results = (std::uint64_t{1} << c.out_lt) |
                                    (std::uint64_t{1} << c.out_eq) |
                                    (std::uint64_t{1} << c.out_gt);
      if ((out & ~results) != in) rep.inputs_restored = false;
    }
  }
  return rep;
}

}  // namespace mcx
