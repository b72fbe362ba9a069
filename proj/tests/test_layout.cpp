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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mcxsynth/layout.hpp"

namespace mcx {
namespace {

// Qubits a..e as 0..4.
Circuit symbol_shape() {
  Circuit c = Circuit::with_qubits(5);
  c.add(Gate::ccx(0, 1, 2));
  c.add(Gate::ccx(2, 3, 4));
  return c;
}

Circuit v_shape() {
  Circuit c = symbol_shape();
  c.add(Gate::ccx(0, 1, 2));
  return c;
}

TEST(RequirementGraph, Examples) {
  Circuit one = Circuit::with_qubits(3);
  one.add(Gate::ccx(0, 1, 2));
  RequirementGraph g = requirement_graph(one);
  EXPECT_EQ(g.edges, (std::set<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(requirement_graph(Circuit::with_qubits(4)).edges.empty());
  EXPECT_EQ(requirement_graph(symbol_shape()), requirement_graph(v_shape()));
  EXPECT_EQ(requirement_graph(v_shape()).edges.size(), 6U);
}

TEST(RequirementGraphProperty, OrderAndRepetitionInvariant) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Circuit c = Circuit::with_qubits(6);
    std::uniform_int_distribution<int> q(0, 5);
    while (c.size() < 8) {
      int a = q(rng), b = q(rng), t = q(rng);
      if (a != b && b != t && a != t) c.add(trial % 2 ? Gate::ccx(a, b, t) : Gate::cx(a, b));
    }
    std::vector<Gate> gates = c.gates();
    std::shuffle(gates.begin(), gates.end(), rng);
    Circuit d = Circuit::with_qubits(6);
    for (const Gate& g : gates) d.add(g);
    d.add(gates.front());
    EXPECT_EQ(requirement_graph(c), requirement_graph(d));
  }
}

TEST(Coupling, Generators) {
  CouplingGraph grid = make_coupling(CouplingKind::SquareGrid, {3, 3});
  EXPECT_EQ(grid.num_vertices(), 9);
  EXPECT_EQ(grid.edges().size(), 12U);
  EXPECT_EQ(grid.max_degree(), 4);
  EXPECT_FALSE(grid.has_triangle());

  CouplingGraph tri = make_coupling(CouplingKind::TriangleChain, {2});
  EXPECT_EQ(tri.num_vertices(), 5);
  EXPECT_EQ(tri.edges().size(), 6U);
  EXPECT_TRUE(tri.has_triangle());

  CouplingGraph lat = make_coupling(CouplingKind::SquareLattice, {2, 2});
  EXPECT_EQ(lat.num_vertices(), 9);

  CouplingGraph hex = make_coupling(CouplingKind::HeavyHex, {1, 1});
  EXPECT_EQ(hex.num_vertices(), 12);
  EXPECT_EQ(hex.edges().size(), 12U);
  EXPECT_LE(hex.max_degree(), 3);
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      CouplingGraph h = make_coupling(CouplingKind::HeavyHex, {r, c});
      EXPECT_LE(h.max_degree(), 3);
      EXPECT_FALSE(h.has_triangle());
      for (int v = 0; v < h.num_vertices(); ++v) EXPECT_GE(h.distance(0, v), 0);
    }
  }
}

TEST(Coupling, BadDims) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::ParseError;
  };
  EXPECT_EQ(code([] { make_coupling(CouplingKind::SquareGrid, {0, 3}); }), Errc::BadDims);
  EXPECT_EQ(code([] { make_coupling(CouplingKind::SquareGrid, {3}); }), Errc::BadDims);
  EXPECT_EQ(code([] { make_coupling(CouplingKind::TriangleChain, {2, 2}); }), Errc::BadDims);
  EXPECT_EQ(code([] { parse_coupling("square_grid", "3xq"); }), Errc::BadDims);
  EXPECT_EQ(parse_coupling("square_grid", "2x4").num_vertices(), 8);
  EXPECT_EQ(parse_coupling("path", "4").edges().size(), 3U);
}

void expect_valid(const Circuit& c, const CouplingGraph& cg, const Placement& p) {
  std::set<int> used(p.assignment.begin(), p.assignment.end());
  EXPECT_EQ(used.size(), p.assignment.size());
  for (const Gate& g : p.routed.gates()) EXPECT_TRUE(executable(g, cg)) << to_string(g);
  EXPECT_EQ(static_cast<std::size_t>(p.swap_count), p.routed.count(GateKind::SWAP));
  EXPECT_EQ(p.routed.size() - p.routed.count(GateKind::SWAP), c.size());
  EXPECT_TRUE(routed_equivalent(c, p));
}

TEST(Route, TriangleChainNeedsNoSwaps) {
  CouplingGraph tri = make_coupling(CouplingKind::TriangleChain, {2});
  for (const Circuit& c : {symbol_shape(), v_shape()}) {
    Placement p = place_and_route(c, tri);
    EXPECT_TRUE(p.exact);
    EXPECT_EQ(p.swap_count, 0);
    expect_valid(c, tri, p);
  }
}

TEST(Route, GridAndHeavyHex) {
  for (const CouplingGraph& cg : {make_coupling(CouplingKind::SquareGrid, {3, 3}),
                                  make_coupling(CouplingKind::HeavyHex, {1, 1})}) {
    Placement p = place_and_route(v_shape(), cg);
    EXPECT_TRUE(p.exact);
    expect_valid(v_shape(), cg, p);
    RouteOptions g;
    g.mode = RouterMode::Greedy;
    Placement q = place_and_route(v_shape(), cg, g);
    EXPECT_FALSE(q.exact);
    expect_valid(v_shape(), cg, q);
    EXPECT_LE(p.swap_count, q.swap_count);
  }
}

TEST(Route, TriangleOnPathUsesLinearTemplate) {
  Circuit c = Circuit::with_qubits(3);
  c.add(Gate::ccx(0, 1, 2));
  CouplingGraph path = path_coupling(3);
  Placement p = place_and_route(c, path);
  EXPECT_EQ(p.swap_count, 0);
  EXPECT_EQ(p.assignment[2], 1);  // target in the middle
  expect_valid(c, path, p);
}

TEST(Route, CxTriangleOnPathNeedsOneSwap) {
  Circuit c = Circuit::with_qubits(3);
  c.add(Gate::cx(0, 1));
  c.add(Gate::cx(1, 2));
  c.add(Gate::cx(0, 2));
  CouplingGraph path = path_coupling(3);
  Placement p = place_and_route(c, path);
  EXPECT_EQ(p.swap_count, 1);
  expect_valid(c, path, p);
}

TEST(Route, NotEnoughQubits) {
  try {
    place_and_route(v_shape(), path_coupling(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotEnoughQubits);
  }
}

TEST(RouteProperty, ExactNeverWorseThanGreedy) {
  std::mt19937 rng(5);
  const std::vector<CouplingGraph> couplings{
      make_coupling(CouplingKind::SquareGrid, {2, 3}), make_coupling(CouplingKind::TriangleChain, {3}),
      make_coupling(CouplingKind::HeavyHex, {1, 1}), path_coupling(6)};
  for (int trial = 0; trial < 40; ++trial) {
    const int nq = 3 + trial % 3;
    Circuit c = Circuit::with_qubits(nq);
    std::uniform_int_distribution<int> q(0, nq - 1);
    while (c.size() < 5) {
      int a = q(rng), b = q(rng), t = q(rng);
      if (a == b) continue;
      if (trial % 2 && a != t && b != t) c.add(Gate::ccx(a, b, t));
      else c.add(Gate::cx(a, b));
    }
    const CouplingGraph& cg = couplings[static_cast<std::size_t>(trial) % couplings.size()];
    Placement exact = place_and_route(c, cg);
    RouteOptions g;
    g.mode = RouterMode::Greedy;
    Placement greedy = place_and_route(c, cg, g);
    ASSERT_TRUE(exact.exact);
    EXPECT_LE(exact.swap_count, greedy.swap_count);
    expect_valid(c, cg, exact);
    expect_valid(c, cg, greedy);
  }
}

TEST(Route, LargeCircuitFallsBackToGreedy) {
  Circuit c = Circuit::with_qubits(12);
  for (int i = 0; i + 2 < 12; ++i) c.add(Gate::ccx(i, i + 1, i + 2));
  c.add(Gate::cx(0, 11));
  CouplingGraph cg = make_coupling(CouplingKind::SquareGrid, {4, 4});
  Placement p = place_and_route(c, cg);
  EXPECT_FALSE(p.exact);
  expect_valid(c, cg, p);
  EXPECT_EQ(p.native_cx_estimate, 6L * 10 + 3L * p.swap_count + 1);
}

}  // namespace
}  // namespace mcx
