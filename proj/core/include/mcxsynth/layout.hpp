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
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcxsynth/circuit.hpp"

namespace mcx {

using Edge = std::pair<int, int>;

/// Normalized so that first < second.
Edge make_edge(int a, int b);

struct RequirementGraph {
  int num_vertices = 0;
  std::set<Edge> edges;

  bool has_edge(int a, int b) const { return edges.count(make_edge(a, b)) != 0; }
  bool operator==(const RequirementGraph&) const = default;
};

/// Union of operand cliques over all gates (3-clique per CCX, 2-clique
/// per CX/SWAP). Repeated gates add nothing.
RequirementGraph requirement_graph(const Circuit& c);

enum class CouplingKind { TriangleChain, SquareLattice, SquareGrid, HeavyHex, Custom };

std::string_view coupling_kind_name(CouplingKind k);
CouplingKind parse_coupling_kind(std::string_view s);

class CouplingGraph {
 public:
  CouplingGraph(CouplingKind kind, std::vector<int> dims, int num_vertices,
                const std::set<Edge>& edges);

  CouplingKind kind() const { return kind_; }
  const std::vector<int>& dims() const { return dims_; }
  int num_vertices() const { return static_cast<int>(adj_.size()); }
  const std::set<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int a, int b) const { return edges_.count(make_edge(a, b)) != 0; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool has_triangle() const { return has_triangle_; }
  /// All-pairs hop distance; -1 when disconnected.
  int distance(int a, int b) const {
    return dist_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

 private:
  CouplingKind kind_;
  std::vector<int> dims_;
  std::set<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> dist_;
  bool has_triangle_ = false;
};

/// triangle_chain takes {k}; the lattice kinds take {rows, cols}.
/// Throws BadDims.
CouplingGraph make_coupling(CouplingKind kind, const std::vector<int>& dims);
CouplingGraph custom_coupling(int num_vertices, const std::set<Edge>& edges);
CouplingGraph path_coupling(int n);

/// "triangle_chain" + "2", "square_grid" + "3x3", "path" + "3".
CouplingGraph parse_coupling(std::string_view kind, std::string_view dims);

/// True when the gate can run on physical qubits `phys` of `g`'s operands.
/// On couplings with triangles a CCX needs mutually adjacent operands;
/// otherwise the target must neighbour both controls.
bool executable(const Gate& g, const CouplingGraph& coupling);

struct ScheduledSwap {
  /// Inserted before original gate `position`.
  std::size_t position = 0;
  int a = 0;
  int b = 0;
};

struct Placement {
  /// Logical -> physical before the first gate.
  std::vector<int> assignment;
  /// Logical -> physical after the last gate.
  std::vector<int> final_assignment;
  int swap_count = 0;
  std::vector<ScheduledSwap> swap_schedule;
  /// Circuit over physical qubits, SWAPs included.
  Circuit routed;
  bool exact = false;
  /// 6 per CCX, 3 per SWAP, 1 per CX.
  long native_cx_estimate = 0;
};

enum class RouterMode { Auto, Exact, Greedy };

struct RouteOptions {
  RouterMode mode = RouterMode::Auto;
  int exact_max_logical = 8;
  std::uint64_t exact_state_budget = 4'000'000;
};

/// Throws NotEnoughQubits when the coupling is too small or disconnected
/// for the circuit.
Placement place_and_route(const Circuit& c, const CouplingGraph& coupling,
                          const RouteOptions& opts = {});

/// Checks routed o relabeling == original on every basis state of the
/// logical qubits (sampled above 20 qubits).
bool routed_equivalent(const Circuit& original, const Placement& p);

}  // namespace mcx
