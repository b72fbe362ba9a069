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

#include "mcxsynth/layout.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>

#include "mcxsynth/simulator.hpp"

namespace mcx {

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

RequirementGraph requirement_graph(const Circuit& c) {
  RequirementGraph g;
  g.num_vertices = c.num_qubits();
  for (const Gate& gate : c.gates()) {
    for (int i = 0; i < gate.arity(); ++i) {
      for (int j = i + 1; j < gate.arity(); ++j) {
        g.edges.insert(make_edge(gate.operand(i), gate.operand(j)));
      }
    }
  }
  return g;
}

std::string_view coupling_kind_name(CouplingKind k) {
  switch (k) {
    case CouplingKind::TriangleChain: return "triangle_chain";
    case CouplingKind::SquareLattice: return "square_lattice";
    case CouplingKind::SquareGrid: return "square_grid";
    case CouplingKind::HeavyHex: return "heavy_hex";
    case CouplingKind::Custom: return "custom";
  }
  return "?";
}

CouplingKind parse_coupling_kind(std::string_view s) {
  for (CouplingKind k : {CouplingKind::TriangleChain, CouplingKind::SquareLattice,
                         CouplingKind::SquareGrid, CouplingKind::HeavyHex,
                         CouplingKind::Custom}) {
    if (coupling_kind_name(k) == s) return k;
  }
  throw Error(Errc::ParseError, "unknown coupling kind '" + std::string(s) + "'");
}

CouplingGraph::CouplingGraph(CouplingKind kind, std::vector<int> dims, int num_vertices,
                             const std::set<Edge>& edges)
    : kind_(kind), dims_(std::move(dims)) {
  if (num_vertices < 1) throw Error(Errc::BadDims, "coupling needs a vertex");
  adj_.resize(static_cast<std::size_t>(num_vertices));
  for (const auto& [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) {
      throw Error(Errc::BadDims, "bad coupling edge");
    }
    edges_.insert(make_edge(a, b));
  }
  for (const auto& [a, b] : edges_) {
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& n : adj_) std::sort(n.begin(), n.end());
  const auto nv = static_cast<std::size_t>(num_vertices);
  dist_.assign(nv, std::vector<int>(nv, -1));
  for (std::size_t s = 0; s < nv; ++s) {
    std::deque<int> q{static_cast<int>(s)};
    dist_[s][s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj_[static_cast<std::size_t>(v)]) {
        auto& d = dist_[s][static_cast<std::size_t>(w)];
        if (d < 0) {
          d = dist_[s][static_cast<std::size_t>(v)] + 1;
          q.push_back(w);
        }
      }
    }
  }
  for (const auto& [a, b] : edges_) {
    for (int c : adj_[static_cast<std::size_t>(a)]) {
      if (c != b && adjacent(b, c)) has_triangle_ = true;
    }
  }
}

int CouplingGraph::max_degree() const {
  int d = 0;
  for (const auto& n : adj_) d = std::max(d, static_cast<int>(n.size()));
  return d;
}

namespace {

std::set<Edge> grid_edges(int rows, int cols) {
  std::set<Edge> e;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int v = i * cols + j;
      if (j + 1 < cols) e.insert({v, v + 1});
      if (i + 1 < rows) e.insert({v, v + cols});
    }
  }
  return e;
}

// Brick-wall hexagon grid, dangling vertices pruned, every edge subdivided.
std::pair<int, std::set<Edge>> heavy_hex_edges(int rows, int cols) {
  const int h = rows + 1;
  const int w = 2 * cols + 2;
  std::set<Edge> e;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      int v = i * w + j;
      if (j + 1 < w) e.insert({v, v + 1});
      if (i + 1 < h && (i + j) % 2 == 0) e.insert({v, v + w});
    }
  }
  std::vector<int> deg(static_cast<std::size_t>(h * w), 0);
  for (const auto& [a, b] : e) ++deg[static_cast<std::size_t>(a)], ++deg[static_cast<std::size_t>(b)];
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = e.begin(); it != e.end();) {
      if (deg[static_cast<std::size_t>(it->first)] <= 1 ||
          deg[static_cast<std::size_t>(it->second)] <= 1) {
        --deg[static_cast<std::size_t>(it->first)];
        --deg[static_cast<std::size_t>(it->second)];
        it = e.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  std::map<int, int> id;
  for (const auto& [a, b] : e) id.emplace(a, 0), id.emplace(b, 0);
  int next = 0;
  for (auto& [v, i] : id) i = next++;
  std::set<Edge> out;
  for (const auto& [a, b] : e) {
    int mid = next++;
    out.insert(make_edge(id[a], mid));
    out.insert(make_edge(id[b], mid));
  }
  return {next, out};
}

}  // namespace

CouplingGraph make_coupling(CouplingKind kind, const std::vector<int>& dims) {
  for (int d : dims) {
    if (d < 1) throw Error(Errc::BadDims, "dimensions must be positive");
  }
  switch (kind) {
    case CouplingKind::TriangleChain: {
      if (dims.size() != 1) throw Error(Errc::BadDims, "triangle_chain takes one dimension");
      const int k = dims[0];
      std::set<Edge> e;
      for (int i = 0; i < k; ++i) {
        e.insert({2 * i, 2 * i + 1});
        e.insert({2 * i + 1, 2 * i + 2});
        e.insert({2 * i, 2 * i + 2});
      }
      return CouplingGraph(kind, dims, 2 * k + 1, e);
    }
    case CouplingKind::SquareGrid:
    case CouplingKind::SquareLattice:
    case CouplingKind::HeavyHex: {
      if (dims.size() != 2) {
        throw Error(Errc::BadDims,
                    std::string(coupling_kind_name(kind)) + " takes rows and cols");
      }
      if (kind == CouplingKind::HeavyHex) {
        auto [n, e] = heavy_hex_edges(dims[0], dims[1]);
        return CouplingGraph(kind, dims, n, e);
      }
      const int extra = kind == CouplingKind::SquareLattice ? 1 : 0;
      const int r = dims[0] + extra;
      const int c = dims[1] + extra;
      return CouplingGraph(kind, dims, r * c, grid_edges(r, c));
    }
    case CouplingKind::Custom:
      break;
  }
  throw Error(Errc::BadDims, "custom couplings are built from edge lists");
}

CouplingGraph custom_coupling(int num_vertices, const std::set<Edge>& edges) {
  return CouplingGraph(CouplingKind::Custom, {num_vertices}, num_vertices, edges);
}

CouplingGraph path_coupling(int n) {
  if (n < 1) throw Error(Errc::BadDims, "path needs a vertex");
  std::set<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.insert({i, i + 1});
  return custom_coupling(n, e);
}

CouplingGraph parse_coupling(std::string_view kind, std::string_view dims) {
  std::vector<int> d;
  std::string cur;
  for (char ch : std::string(dims) + "x") {
    if (ch == 'x' || ch == ',' || ch == 'X') {
      if (cur.empty()) throw Error(Errc::BadDims, "bad dims '" + std::string(dims) + "'");
      try {
        d.push_back(std::stoi(cur));
      } catch (const std::exception&) {
        throw Error(Errc::BadDims, "bad dims '" + std::string(dims) + "'");
      }
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (kind == "path") {
    if (d.size() != 1) throw Error(Errc::BadDims, "path takes one dimension");
    return path_coupling(d[0]);
  }
  return make_coupling(parse_coupling_kind(kind), d);
}

bool executable(const Gate& g, const CouplingGraph& coupling) {
  switch (g.kind()) {
    case GateKind::X: return true;
    case GateKind::CX:
    case GateKind::SWAP: return coupling.adjacent(g.operand(0), g.operand(1));
    case GateKind::CCX: {
      const int a = g.operand(0), b = g.operand(1), t = g.operand(2);
      if (coupling.has_triangle()) {
        return coupling.adjacent(a, b) && coupling.adjacent(a, t) && coupling.adjacent(b, t);
      }
      return coupling.adjacent(a, t) && coupling.adjacent(b, t);
    }
  }
  return false;
}

namespace {

struct Router {
  const Circuit& c;
  const CouplingGraph& cg;
  std::vector<int> active;  // logical qubits touched by multi-qubit gates

  bool runs(std::size_t gi, const std::vector<int>& pos) const {
    return executable(c.gates()[gi].remapped(pos), cg);
  }
  std::size_t advance(std::size_t gi, const std::vector<int>& pos) const {
    while (gi < c.size() && runs(gi, pos)) ++gi;
    return gi;
  }
};

// Swap sequence plus the initial assignment of the active qubits.
struct Plan {
  std::vector<int> pos;  // full logical -> physical, -1 for unplaced
  std::vector<std::pair<std::size_t, Edge>> swaps;
};

void place_idle(std::vector<int>& pos, int nphys) {
  std::vector<bool> used(static_cast<std::size_t>(nphys), false);
  for (int p : pos) {
    if (p >= 0) used[static_cast<std::size_t>(p)] = true;
  }
  int next = 0;
  for (int& p : pos) {
    if (p >= 0) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    p = next;
    used[static_cast<std::size_t>(next)] = true;
  }
}

std::uint64_t perm_count(int n, int k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= static_cast<std::uint64_t>(n - i);
    if (r > cap) return cap + 1;
  }
  return r;
}

// BFS over (gate index, placement of the active qubits). Executable gates
// are applied eagerly: doing so never costs a swap.
std::optional<Plan> route_exact(const Router& r, const RouteOptions& opts) {
  const int L = static_cast<int>(r.active.size());
  const int np = r.cg.num_vertices();
  if (L > opts.exact_max_logical || np > 64 || r.c.size() >= (1U << 16)) return std::nullopt;
  if (perm_count(np, L, opts.exact_state_budget) * (r.c.size() + 1) >
      opts.exact_state_budget) {
    return std::nullopt;
  }
  auto encode = [&](std::size_t gi, const std::vector<int>& pos) {
    std::uint64_t k = gi;
    for (int l : r.active) k = (k << 6) | static_cast<std::uint64_t>(pos[static_cast<std::size_t>(l)]);
    return k;
  };
  struct Node {
    std::uint64_t parent;
    Edge swap;
    bool root;
  };
  std::unordered_map<std::uint64_t, Node> seen;
  std::deque<std::pair<std::size_t, std::vector<int>>> queue;
  std::vector<int> pos(static_cast<std::size_t>(r.c.num_qubits()), -1);

  // Enumerate injective placements of the active qubits.
  std::vector<bool> used(static_cast<std::size_t>(np), false);
  std::vector<std::pair<std::uint64_t, std::vector<int>>> done;
  std::function<void(int)> rec = [&](int i) {
    if (i == L) {
      std::size_t g = r.advance(0, pos);
      std::uint64_t k = encode(g, pos);
      if (seen.emplace(k, Node{0, {}, true}).second) queue.emplace_back(g, pos);
      return;
    }
    for (int p = 0; p < np; ++p) {
      if (used[static_cast<std::size_t>(p)]) continue;
      used[static_cast<std::size_t>(p)] = true;
      pos[static_cast<std::size_t>(r.active[static_cast<std::size_t>(i)])] = p;
      rec(i + 1);
      used[static_cast<std::size_t>(p)] = false;
    }
    pos[static_cast<std::size_t>(r.active[static_cast<std::size_t>(i)])] = -1;
  };
  rec(0);

  std::vector<int> occ(static_cast<std::size_t>(np));
  while (!queue.empty()) {
    auto [g, cur] = std::move(queue.front());
    queue.pop_front();
    const std::uint64_t key = encode(g, cur);
    if (g == r.c.size()) {
      Plan plan;
      std::vector<Edge> rev;
      std::uint64_t k = key;
      while (!seen.at(k).root) {
        rev.push_back(seen.at(k).swap);
        k = seen.at(k).parent;
      }
      // Decode the root placement.
      plan.pos.assign(static_cast<std::size_t>(r.c.num_qubits()), -1);
      for (int i = L - 1; i >= 0; --i) {
        plan.pos[static_cast<std::size_t>(r.active[static_cast<std::size_t>(i)])] =
            static_cast<int>(k & 63U);
        k >>= 6;
      }
      std::reverse(rev.begin(), rev.end());
      for (const Edge& e : rev) plan.swaps.push_back({0, e});
      return plan;
    }
    std::fill(occ.begin(), occ.end(), -1);
    for (int l : r.active) occ[static_cast<std::size_t>(cur[static_cast<std::size_t>(l)])] = l;
    for (const auto& [a, b] : r.cg.edges()) {
      const int la = occ[static_cast<std::size_t>(a)];
      const int lb = occ[static_cast<std::size_t>(b)];
      if (la < 0 && lb < 0) continue;
      std::vector<int> nxt = cur;
      if (la >= 0) nxt[static_cast<std::size_t>(la)] = b;
      if (lb >= 0) nxt[static_cast<std::size_t>(lb)] = a;
      std::size_t ng = r.advance(g, nxt);
      std::uint64_t nk = encode(ng, nxt);
      if (seen.emplace(nk, Node{key, {a, b}, false}).second) queue.emplace_back(ng, nxt);
    }
  }
  return std::nullopt;
}

class Tokens {
 public:
  Tokens(std::vector<int> pos, int np) : pos_(std::move(pos)), occ_(static_cast<std::size_t>(np), -1) {
    for (std::size_t l = 0; l < pos_.size(); ++l) {
      if (pos_[l] >= 0) occ_[static_cast<std::size_t>(pos_[l])] = static_cast<int>(l);
    }
  }
  void swap(int a, int b) {
    int la = occ_[static_cast<std::size_t>(a)];
    int lb = occ_[static_cast<std::size_t>(b)];
    if (la >= 0) pos_[static_cast<std::size_t>(la)] = b;
    if (lb >= 0) pos_[static_cast<std::size_t>(lb)] = a;
    std::swap(occ_[static_cast<std::size_t>(a)], occ_[static_cast<std::size_t>(b)]);
    log_.push_back({a, b});
  }
  const std::vector<int>& pos() const { return pos_; }
  std::vector<Edge>& log() { return log_; }

 private:
  std::vector<int> pos_;
  std::vector<int> occ_;
  std::vector<Edge> log_;
};

// Shortest path from `from` to `to` avoiding `blocked`; empty if none.
std::vector<int> path_avoiding(const CouplingGraph& cg, int from, int to,
                               const std::set<int>& blocked) {
  std::vector<int> prev(static_cast<std::size_t>(cg.num_vertices()), -2);
  std::deque<int> q{from};
  prev[static_cast<std::size_t>(from)] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == to) break;
    for (int w : cg.neighbors(v)) {
      if (prev[static_cast<std::size_t>(w)] != -2 || blocked.count(w)) continue;
      prev[static_cast<std::size_t>(w)] = v;
      q.push_back(w);
    }
  }
  if (prev[static_cast<std::size_t>(to)] == -2) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Candidate operand slots for a gate, as physical vertex tuples.
std::vector<std::vector<int>> slot_candidates(const Gate& g, const CouplingGraph& cg) {
  std::vector<std::vector<int>> out;
  if (g.kind() == GateKind::CX || g.kind() == GateKind::SWAP) {
    for (const auto& [a, b] : cg.edges()) {
      out.push_back({a, b});
      out.push_back({b, a});
    }
  } else if (g.kind() == GateKind::CCX) {
    for (int t = 0; t < cg.num_vertices(); ++t) {
      for (int a : cg.neighbors(t)) {
        for (int b : cg.neighbors(t)) {
          if (a == b) continue;
          if (cg.has_triangle() && !cg.adjacent(a, b)) continue;
          out.push_back({a, b, t});
        }
      }
    }
  }
  return out;
}

std::optional<Plan> route_greedy(const Router& r) {
  const Circuit& c = r.c;
  const CouplingGraph& cg = r.cg;
  const int np = cg.num_vertices();
  // Initial placement: grow outward from the busiest logical qubit.
  RequirementGraph req = requirement_graph(c);
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(c.num_qubits()));
  for (const auto& [a, b] : req.edges) {
    nbr[static_cast<std::size_t>(a)].push_back(b);
    nbr[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> order;
  std::vector<bool> in(static_cast<std::size_t>(c.num_qubits()), false);
  std::vector<int> remaining = r.active;
  std::sort(remaining.begin(), remaining.end(), [&](int x, int y) {
    auto dx = nbr[static_cast<std::size_t>(x)].size(), dy = nbr[static_cast<std::size_t>(y)].size();
    return dx != dy ? dx > dy : x < y;
  });
  for (int seed : remaining) {
    if (in[static_cast<std::size_t>(seed)]) continue;
    std::deque<int> q{seed};
    in[static_cast<std::size_t>(seed)] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int w : nbr[static_cast<std::size_t>(v)]) {
        if (!in[static_cast<std::size_t>(w)]) {
          in[static_cast<std::size_t>(w)] = true;
          q.push_back(w);
        }
      }
    }
  }
  std::vector<int> pos(static_cast<std::size_t>(c.num_qubits()), -1);
  std::vector<bool> used(static_cast<std::size_t>(np), false);
  for (int l : order) {
    long best = std::numeric_limits<long>::max();
    int pick = -1;
    for (int p = 0; p < np; ++p) {
      if (used[static_cast<std::size_t>(p)]) continue;
      long cost = 0;
      bool any = false;
      for (int w : nbr[static_cast<std::size_t>(l)]) {
        int q = pos[static_cast<std::size_t>(w)];
        if (q >= 0) cost += cg.distance(p, q), any = true;
      }
      if (!any) {
        // Central vertex for the first qubit of a component.
        for (int q = 0; q < np; ++q) cost += cg.distance(p, q);
      }
      cost = cost * 8 - cg.degree(p);
      if (cost < best) best = cost, pick = p;
    }
    pos[static_cast<std::size_t>(l)] = pick;
    used[static_cast<std::size_t>(pick)] = true;
  }

  Plan plan;
  plan.pos = pos;
  Tokens tok(pos, np);
  for (std::size_t gi = 0; gi < c.size(); ++gi) {
    if (r.runs(gi, tok.pos())) continue;
    const Gate& g = c.gates()[gi];
    auto cands = slot_candidates(g, cg);
    auto cost = [&](const std::vector<int>& s) {
      long sum = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        sum += cg.distance(tok.pos()[static_cast<std::size_t>(g.operand(static_cast<int>(i)))], s[i]);
      }
      return sum;
    };
    std::stable_sort(cands.begin(), cands.end(),
                     [&](const auto& x, const auto& y) { return cost(x) < cost(y); });
    bool ok = false;
    for (const auto& slots : cands) {
      Tokens trial = tok;
      trial.log().clear();
      std::set<int> fixed;
      bool fail = false;
      for (std::size_t i = 0; i < slots.size() && !fail; ++i) {
        int l = g.operand(static_cast<int>(i));
        auto path = path_avoiding(cg, trial.pos()[static_cast<std::size_t>(l)], slots[i], fixed);
        if (path.empty()) {
          fail = true;
          break;
        }
        for (std::size_t k = 0; k + 1 < path.size(); ++k) trial.swap(path[k], path[k + 1]);
        fixed.insert(slots[i]);
      }
      if (fail || !r.runs(gi, trial.pos())) continue;
      for (const Edge& e : trial.log()) plan.swaps.push_back({gi, e});
      trial.log().clear();
      tok = trial;
      ok = true;
      break;
    }
    if (!ok) return std::nullopt;
  }
  return plan;
}

}  // namespace

Placement place_and_route(const Circuit& c, const CouplingGraph& coupling,
                          const RouteOptions& opts) {
  const int np = coupling.num_vertices();
  if (c.num_qubits() > np) {
    throw Error(Errc::NotEnoughQubits, std::to_string(c.num_qubits()) + " logical qubits on " +
                                           std::to_string(np) + " physical");
  }
  Router r{c, coupling, {}};
  std::set<int> act;
  for (const Gate& g : c.gates()) {
    if (g.arity() < 2) continue;
    for (int i = 0; i < g.arity(); ++i) act.insert(g.operand(i));
  }
  r.active.assign(act.begin(), act.end());

  std::optional<Plan> plan;
  bool exact = false;
  if (opts.mode != RouterMode::Greedy) {
    plan = route_exact(r, opts);
    exact = plan.has_value();
    if (!plan && opts.mode == RouterMode::Exact) {
      throw Error(Errc::NotEnoughQubits, "exact routing infeasible within the state budget");
    }
  }
  if (!plan) plan = route_greedy(r);
  if (!plan) throw Error(Errc::NotEnoughQubits, "no routing found on this coupling");
  place_idle(plan->pos, np);

  Placement out;
  out.exact = exact;
  out.assignment = plan->pos;
  out.routed = Circuit::with_qubits(np);
  Tokens tok(plan->pos, np);
  std::size_t gi = 0;
  auto emit_ready = [&](std::size_t limit) {
    while (gi < c.size() && gi < limit && r.runs(gi, tok.pos())) {
      out.routed.add(c.gates()[gi].remapped(tok.pos()));
      ++gi;
    }
  };
  for (const auto& [hint, e] : plan->swaps) {
    // Exact plans carry no positions; greedy plans hold swaps until their gate.
    emit_ready(exact ? c.size() : hint);
    out.swap_schedule.push_back({gi, e.first, e.second});
    out.routed.add(Gate::swap(e.first, e.second));
    tok.swap(e.first, e.second);
  }
  emit_ready(c.size());
  if (gi != c.size()) throw Error(Errc::NotEnoughQubits, "router left gates unexecuted");
  out.final_assignment = tok.pos();
  out.swap_count = static_cast<int>(out.swap_schedule.size());
  out.native_cx_estimate = 6L * static_cast<long>(out.routed.count(GateKind::CCX)) +
                           3L * out.swap_count +
                           static_cast<long>(out.routed.count(GateKind::CX));
  return out;
}

bool routed_equivalent(const Circuit& original, const Placement& p) {
  const int L = original.num_qubits();
  if (p.routed.num_qubits() > kMaxSimQubits) {
    throw Error(Errc::TooManyQubits, "routed circuit exceeds the simulator width");
  }
  CompiledCircuit orig(original);
  CompiledCircuit routed(p.routed);
  auto check = [&](std::uint64_t s) {
    std::uint64_t phys = 0;
    for (int l = 0; l < L; ++l) {
      if ((s >> l) & 1U) phys |= std::uint64_t{1} << p.assignment[static_cast<std::size_t>(l)];
    }
    std::uint64_t out = routed.run(phys);
    std::uint64_t back = 0;
    for (int l = 0; l < L; ++l) {
      if ((out >> p.final_assignment[static_cast<std::size_t>(l)]) & 1U) back |= std::uint64_t{1} << l;
    }
    return back == orig.run(s);
  };
  if (L <= kMaxTableQubits) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << L); ++s) {
      if (!check(s)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  const std::uint64_t mask = L >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << L) - 1;
  for (int i = 0; i < 100000; ++i) {
    if (!check(rng() & mask)) return false;
  }
  return true;
}

}  // namespace mcx
