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

#include "mcxsynth/composer.hpp"

#include <algorithm>
#include <sstream>

namespace mcx {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Seq1: return "seq1";
    case Variant::Seq2: return "seq2";
    case Variant::Seq3: return "seq3";
    case Variant::Custom: return "custom";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  for (Variant v : {Variant::Seq1, Variant::Seq2, Variant::Seq3, Variant::Custom}) {
    if (variant_name(v) == s) return v;
  }
  throw Error(Errc::BadVariant, std::string(s));
}

LadderDecomposition ladder_split(int n) {
  if (n < 3) throw Error(Errc::TooFewControls, std::to_string(n) + " < 3");
  int k = 2;
  while ((k + 1) * (k + 2) / 2 <= n) ++k;
  return {k, n - k * (k + 1) / 2};
}

void validate(const CompositionSequence& seq) {
  int total = 0;
  for (const Segment& seg : seq.segments) {
    int last_key = -1;
    for (const SequenceElement& e : seg.elements) {
      int key = 2 * shape_rank(e.shape) + (e.transition ? 1 : 0);
      if (key <= last_key) {
        throw Error(Errc::BadRule, "element " + std::string(shape_name(e.shape)) +
                                       " breaks the composition order");
      }
      if (e.transition && e.count() > 1) {
        throw Error(Errc::BadRule, "transition count must be 0 or 1");
      }
      if (e.transition && e.shape == ShapeKind::Slash) {
        throw Error(Errc::BadRule, "slash has no transition slot");
      }
      last_key = key;
      total += e.count();
    }
  }
  if (total == 0) throw Error(Errc::EmptySequence, "sum of counts is 0");
  if (seq.split > seq.segments.size()) throw Error(Errc::BadRule, "split out of range");
}

std::vector<Qubit> standard_qubits(int n, int n_s) {
  std::vector<Qubit> qs;
  for (int i = 0; i < n; ++i) qs.push_back({i, Role::Control, "c" + std::to_string(i + 1)});
  for (int i = 0; i < n_s; ++i) {
    qs.push_back({n + i, Role::Support, "s" + std::to_string(i + 1)});
  }
  qs.push_back({n + n_s, Role::Target, "t"});
  return qs;
}

namespace {

ShapeTetrad tetrad(std::vector<int> c, std::vector<int> s, int t, Rule r,
                   std::set<int> marks = {}) {
  return {std::move(c), std::move(s), t, r, std::move(marks)};
}

std::set<int> all_terms(int n) {
  std::set<int> s;
  for (int i = 0; i < n; ++i) s.insert(i);
  return s;
}

SequenceElement element(ShapeKind k, std::vector<ShapeTetrad> ts, bool transition = false) {
  return {k, std::move(ts), transition};
}

// Exact t ^= prod(literals) on dirty supports: a V shape and its
// step-decreasing V (first two literals dropped, first support promoted).
void append_multiply(Segment& seg, const std::vector<int>& lits,
                     const std::vector<int>& dirty, int target) {
  const std::size_t r = lits.size();
  std::vector<int> s(dirty.begin(), dirty.begin() + static_cast<long>(r - 2));
  seg.elements.push_back(
      element(ShapeKind::V, {tetrad(lits, s, target, Rule::TargetToControl)}));
  if (r < 3) return;
  std::vector<int> c2{s.front()};
  c2.insert(c2.end(), lits.begin() + 2, lits.end());
  std::vector<int> s2(s.begin() + 1, s.end());
  seg.elements.push_back(
      element(ShapeKind::V, {tetrad(c2, s2, target, Rule::TargetToControl)}, true));
}

// Wires other than the literals, the toggled support and the target, in
// index order.
std::vector<int> dirty_pool(int total, const std::vector<int>& exclude) {
  std::vector<int> out;
  for (int q = 0; q < total; ++q) {
    if (std::find(exclude.begin(), exclude.end(), q) == exclude.end()) out.push_back(q);
  }
  return out;
}

CompositionSequence seq1(int n) {
  CompositionSequence seq;
  const int t = 2 * n - 2;
  std::vector<int> c(static_cast<std::size_t>(n));
  std::vector<int> s(static_cast<std::size_t>(n - 2));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < n - 2; ++i) s[static_cast<std::size_t>(i)] = n + i;
  Segment first;
  first.elements.push_back(element(ShapeKind::V, {tetrad(c, s, t, Rule::TargetToControl)}));
  std::vector<int> c2{s.front()};
  c2.insert(c2.end(), c.begin() + 2, c.end());
  std::vector<int> s2(s.begin() + 1, s.end());
  Segment second;
  second.elements.push_back(
      element(ShapeKind::V, {tetrad(c2, s2, t, Rule::TargetToControl)}));
  seq.segments = {first, second};
  seq.split = 1;
  return seq;
}

// Toggle-and-repeat plan shared by seq2 and seq3: segments A, W, A, W where
// A toggles the accumulator support and W lands sub-products on reused
// control wires, multiplies the literals into the target, and unlands.
CompositionSequence toggle_plan(const std::vector<Segment>& a, const Segment& w) {
  CompositionSequence seq;
  for (int rep = 0; rep < 2; ++rep) {
    for (const Segment& s : a) seq.segments.push_back(s);
    seq.segments.push_back(w);
    if (rep == 0) seq.split = seq.segments.size();
  }
  // Merge A into W when A is a lone backslash; keeps each half one
  // composed structure.
  if (a.size() == 1 && a[0].elements.size() == 1 &&
      a[0].elements[0].shape == ShapeKind::Backslash) {
    CompositionSequence merged;
    for (std::size_t i = 0; i < seq.segments.size(); i += 2) {
      Segment s = seq.segments[i];
      for (const auto& e : seq.segments[i + 1].elements) s.elements.push_back(e);
      merged.segments.push_back(s);
    }
    merged.split = 1;
    return merged;
  }
  return seq;
}

// Upstairs under rule r reverses downstairs under opposite(r).
void add_landing(Segment& w, const std::vector<ShapeTetrad>& down,
                 const std::vector<int>& lits, const std::vector<int>& dirty, int target) {
  if (!down.empty()) w.elements.push_back(element(ShapeKind::Downstairs, down));
  append_multiply(w, lits, dirty, target);
  if (!down.empty()) {
    std::vector<ShapeTetrad> up(down.rbegin(), down.rend());
    for (ShapeTetrad& t : up) t.rule = opposite(t.rule);
    w.elements.push_back(element(ShapeKind::Upstairs, up));
  }
}

CompositionSequence seq2(int n, int n_s) {
  const int total = n + n_s + 1;
  const int t = n + n_s;
  const int acc = n + n_s - 1;  // s_{n_s}
  const int p = n - n_s - 1;
  const int k = p / 2;
  const int j = p % 2;

  std::vector<Segment> a(1);
  if (n_s == 1) {
    a[0].elements.push_back(
        element(ShapeKind::Backslash, {tetrad({0, 1}, {}, acc, Rule::TargetToControl)}));
  } else {
    std::vector<int> g0;
    for (int i = 0; i <= n_s; ++i) g0.push_back(i);
    std::vector<int> inner;
    for (int i = 0; i < n_s - 1; ++i) inner.push_back(n + i);
    append_multiply(a[0], g0, inner, acc);
  }

  // Pair i (1-based) covers controls n_s+2i and n_s+2i+1 (1-based labels).
  // Pair 1 lands on c1; pairs 2q and 2q+1 land on the two controls of
  // pair q, so repetition l holds pairs [2^l, 2^(l+1)).
  auto pair_ctrl = [&](int i, int which) { return n_s + 2 * i - 1 + which; };
  auto landing = [&](int i) { return i == 1 ? 0 : pair_ctrl(i / 2, i % 2); };
  std::vector<ShapeTetrad> down;
  for (int lo = 1; lo <= k; lo *= 2) {
    int hi = std::min(k, 2 * lo - 1);
    std::vector<int> c;
    std::vector<int> s;
    for (int i = lo; i <= hi; ++i) {
      c.push_back(pair_ctrl(i, 0));
      c.push_back(pair_ctrl(i, 1));
      s.push_back(landing(i));
    }
    int tgt = s.back();
    s.pop_back();
    down.push_back(tetrad(c, s, tgt, Rule::ControlToTarget, all_terms(hi - lo + 1)));
  }

  std::vector<int> lits{acc};
  for (int i = 1; i <= k; ++i) lits.push_back(landing(i));
  if (j) lits.push_back(n - 1);
  std::vector<int> exclude = lits;
  exclude.push_back(t);
  Segment w;
  add_landing(w, down, lits, dirty_pool(total, exclude), t);
  return toggle_plan(a, w);
}

CompositionSequence seq3(int n) {
  const int total = n + 2;
  const int acc = n;
  const int t = n + 1;
  const LadderDecomposition lm = ladder_split(n);

  std::vector<Segment> a(1);
  a[0].elements.push_back(
      element(ShapeKind::Backslash, {tetrad({0, 1}, {}, acc, Rule::TargetToControl)}));

  // Chunks: {c1,c2}, then sizes 3..k, then a final chunk of m+1 controls.
  std::vector<std::vector<int>> chunks;
  int next = 0;
  auto take = [&](int len) {
    std::vector<int> c;
    for (int i = 0; i < len; ++i) c.push_back(next++);
    chunks.push_back(c);
  };
  for (int len = 2; len <= lm.k; ++len) take(len);
  take(lm.m + 1);

  // Chunk i lands its product on the first size-1 controls of chunk i-1:
  // every landing wire is negated so cross terms carry a c*not(c) factor.
  std::vector<ShapeTetrad> down;
  std::vector<int> lits{acc};
  for (std::size_t i = 1; i < chunks.size(); ++i) {
    const auto& c = chunks[i];
    if (c.size() < 2) {
      lits.push_back(c.front());
      continue;
    }
    const auto& prev = chunks[i - 1];
    std::vector<int> wires(prev.begin(), prev.begin() + static_cast<long>(c.size() - 1));
    int tgt = wires.back();
    wires.pop_back();
    down.push_back(tetrad(c, wires, tgt, Rule::TargetToControl,
                          all_terms(static_cast<int>(c.size()) - 1)));
    lits.push_back(tgt);
  }
  std::vector<int> exclude = lits;
  exclude.push_back(t);
  Segment w;
  add_landing(w, down, lits, dirty_pool(total, exclude), t);
  return toggle_plan(a, w);
}

}  // namespace

CompositionSequence make_sequence(Variant v, int n, int n_s) {
  if (n < 3) throw Error(Errc::TooFewControls, std::to_string(n) + " < 3");
  CompositionSequence seq;
  switch (v) {
    case Variant::Seq1:
      if (n_s != n - 2) {
        throw Error(Errc::BadSupportCount, "seq1 uses n-2 = " + std::to_string(n - 2));
      }
      seq = seq1(n);
      break;
    case Variant::Seq2:
      if (n_s < 1 || n_s > n - 2) {
        throw Error(Errc::BadSupportCount, "seq2 needs 1 <= n_s <= n-2, got " +
                                               std::to_string(n_s));
      }
      seq = n_s == n - 2 ? seq1(n) : seq2(n, n_s);
      break;
    case Variant::Seq3:
      if (n_s != 1) throw Error(Errc::BadSupportCount, "seq3 uses one support");
      seq = seq3(n);
      break;
    case Variant::Custom:
      throw Error(Errc::BadVariant, "custom sequences are built by the caller");
  }
  seq.variant = v;
  seq.total_controls = n;
  seq.support_count = n_s;
  seq.qubits = standard_qubits(n, n_s);
  validate(seq);
  return seq;
}

namespace {

void compose_segment(Circuit& out, const Segment& seg) {
  for (const SequenceElement& e : seg.elements) {
    for (const ShapeTetrad& t : e.tetrads) {
      out.add_all(build_shape(out, e.shape, t));
    }
  }
}

void check_pool(const CompositionSequence& seq, int nq) {
  auto in = [nq](int q) { return q >= 0 && q < nq; };
  for (const Segment& seg : seq.segments) {
    for (const SequenceElement& e : seg.elements) {
      for (const ShapeTetrad& t : e.tetrads) {
        bool ok = in(t.target);
        for (int q : t.controls) ok = ok && in(q);
        for (int q : t.supports) ok = ok && in(q);
        if (!ok) throw Error(Errc::QubitClash, "tetrad references a qubit outside the pool");
      }
    }
  }
}

}  // namespace

Circuit compose(const CompositionSequence& seq, const std::vector<Qubit>& pool) {
  validate(seq);
  check_pool(seq, static_cast<int>(pool.size()));
  Circuit out{pool};
  for (const Segment& seg : seq.segments) compose_segment(out, seg);
  return out;
}

Circuit compose(const CompositionSequence& seq) { return compose(seq, seq.qubits); }

ComposedHalves compose_halves(const CompositionSequence& seq) {
  validate(seq);
  check_pool(seq, static_cast<int>(seq.qubits.size()));
  ComposedHalves h{Circuit{seq.qubits}, Circuit{seq.qubits}};
  for (std::size_t i = 0; i < seq.segments.size(); ++i) {
    compose_segment(i < seq.split ? h.m : h.m_prime, seq.segments[i]);
  }
  return h;
}

std::string serialize(const CompositionSequence& seq) {
  auto label = [&](int q) {
    if (q >= 0 && q < static_cast<int>(seq.qubits.size())) {
      return seq.qubits[static_cast<std::size_t>(q)].label;
    }
    return "q" + std::to_string(q);
  };
  auto list = [&](const std::vector<int>& qs) {
    std::string s = "{";
    for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? " " : "") + label(qs[i]);
    return s + "}";
  };
  std::ostringstream os;
  os << "# " << variant_name(seq.variant) << " n=" << seq.total_controls
     << " n_s=" << seq.support_count << "\n";
  for (std::size_t si = 0; si < seq.segments.size(); ++si) {
    if (si == seq.split) os << "==\n";
    else if (si) os << "--\n";
    for (const SequenceElement& e : seq.segments[si].elements) {
      for (int r = 0; r < e.count(); ++r) {
        const ShapeTetrad& t = e.tetrads[static_cast<std::size_t>(r)];
        std::string marks = "{";
        bool first = true;
        for (int m : t.negation_marks) {
          marks += (first ? "" : " ") + std::to_string(m);
          first = false;
        }
        marks += "}";
        os << "(" << (e.transition ? "t" : "r") << e.count() << "." << r + 1 << ", "
           << shape_name(e.shape) << ", " << rule_name(t.rule) << ", " << list(t.controls)
           << ", " << list(t.supports) << ", " << label(t.target) << ", " << marks << ")\n";
      }
    }
  }
  return os.str();
}

}  // namespace mcx
