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

#include "mcxsynth/shapes.hpp"

#include <algorithm>

namespace mcx {

Rule opposite(Rule r) {
  switch (r) {
    case Rule::ControlToTarget: return Rule::TargetToControl;
    case Rule::TargetToControl: return Rule::ControlToTarget;
    default: return r;
  }
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::ControlToControl: return "c2c";
    case Rule::TargetToTarget: return "t2t";
    case Rule::ControlToTarget: return "c2t";
    case Rule::TargetToControl: return "t2c";
  }
  return "?";
}

Rule parse_rule(std::string_view s) {
  for (Rule r : {Rule::ControlToControl, Rule::TargetToTarget, Rule::ControlToTarget,
                 Rule::TargetToControl}) {
    if (rule_name(r) == s) return r;
  }
  throw Error(Errc::BadRule, std::string(s));
}

std::string_view shape_name(ShapeKind k) {
  switch (k) {
    case ShapeKind::Backslash: return "backslash";
    case ShapeKind::Downstairs: return "downstairs";
    case ShapeKind::V: return "V";
    case ShapeKind::I: return "I";
    case ShapeKind::Upstairs: return "upstairs";
    case ShapeKind::Slash: return "slash";
  }
  return "?";
}

ShapeKind parse_shape(std::string_view s) {
  for (ShapeKind k : {ShapeKind::Backslash, ShapeKind::Downstairs, ShapeKind::V,
                      ShapeKind::I, ShapeKind::Upstairs, ShapeKind::Slash}) {
    if (shape_name(k) == s) return k;
  }
  throw Error(Errc::ParseError, "unknown shape '" + std::string(s) + "'");
}

int shape_rank(ShapeKind k) { return static_cast<int>(k); }

int stair_terms(Rule r, int n) {
  if (r == Rule::ControlToTarget) return n / 2 + (n % 2);
  return n - 1;
}

int stair_supports(Rule r, int n) {
  if (r == Rule::ControlToTarget) return n % 2 ? n / 2 : n / 2 - 1;
  return n - 2;
}

namespace {

void check_tetrad(const ShapeTetrad& t) {
  const int n = static_cast<int>(t.controls.size());
  if (n < 2) throw Error(Errc::ArityMismatch, "need at least 2 controls");
  if (static_cast<int>(t.supports.size()) != stair_supports(t.rule, n)) {
    throw Error(Errc::ArityMismatch,
                std::to_string(t.supports.size()) + " supports for " + std::to_string(n) +
                    " controls under rule " + std::string(rule_name(t.rule)));
  }
  std::vector<int> all = t.controls;
  all.insert(all.end(), t.supports.begin(), t.supports.end());
  all.push_back(t.target);
  std::sort(all.begin(), all.end());
  if (all.front() < 0) throw Error(Errc::UnknownQubit, "negative qubit index");
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(Errc::QubitClash, "controls, supports and target must be disjoint");
  }
  const int terms = stair_terms(t.rule, n);
  for (int m : t.negation_marks) {
    if (m < 0 || m >= terms) {
      throw Error(Errc::ArityMismatch, "negation mark " + std::to_string(m) +
                                           " outside 0.." + std::to_string(terms - 1));
    }
  }
  if (!t.negation_marks.empty() && t.rule != Rule::ControlToTarget &&
      t.rule != Rule::TargetToControl) {
    throw Error(Errc::BadRule, "marks need a control/target rule");
  }
}

// Gates of the descending chain; the chained qubit sits in control slot 1.
std::vector<Gate> descending_gates(const ShapeTetrad& t) {
  const auto& c = t.controls;
  const int n = static_cast<int>(c.size());
  std::vector<int> w = t.supports;
  w.push_back(t.target);
  std::vector<Gate> out;
  auto land = [&](const Gate& g, int term) {
    out.push_back(g);
    if (t.negation_marks.count(term)) out.push_back(Gate::x(g.target()));
  };
  auto C = [&](int i) { return c[static_cast<std::size_t>(i)]; };
  auto W = [&](int i) { return w[static_cast<std::size_t>(i)]; };
  switch (t.rule) {
    case Rule::TargetToControl:
      land(Gate::ccx(C(0), C(1), W(0)), 0);
      for (int i = 1; i < n - 1; ++i) land(Gate::ccx(W(i - 1), C(i + 1), W(i)), i);
      break;
    case Rule::ControlToTarget: {
      const int pairs = n / 2;
      for (int i = 0; i < pairs; ++i) land(Gate::ccx(C(2 * i), C(2 * i + 1), W(i)), i);
      if (n % 2) land(Gate::ccx(W(pairs - 1), C(n - 1), t.target), pairs);
      break;
    }
    case Rule::ControlToControl:
      for (int i = 0; i < n - 1; ++i) out.push_back(Gate::ccx(C(i), C(i + 1), W(i)));
      break;
    case Rule::TargetToTarget:
      out.push_back(Gate::ccx(C(0), C(1), t.target));
      for (int i = 1; i < n - 1; ++i) {
        out.push_back(Gate::ccx(C(i + 1), t.supports[static_cast<std::size_t>(i - 1)],
                                t.target));
      }
      break;
  }
  return out;
}

}  // namespace

Circuit standard_frame(const ShapeTetrad& t) {
  int hi = t.target;
  for (int q : t.controls) hi = std::max(hi, q);
  for (int q : t.supports) hi = std::max(hi, q);
  std::vector<Qubit> qs;
  for (int i = 0; i <= hi; ++i) qs.push_back({i, Role::Auxiliary, "a" + std::to_string(i)});
  for (std::size_t i = 0; i < t.controls.size(); ++i) {
    auto& q = qs.at(static_cast<std::size_t>(t.controls[i]));
    q.role = Role::Control;
    q.label = "c" + std::to_string(i + 1);
  }
  for (std::size_t i = 0; i < t.supports.size(); ++i) {
    auto& q = qs.at(static_cast<std::size_t>(t.supports[i]));
    q.role = Role::Support;
    q.label = "s" + std::to_string(i + 1);
  }
  if (t.target >= 0) {
    auto& q = qs.at(static_cast<std::size_t>(t.target));
    q.role = Role::Target;
    q.label = "t";
  }
  return Circuit(std::move(qs));
}

Circuit build_stair(const Circuit& frame, const ShapeTetrad& t, Orientation o) {
  Circuit out = empty_like(frame);
  if (o == Orientation::Descending) {
    check_tetrad(t);
    for (const Gate& g : descending_gates(t)) out.add(g);
    return out;
  }
  ShapeTetrad flipped = t;
  flipped.rule = opposite(t.rule);
  check_tetrad(flipped);
  auto gates = descending_gates(flipped);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.add(*it);
  return out;
}

Circuit build_stair(const ShapeTetrad& t, Orientation o) {
  return build_stair(standard_frame(t), t, o);
}

namespace {

void check_v_args(const std::vector<int>& controls, const std::vector<int>& supports) {
  const int n = static_cast<int>(controls.size());
  if (n < 2 || static_cast<int>(supports.size()) != n - 2) {
    throw Error(Errc::ArityMismatch, std::to_string(n) + " controls with " +
                                         std::to_string(supports.size()) + " supports");
  }
}

ShapeTetrad t2c(std::vector<int> controls, std::vector<int> supports, int target) {
  return {std::move(controls), std::move(supports), target, Rule::TargetToControl, {}};
}

// The slash half of a V: n-1 controls landing in the last support.
ShapeTetrad v_upper(const std::vector<int>& controls, const std::vector<int>& supports) {
  std::vector<int> c(controls.begin(), controls.end() - 1);
  std::vector<int> s(supports.begin(), supports.end() - 1);
  return {std::move(c), std::move(s), supports.back(), Rule::ControlToTarget, {}};
}

}  // namespace

Circuit build_vshape(const Circuit& frame, const std::vector<int>& controls,
                     const std::vector<int>& supports, int target) {
  check_v_args(controls, supports);
  Circuit out = build_stair(frame, t2c(controls, supports, target), Orientation::Descending);
  if (controls.size() > 2) {
    out.add_all(build_stair(frame, v_upper(controls, supports), Orientation::Ascending));
  }
  return out;
}

Circuit build_vshape(const std::vector<int>& controls, const std::vector<int>& supports,
                     int target) {
  return build_vshape(standard_frame(t2c(controls, supports, target)), controls, supports,
                      target);
}

Circuit build_i_shape(const Circuit& frame, const std::vector<int>& controls,
                      const std::vector<int>& supports, int target) {
  check_v_args(controls, supports);
  if (controls.size() < 3) throw Error(Errc::ArityMismatch, "I shape needs 3 controls");
  Circuit out = build_vshape(frame, controls, supports, target);
  std::vector<int> c{supports.front()};
  c.insert(c.end(), controls.begin() + 2, controls.end());
  std::vector<int> s(supports.begin() + 1, supports.end());
  out.add_all(build_stair(frame, t2c(c, s, target), Orientation::Descending));
  return out;
}

Circuit build_i_shape(const std::vector<int>& controls, const std::vector<int>& supports,
                      int target) {
  return build_i_shape(standard_frame(t2c(controls, supports, target)), controls, supports,
                       target);
}

Circuit build_shape(const Circuit& frame, ShapeKind kind, const ShapeTetrad& t) {
  switch (kind) {
    case ShapeKind::Backslash:
    case ShapeKind::Slash:
      if (!t.negation_marks.empty()) {
        throw Error(Errc::BadRule, std::string(shape_name(kind)) + " carries no marks");
      }
      return build_stair(frame, t,
                         kind == ShapeKind::Backslash ? Orientation::Descending
                                                      : Orientation::Ascending);
    case ShapeKind::Downstairs:
    case ShapeKind::Upstairs:
      if (t.rule != Rule::ControlToTarget && t.rule != Rule::TargetToControl) {
        throw Error(Errc::BadRule, std::string(shape_name(kind)) + " with rule " +
                                       std::string(rule_name(t.rule)));
      }
      return build_stair(frame, t,
                         kind == ShapeKind::Downstairs ? Orientation::Descending
                                                       : Orientation::Ascending);
    case ShapeKind::V:
      return build_vshape(frame, t.controls, t.supports, t.target);
    case ShapeKind::I:
      return build_i_shape(frame, t.controls, t.supports, t.target);
  }
  throw Error(Errc::BadRule, "unknown shape");
}

}  // namespace mcx
