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

#include "mcxsynth/shapes.hpp"
#include "oracle.hpp"

namespace mcx {
namespace {

using testing::range;
using testing::replay;

ShapeTetrad tet(std::vector<int> c, std::vector<int> s, int t, Rule r,
                std::set<int> marks = {}) {
  return {std::move(c), std::move(s), t, r, std::move(marks)};
}

void expect_ds(const Circuit& c, std::size_t d, std::size_t s) {
  EXPECT_EQ(c.depth(), d);
  EXPECT_EQ(c.size(), s);
}

TEST(Shapes, Names) {
  EXPECT_EQ(rule_name(Rule::ControlToTarget), "c2t");
  EXPECT_EQ(parse_rule("t2c"), Rule::TargetToControl);
  EXPECT_EQ(opposite(Rule::ControlToTarget), Rule::TargetToControl);
  EXPECT_EQ(opposite(Rule::ControlToControl), Rule::ControlToControl);
  EXPECT_EQ(parse_shape("upstairs"), ShapeKind::Upstairs);
  EXPECT_THROW(parse_rule("x2y"), Error);
  EXPECT_LT(shape_rank(ShapeKind::V), shape_rank(ShapeKind::I));
}

TEST(Shapes, BackslashExamples) {
  // three controls, one support, control -> target
  Circuit a = build_stair(tet({0, 1, 2}, {3}, 4, Rule::ControlToTarget), Orientation::Descending);
  expect_ds(a, 2, 2);
  // four controls, two supports, target -> control
  Circuit b = build_stair(tet({0, 1, 2, 3}, {4, 5}, 6, Rule::TargetToControl),
                          Orientation::Descending);
  expect_ds(b, 3, 3);
}

TEST(Shapes, DownstairsExamples) {
  Circuit a = build_stair(tet({0, 1, 2}, {3}, 4, Rule::ControlToTarget, {0, 1}),
                          Orientation::Descending);
  expect_ds(a, 4, 4);
  Circuit b = build_stair(tet({0, 1, 2, 3}, {4, 5}, 6, Rule::TargetToControl, {0, 1, 2}),
                          Orientation::Descending);
  expect_ds(b, 6, 6);
}

TEST(Shapes, UpstairsExamples) {
  Circuit a = build_stair(tet({0, 1, 2, 3}, {4, 5}, 6, Rule::ControlToTarget, {0, 1, 2}),
                          Orientation::Ascending);
  expect_ds(a, 6, 6);
  Circuit b = build_stair(tet({0, 1, 2}, {3}, 4, Rule::TargetToControl, {0, 1}),
                          Orientation::Ascending);
  expect_ds(b, 4, 4);
}

TEST(Shapes, DownstairsNegatedChainOutput) {
  // Clean supports: t ^ not(not(not(c1 c2) c3) c4).
  Circuit c = build_stair(tet({0, 1, 2, 3}, {4, 5}, 6, Rule::TargetToControl, {0, 1, 2}),
                          Orientation::Descending);
  for (std::uint64_t s = 0; s < 16; ++s) {
    for (std::uint64_t t = 0; t < 2; ++t) {
      auto b = testing::unpack(s | (t << 6), 7);
      bool want = !(!(!(b[0] && b[1]) && b[2]) && b[3]) != (t != 0);
      EXPECT_EQ(replay(c, b)[6], want);
    }
  }
}

TEST(Shapes, VAndIExamples) {
  expect_ds(build_vshape({0, 1, 2, 3}, {4, 5}, 6), 5, 5);
  expect_ds(build_i_shape({0, 1, 2}, {3}, 4), 4, 4);
}

TEST(ShapesProperty, VAndISizes) {
  for (int n = 3; n <= 20; ++n) {
    std::vector<int> c = range(0, n), s = range(n, 2 * n - 2);
    EXPECT_EQ(build_vshape(c, s, 2 * n - 2).size(), static_cast<std::size_t>(2 * n - 3));
    EXPECT_EQ(build_i_shape(c, s, 2 * n - 2).size(), static_cast<std::size_t>(3 * n - 5));
  }
}

TEST(ShapesProperty, VTargetFormula) {
  // t ^ c_n(...c4(c3(c1 c2 ^ s1) ^ s2)... ^ s_{n-2}), every other wire kept.
  for (int n = 3; n <= 6; ++n) {
    const int nq = 2 * n - 1;
    Circuit v = build_vshape(range(0, n), range(n, 2 * n - 2), 2 * n - 2);
    for (std::uint64_t st = 0; st < (std::uint64_t{1} << nq); ++st) {
      auto in = testing::unpack(st, nq);
      bool acc = in[0] && in[1];
      for (int i = 2; i < n; ++i) acc = in[static_cast<std::size_t>(i)] && (acc != in[static_cast<std::size_t>(n + i - 2)]);
      auto out = replay(v, in);
      ASSERT_EQ(out[static_cast<std::size_t>(nq - 1)], in[static_cast<std::size_t>(nq - 1)] != acc);
      for (int q = 0; q < nq - 1; ++q) ASSERT_EQ(out[static_cast<std::size_t>(q)], in[static_cast<std::size_t>(q)]);
    }
  }
}

TEST(ShapesProperty, AscendingReversesDescending) {
  for (Rule r : {Rule::ControlToTarget, Rule::TargetToControl}) {
    for (int n = 2; n <= 7; ++n) {
      const int ns = stair_supports(opposite(r), n);
      std::set<int> marks;
      for (int i = 0; i < stair_terms(opposite(r), n); i += 2) marks.insert(i);
      ShapeTetrad t = tet(range(0, n), range(n, n + ns), n + ns, r, marks);
      ShapeTetrad d = t;
      d.rule = opposite(r);
      EXPECT_EQ(build_stair(t, Orientation::Ascending), inverse(build_stair(d, Orientation::Descending)));
    }
  }
}

TEST(ShapesProperty, ControlToTargetPairProducts) {
  // Clean supports: pair i lands c_{2i-1} c_{2i} on wire i; an odd tail
  // multiplies the last pair wire by c_n onto the target.
  for (int n = 2; n <= 7; ++n) {
    const int ns = stair_supports(Rule::ControlToTarget, n);
    const int nq = n + ns + 1;
    Circuit c = build_stair(tet(range(0, n), range(n, n + ns), n + ns, Rule::ControlToTarget),
                            Orientation::Descending);
    EXPECT_EQ(static_cast<int>(c.size()), stair_terms(Rule::ControlToTarget, n));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      auto in = testing::unpack(s, nq);
      auto out = replay(c, in);
      std::vector<bool> pair;
      for (int i = 0; i + 1 < n; i += 2) {
        pair.push_back(in[static_cast<std::size_t>(i)] && in[static_cast<std::size_t>(i + 1)]);
      }
      for (std::size_t i = 0; i < pair.size(); ++i) {
        if (i < static_cast<std::size_t>(ns)) {
          ASSERT_EQ(out[static_cast<std::size_t>(n) + i], pair[i]);
        }
      }
      bool t = n % 2 ? pair.back() && in[static_cast<std::size_t>(n - 1)] : pair.back();
      ASSERT_EQ(out[static_cast<std::size_t>(nq - 1)], t);
    }
  }
}

TEST(Shapes, TargetToTargetAndControlToControl) {
  Circuit t2t = build_stair(tet({0, 1, 2, 3}, {4, 5}, 6, Rule::TargetToTarget), Orientation::Descending);
  EXPECT_EQ(t2t.size(), 3U);
  for (const Gate& g : t2t.gates()) EXPECT_EQ(g.target(), 6);
  Circuit c2c = build_stair(tet({0, 1, 2}, {3}, 4, Rule::ControlToControl), Orientation::Descending);
  EXPECT_EQ(c2c.size(), 2U);
  EXPECT_EQ(c2c.gates()[0], Gate::ccx(0, 1, 3));
  EXPECT_EQ(c2c.gates()[1], Gate::ccx(1, 2, 4));
}

template <class F>
Errc code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ParseError;  // sentinel: nothing thrown
}

TEST(Shapes, Errors) {
  EXPECT_EQ(code_of([] { build_stair(tet({0, 1, 2}, {3}, 4, Rule::ControlToControl, {0}), Orientation::Descending); }),
            Errc::BadRule);
  EXPECT_EQ(code_of([] {
              Circuit f = Circuit::with_qubits(5);
              build_shape(f, ShapeKind::Backslash, tet({0, 1, 2}, {3}, 4, Rule::TargetToControl, {0}));
            }),
            Errc::BadRule);
  EXPECT_EQ(code_of([] {
              Circuit f = Circuit::with_qubits(5);
              build_shape(f, ShapeKind::Downstairs, tet({0, 1, 2}, {3}, 4, Rule::TargetToTarget));
            }),
            Errc::BadRule);
  EXPECT_EQ(code_of([] { build_stair(tet({0, 1, 2}, {2}, 4, Rule::TargetToControl), Orientation::Descending); }),
            Errc::QubitClash);
  EXPECT_EQ(code_of([] { build_stair(tet({0, 1, 2}, {}, 4, Rule::TargetToControl), Orientation::Descending); }),
            Errc::ArityMismatch);
  EXPECT_EQ(code_of([] { build_stair(tet({0}, {}, 4, Rule::TargetToControl), Orientation::Descending); }),
            Errc::ArityMismatch);
  EXPECT_EQ(code_of([] { build_stair(tet({0, 1, 2}, {3}, 4, Rule::TargetToControl, {5}), Orientation::Descending); }),
            Errc::ArityMismatch);
  EXPECT_EQ(code_of([] { build_i_shape({0, 1}, {}, 2); }), Errc::ArityMismatch);
}

}  // namespace
}  // namespace mcx
