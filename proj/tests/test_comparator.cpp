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

#include "mcxsynth/comparator.hpp"
#include "oracle.hpp"

namespace mcx {
namespace {

TEST(ClassicalCompare, Examples) {
  EXPECT_EQ(classical_compare(0, 1, 1), (CompareResult{true, false, false}));
  EXPECT_EQ(classical_compare(1, 1, 1), (CompareResult{false, true, false}));
  EXPECT_EQ(classical_compare(9, 9, 4), (CompareResult{false, true, false}));
  EXPECT_EQ(classical_compare(5, 12, 4), (CompareResult{true, false, false}));
  EXPECT_THROW(classical_compare(2, 0, 1), Error);
  EXPECT_THROW(classical_compare(-1, 0, 3), Error);
  EXPECT_THROW(classical_compare(0, 0, 0), Error);
}

TEST(ClassicalCompareProperty, GreaterFromLessAndEqual) {
  for (int n = 1; n <= 4; ++n) {
    for (int x = 0; x < (1 << n); ++x) {
      for (int y = 0; y < (1 << n); ++y) {
        CompareResult r = classical_compare(x, y, n);
        EXPECT_EQ(r.gt, r.lt != !r.eq);
      }
    }
  }
}

struct Row {
  int x, y;
  bool lt, eq, gt;
};

TEST(Comparator, OneBitTruthTable) {
  ComparatorCircuit c = synth_comparator(1);
  const Row rows[] = {{0, 0, false, true, false},
                      {0, 1, true, false, false},
                      {1, 1, false, true, false},
                      {1, 0, false, false, true}};
  for (const Row& r : rows) {
    std::uint64_t in = (static_cast<std::uint64_t>(r.x) << c.x[0]) |
                       (static_cast<std::uint64_t>(r.y) << c.y[0]);
    std::uint64_t out = testing::replay(c.circuit, in);
    EXPECT_EQ(((out >> c.out_lt) & 1U) != 0, r.lt);
    EXPECT_EQ(((out >> c.out_eq) & 1U) != 0, r.eq);
    EXPECT_EQ(((out >> c.out_gt) & 1U) != 0, r.gt);
  }
}

TEST(Comparator, WidthsOneToSix) {
  for (int n = 1; n <= 6; ++n) {
    ComparatorCircuit c = synth_comparator(n);
    EXPECT_EQ(c.circuit.num_qubits(), 2 * n + 3);
    ComparatorReport r = verify_comparator(c);
    EXPECT_TRUE(r.ok()) << n << ": " << r.summary();
    EXPECT_EQ(r.pairs_checked, std::uint64_t{1} << (2 * n));
  }
}

TEST(Comparator, FourBitSpotCheck) {
  ComparatorCircuit c = synth_comparator(4);
  std::uint64_t in = 5U | (12U << 4);
  std::uint64_t out = testing::replay(c.circuit, in);
  EXPECT_EQ((out >> c.out_lt) & 1U, 1U);
  EXPECT_EQ((out >> c.out_eq) & 1U, 0U);
  EXPECT_EQ((out >> c.out_gt) & 1U, 0U);
}

TEST(Comparator, GreaterIsBuiltFromLessAndEqual) {
  ComparatorCircuit c = synth_comparator(3);
  const auto& g = c.circuit.gates();
  ASSERT_GE(g.size(), 3U);
  EXPECT_EQ(g[g.size() - 3], Gate::cx(c.out_lt, c.out_gt));
  EXPECT_EQ(g[g.size() - 2], Gate::cx(c.out_eq, c.out_gt));
  EXPECT_EQ(g[g.size() - 1], Gate::x(c.out_gt));
}

TEST(Comparator, FourBitWireReuse) {
  ReuseLessThan4 r = reuse_less_than_4();
  EXPECT_EQ(r.circuit.num_qubits(), 9);
  for (std::uint64_t x = 0; x < 16; ++x) {
    for (std::uint64_t y = 0; y < 16; ++y) {
      std::uint64_t in = x | (y << 4);
      std::uint64_t out = testing::replay(r.circuit, in);
      std::uint64_t want = in & ~(std::uint64_t{1} << r.lt_wire);
      if (x < y) want |= std::uint64_t{1} << r.lt_wire;
      if ((y >> 3) & 1U) want |= std::uint64_t{1} << r.moved_y4;
      ASSERT_EQ(out, want) << x << " " << y;
    }
  }
}

}  // namespace
}  // namespace mcx
