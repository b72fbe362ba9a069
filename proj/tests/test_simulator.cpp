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

#include <random>

#include "mcxsynth/shapes.hpp"
#include "mcxsynth/simulator.hpp"
#include "mcxsynth/stesso.hpp"
#include "oracle.hpp"

namespace mcx {
namespace {

using testing::range;

TEST(Simulator, ToffoliTruthTable) {
  Circuit c = Circuit::with_qubits(3);
  c.add(Gate::ccx(0, 1, 2));
  EXPECT_EQ(apply(c, BasisState::parse("110")).to_string(), "111");
  EXPECT_EQ(apply(c, BasisState::parse("010")).to_string(), "010");
}

TEST(Simulator, BasisStateText) {
  BasisState s = BasisState::parse("1001");
  EXPECT_EQ(s.num_qubits, 4);
  EXPECT_TRUE(s.get(0));
  EXPECT_TRUE(s.get(3));
  EXPECT_FALSE(s.get(1));
  EXPECT_EQ(s.to_string(), "1001");
  EXPECT_THROW(BasisState::parse("10a"), Error);
}

TEST(Simulator, SwapAndCx) {
  Circuit c = Circuit::with_qubits(3);
  c.add(Gate::swap(0, 2));
  c.add(Gate::cx(2, 1));
  EXPECT_EQ(apply(c, BasisState::parse("100")).to_string(), "011");
}

TEST(Simulator, LengthMismatch) {
  Circuit c = Circuit::with_qubits(3);
  try {
    apply(c, BasisState::parse("10"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LengthMismatch);
  }
}

TEST(Simulator, VShapeOnAllOnes) {
  // controls 1111, supports 00, target 0
  Circuit v = build_vshape({0, 1, 2, 3}, {4, 5}, 6);
  EXPECT_EQ(apply(v, BasisState::parse("1111000")).to_string(), "1111001");
}

TEST(Simulator, PermutationTableBasics) {
  Circuit empty = Circuit::with_qubits(3);
  EXPECT_TRUE(permutation_table(empty).is_identity());
  Circuit x = Circuit::with_qubits(1);
  x.add(Gate::x(0));
  EXPECT_EQ(permutation_table(x).mapping, (std::vector<std::uint32_t>{1, 0}));
  try {
    permutation_table(Circuit::with_qubits(21));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooManyQubits);
  }
}

Circuit random_circuit(std::mt19937& rng, int nq, int len) {
  Circuit c = Circuit::with_qubits(nq);
  std::uniform_int_distribution<int> q(0, nq - 1), kind(0, 3);
  while (static_cast<int>(c.size()) < len) {
    int a = q(rng), b = q(rng), t = q(rng);
    switch (kind(rng)) {
      case 0: c.add(Gate::x(a)); break;
      case 1: if (a != b) c.add(Gate::cx(a, b)); break;
      case 2: if (a != b && b != t && a != t) c.add(Gate::ccx(a, b, t)); break;
      default: if (a != b) c.add(Gate::swap(a, b)); break;
    }
  }
  return c;
}

TEST(SimulatorProperty, InverseUndoesAndTablesAreBijective) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int nq = 3 + trial % 10;
    Circuit c = random_circuit(rng, nq, 1 + trial % 25);
    Circuit inv = inverse(c);
    std::uniform_int_distribution<std::uint64_t> st(0, (std::uint64_t{1} << nq) - 1);
    for (int k = 0; k < 8; ++k) {
      BasisState s{nq, st(rng)};
      ASSERT_EQ(apply(inv, apply(c, s)), s);
      ASSERT_EQ(apply(c, s).bits, testing::replay(c, s.bits));
    }
    if (nq <= 8) ASSERT_TRUE(permutation_table(c).is_bijective());
  }
}

TEST(Simulator, Seq3TableMatchesDirectConstruction) {
  Circuit c = synth_pp(3, Variant::Seq3, 1);
  PermutationTable direct;
  for (std::uint32_t s = 0; s < 32; ++s) {
    const bool all = (s & 7U) == 7U;
    direct.mapping.push_back(all ? s ^ 16U : s);
  }
  EXPECT_EQ(permutation_table(c), direct);
  EXPECT_EQ(mcx_table(5, {0, 1, 2}, PolarityMask::positive(3), 4), direct);
}

TEST(Simulator, MixedPolarityTableFromDefinition) {
  PolarityMask m = PolarityMask::parse("101");
  PermutationTable t = mcx_table(4, {0, 1, 2}, m, 3);
  for (std::uint32_t s = 0; s < 16; ++s) {
    EXPECT_EQ(t.mapping[s], testing::ideal_mcx(s, {0, 1, 2}, {true, false, true}, 3));
  }
}

TEST(VerifyMcx, Seq1FourControls) {
  Circuit c = synth_pp(4, Variant::Seq1, 2);
  McxVerdict v = verify_mcx(c, range(0, 4), PolarityMask::positive(4), 6, {4, 5});
  EXPECT_TRUE(v.ok());
  EXPECT_TRUE(v.exhaustive);
  EXPECT_EQ(v.states_checked, 128U);
  EXPECT_EQ(v.summary(), "mcx: ok, restore: ok, support-independent: ok");
}

TEST(VerifyMcx, BareVShapeLeavesResidue) {
  Circuit v = build_vshape({0, 1, 2, 3}, {4, 5}, 6);
  McxVerdict r = verify_mcx(v, range(0, 4), PolarityMask::positive(4), 6, {4, 5});
  EXPECT_FALSE(r.mcx);
  EXPECT_TRUE(r.restore);
  // The residue s1c3c4 ^ s2c4 depends on the supports.
  EXPECT_FALSE(r.support_independent);
  ASSERT_TRUE(r.counterexample.has_value());
}

TEST(VerifyMcx, StrayXOnControlBreaksRestore) {
  Circuit c = synth_pp(3, Variant::Seq1, 1);
  c.add(Gate::x(0));
  McxVerdict v = verify_mcx(c, range(0, 3), PolarityMask::positive(3), 4, {3});
  EXPECT_FALSE(v.restore);
  EXPECT_FALSE(v.ok());
}

TEST(VerifyMcx, SamplingMode) {
  Circuit c = synth_pp(6, Variant::Seq1, 4);
  VerifyOptions opts;
  opts.exhaustive_limit = 8;
  opts.sample_budget = 5000;
  McxVerdict v = verify_mcx(c, range(0, 6), PolarityMask::positive(6), 10, range(6, 10), opts);
  EXPECT_TRUE(v.ok());
  EXPECT_FALSE(v.exhaustive);
  EXPECT_EQ(v.states_checked, 5000U);
}

TEST(VerifyMcx, SamplingCatchesWrongCircuit) {
  Circuit c = synth_pp(6, Variant::Seq1, 4);
  c.add(Gate::x(10));
  VerifyOptions opts;
  opts.exhaustive_limit = 8;
  EXPECT_FALSE(verify_mcx(c, range(0, 6), PolarityMask::positive(6), 10, range(6, 10), opts).mcx);
}

}  // namespace
}  // namespace mcx
