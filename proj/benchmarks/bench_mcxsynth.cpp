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


#include <benchmark/benchmark.h>

#include "mcxsynth/comparator.hpp"
#include "mcxsynth/composer.hpp"
#include "mcxsynth/layout.hpp"
#include "mcxsynth/simulator.hpp"
#include "mcxsynth/stesso.hpp"

namespace {

using namespace mcx;

void BM_SynthSeq1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(synth_pp(n, Variant::Seq1, n - 2));
}
BENCHMARK(BM_SynthSeq1)->Arg(8)->Arg(30)->Arg(100);

void BM_SynthSeq2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(synth_pp(n, Variant::Seq2, 1));
}
BENCHMARK(BM_SynthSeq2)->Arg(8)->Arg(30)->Arg(100);

void BM_SynthSeq3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(synth_pp(n, Variant::Seq3, 1));
}
BENCHMARK(BM_SynthSeq3)->Arg(8)->Arg(30)->Arg(100);

void BM_VerifyExhaustive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Circuit c = synth_pp(n, Variant::Seq2, 1);
  std::vector<int> controls;
  for (int i = 0; i < n; ++i) controls.push_back(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_mcx(c, controls, PolarityMask::positive(n), n + 1, {n}));
  }
}
BENCHMARK(BM_VerifyExhaustive)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_Comparator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ComparatorCircuit c = synth_comparator(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_comparator(c));
}
BENCHMARK(BM_Comparator)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RouteExact(benchmark::State& state) {
  Circuit c = synth_pp(4, Variant::Seq1, 2);
  CouplingGraph g = make_coupling(CouplingKind::SquareGrid, {3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(place_and_route(c, g));
}
BENCHMARK(BM_RouteExact)->Unit(benchmark::kMillisecond);

void BM_RouteGreedy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Circuit c = synth_pp(n, Variant::Seq2, 1);
  CouplingGraph g = make_coupling(CouplingKind::HeavyHex, {3, 3});
  RouteOptions opts;
  opts.mode = RouterMode::Greedy;
  for (auto _ : state) benchmark::DoNotOptimize(place_and_route(c, g, opts));
}
BENCHMARK(BM_RouteGreedy)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
