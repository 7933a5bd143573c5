// Copyright 2026 The unpop Authors
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "test_support.h"
#include "unpop/gf2.h"
#include "unpop/solver.h"

namespace unpop {
namespace {

using testing::PendantInstance;

void BM_Gf2Mul(benchmark::State& state) {
  const FieldSpec f = FieldSpec::Random(static_cast<int>(state.range(0)), 1);
  Rng rng(2);
  std::vector<FieldElement> xs(1024);
  for (auto& x : xs) x = f.Random(rng);
  FieldElement acc = 1;
  std::size_t i = 0;
  for (auto _ : state) {
    acc = f.Mul(acc ^ xs[i++ & 1023], xs[(i * 7) & 1023]) | 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Gf2Mul)->Arg(8)->Arg(16)->Arg(32)->Arg(63);

void BM_DetectScaling(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const ConstrainedGraph g = PendantInstance(40, 120, k, 3);
  SolverConfig config;
  config.repetitions = 1;
  CycleSolver solver(g, config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.Detect().feasible);
  }
  state.counters["table_elements"] =
      static_cast<double>((std::size_t{1} << k) * g.node_count);
}
BENCHMARK(BM_DetectScaling)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

void BM_PolySpaceScaling(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const ConstrainedGraph g = PendantInstance(40, 120, k, 3);
  SolverConfig config;
  config.repetitions = 1;
  config.variant = SolverVariant::kPolySpace;
  CycleSolver solver(g, config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.Detect().feasible);
  }
}
BENCHMARK(BM_PolySpaceScaling)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace unpop

BENCHMARK_MAIN();
