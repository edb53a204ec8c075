// Copyright 2026 The degga Authors
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

#include "degga/degga.hpp"

namespace {

using namespace degga;

TargetSet two_targets(int n) {
  return TargetSet::parse({std::string(static_cast<std::size_t>(n), '0'),
                           std::string(static_cast<std::size_t>(n), '1')});
}

void BM_SimulateLong(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit c = build_long(n, two_targets(n));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(c));
  state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(BM_SimulateLong)->DenseRange(6, 14, 4);

void BM_SimulateLoweredLong(benchmark::State& state) {
  const Circuit c = lower_circuit(build_long(6, two_targets(6)));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(c));
  state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(BM_SimulateLoweredLong);

void BM_HadamardLayer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Circuit c(n);
  for (int q = 0; q < n; ++q) c.append(Gate::h(q));
  StateVector s(n);
  for (auto _ : state) {
    s.apply(c);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * n * (std::int64_t{1} << n));
}
BENCHMARK(BM_HadamardLayer)->DenseRange(10, 20, 5);

void BM_FiveControlPhase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s(n);
  const Gate g = Gate::mcps({0, 1, 2, 3, 4}, n - 1, 0.3);
  for (auto _ : state) {
    s.apply(g);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_FiveControlPhase)->DenseRange(10, 20, 5);

void BM_BuildDegga(benchmark::State& state) {
  const auto plan = plan_degga(6, two_targets(6), Partition({2, 2, 2}));
  const bool optimize = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_degga(plan, optimize));
}
BENCHMARK(BM_BuildDegga)->Arg(0)->Arg(1);

void BM_LowerFiveControlPhase(benchmark::State& state) {
  const Gate g = Gate::mcps({0, 1, 2, 3, 4}, 5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_c5ps(g));
}
BENCHMARK(BM_LowerFiveControlPhase);

void BM_Depth(benchmark::State& state) {
  const Circuit c = lower_circuit(build_long(6, two_targets(6)));
  for (auto _ : state) benchmark::DoNotOptimize(depth(c));
  state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(BM_Depth);

void BM_Sample(benchmark::State& state) {
  Circuit c(10);
  for (int q = 0; q < 10; ++q) c.append(Gate::h(q));
  const StateVector s = simulate(c);
  for (auto _ : state) benchmark::DoNotOptimize(sample(s, 10000, 42));
}
BENCHMARK(BM_Sample);

}  // namespace

BENCHMARK_MAIN();
