// Copyright 2026 The Tetherpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts. The second
// argument of each parallel benchmark is the worker count.

#include <benchmark/benchmark.h>

#include <vector>

#include "tetherpower/circuit.hpp"
#include "tetherpower/planner.hpp"
#include "tetherpower/reference.hpp"

namespace {

using namespace tetherpower;

const std::vector<double> kResistances{0.0166 * 6.1, 0.0166 * 1.5};
const std::vector<double> kThrustRange{25.0, 25.0};

ReachProblem reach_problem() {
  ReachProblem p;
  p.end_setpoint = {30.0, 15.0};
  p.source_voltage = 54.0;
  p.tether = {0.0166, 0.095};
  p.quad = {0.7, 4.5, 0.0};
  return p;
}

void BM_BoundaryReference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::trace_feasible_boundary(
        12.6, 4.5, kResistances, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BoundaryReference)->Arg(256);

void BM_Boundary(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_feasible_boundary(
        12.6, 4.5, kResistances, static_cast<int>(state.range(0)),
        static_cast<int>(state.range(1))));
  }
}
BENCHMARK(BM_Boundary)->Args({256, 1})->Args({256, 2})->Args({256, 4});

void BM_HeatmapReference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::sweep_thrust_heatmap(
        12.6, 4.5, kResistances, kThrustRange, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_HeatmapReference)->Arg(101);

void BM_Heatmap(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_thrust_heatmap(
        12.6, 4.5, kResistances, kThrustRange, static_cast<int>(state.range(0)),
        static_cast<int>(state.range(1))));
  }
}
BENCHMARK(BM_Heatmap)->Args({101, 1})->Args({101, 2})->Args({101, 4});

void BM_LengthCurveReference(benchmark::State& state) {
  const auto prob = reach_problem();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::sweep_length_curve(prob));
  }
}
BENCHMARK(BM_LengthCurveReference);

void BM_LengthCurve(benchmark::State& state) {
  const auto prob = reach_problem();
  SearchOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_length_curve(prob, opts));
  }
}
BENCHMARK(BM_LengthCurve)->Arg(1)->Arg(2)->Arg(4);

void BM_IntermediateGridReference(benchmark::State& state) {
  const auto prob = reach_problem();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::sweep_intermediate_grid(prob, 39.13));
  }
}
BENCHMARK(BM_IntermediateGridReference)->Unit(benchmark::kMillisecond);

void BM_IntermediateGrid(benchmark::State& state) {
  const auto prob = reach_problem();
  SearchOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_intermediate_grid(prob, 39.13, opts));
  }
}
BENCHMARK(BM_IntermediateGrid)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
