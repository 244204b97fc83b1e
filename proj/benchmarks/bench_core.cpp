// Copyright 2026 The qfi-conveyor Authors
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

#include <numbers>

#include "qfic/analytic.hpp"
#include "qfic/bruteforce.hpp"
#include "qfic/experiments.hpp"
#include "qfic/ising.hpp"
#include "qfic/sources.hpp"

namespace {

using namespace qfic;

constexpr double kPi = std::numbers::pi;

ChainLayout star_layout(int n) {
  return ChainLayout::make(n, {0}, n - 1);
}

void BM_Evolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PureState psi = product_state(n, {Axis::X, +1});
  const CouplingMatrix j =
      expand_star(star_layout(n), {.j1 = 0.5, .j2 = 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(psi, j, 0.7));
  }
  state.SetComplexityN(Eigen::Index{1} << n);
}
BENCHMARK(BM_Evolve)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AntennaMarginal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PureState psi = product_state(n, {Axis::X, +1});
  const std::vector<int> keep = {n - 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(psi, keep));
  }
}
BENCHMARK(BM_AntennaMarginal)
    ->Arg(12)
    ->Arg(16)
    ->Arg(20)
    ->Unit(benchmark::kMillisecond);

void BM_TransferPipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChainLayout layout = star_layout(n);
  const CouplingMatrix j =
      expand_star(layout, {.j1 = 0.5, .j2 = 1.0, .u = 0.0, .j_bg = 0.3});
  SourceSpec spec;
  spec.kind = SourceKind::Separable;
  spec.m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        brute_force_transfer(spec, layout, j, 1.1, 0.2));
  }
}
BENCHMARK(BM_TransferPipeline)
    ->Arg(8)
    ->Arg(10)
    ->Arg(12)
    ->Unit(benchmark::kMicrosecond);

void BM_TwistingPointOptimized(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oat_transfer_point(m, 0, 0.9, 0.0, true));
  }
}
BENCHMARK(BM_TwistingPointOptimized)
    ->Arg(10)
    ->Arg(50)
    ->Arg(100)
    ->Unit(benchmark::kMicrosecond);

void BM_CollectiveRotation(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SymmetricState ghz = ghz_state(m, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotate_y(ghz, kPi / 3));
  }
}
BENCHMARK(BM_CollectiveRotation)
    ->Arg(10)
    ->Arg(100)
    ->Arg(500)
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
