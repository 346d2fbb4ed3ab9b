// Copyright 2026 The splitlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "splitlab/sigma_lfsr.hpp"
#include "splitlab/splitting.hpp"

using namespace splitlab;

static void BM_TowerMul(benchmark::State& state) {
  const auto T = build_extension(build_field(2, 1), static_cast<unsigned>(state.range(0)));
  auto x = T->from_code(3);
  const auto y = T->alpha();
  for (auto _ : state) {
    x = T->mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_TowerMul)->Arg(4)->Arg(8)->Arg(16);

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto F = build_field(static_cast<std::uint64_t>(state.range(1)), 1);
  std::mt19937_64 rng(1);
  MatrixFq M(F, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M.set(i, j, rng() % F->order());
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(M));
}
BENCHMARK(BM_Rank)->Args({8, 2})->Args({16, 2})->Args({16, 3})->Args({32, 5});

static void BM_SubspaceStream(benchmark::State& state) {
  const auto F = build_field(2, 1);
  for (auto _ : state) {
    std::uint64_t n = 0;
    for_each_subspace(F, 8, 4, [&](const SubspaceBasis&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SubspaceStream)->Unit(benchmark::kMillisecond);

static void BM_CountSplitting(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::uint64_t>(state.range(0)), static_cast<unsigned>(state.range(1)),
                                  static_cast<unsigned>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(count_splitting(inst).brute_count);
}
BENCHMARK(BM_CountSplitting)->Args({2, 2, 2})->Args({3, 2, 2})->Args({2, 2, 3})->Args({2, 3, 2})->Unit(benchmark::kMillisecond);

static void BM_SingerCensus(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(census_singer(m, n, 2, CensusMethod::scan));
}
BENCHMARK(BM_SingerCensus)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_FiberCensus(benchmark::State& state) {
  const auto F = build_field(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fiber_census(F, 2, 3));
}
BENCHMARK(BM_FiberCensus)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
