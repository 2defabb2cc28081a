// Copyright 2026 The Authors.
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

// Serial reference sweep against the OpenMP sweep, plus the per-instance
// solvers they are built from.

#include <benchmark/benchmark.h>

#include <random>

#include "adclear/duopoly.hpp"
#include "adclear/monopoly.hpp"
#include "adclear/simulation.hpp"

namespace {

adclear::ScenarioConfig bench_config(std::size_t instances) {
  adclear::ScenarioConfig config;
  config.seed = 2026;
  config.instances = instances;
  return config;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto config = bench_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adclear::run_sweep_serial(config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          static_cast<std::int64_t>(config.m_values.size()));
}
BENCHMARK(BM_SweepSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto config = bench_config(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adclear::run_sweep(config, threads));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          static_cast<std::int64_t>(config.m_values.size()));
}
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{200, 1000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_OptimalPrice(benchmark::State& state) {
  const auto config = bench_config(1);
  const auto pool = adclear::sample_instance(
      config, static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(adclear::optimal_price(pool, {1.0}));
  }
}
BENCHMARK(BM_OptimalPrice)->Arg(15)->Arg(1000);

void BM_OracleRevenue(benchmark::State& state) {
  const auto config = bench_config(1);
  const auto pool = adclear::sample_instance(
      config, static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(adclear::oracle_revenue(pool, {1.0}));
  }
}
BENCHMARK(BM_OracleRevenue)->Arg(15)->Arg(1000);

void BM_SolveEquilibrium(benchmark::State& state) {
  const auto config = bench_config(1);
  const auto pool = adclear::sample_instance(
      config, static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(adclear::solve_equilibrium(pool, 0.5, 0.5));
  }
}
BENCHMARK(BM_SolveEquilibrium)->Arg(5)->Arg(15)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
