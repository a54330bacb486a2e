// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <omp.h>

#include <map>

#include "octa/wl.hpp"

namespace {

const octa::PairColoring& lambda_input(std::uint32_t q) {
  static std::map<std::uint32_t, octa::PairColoring> cache;
  auto it = cache.find(q);
  if (it == cache.end()) {
    const auto [p, a] = *octa::prime_power(q);
    it = cache.emplace(q, octa::lambda_coloring(octa::build_design(octa::Field::create(p, a)))).first;
  }
  return it->second;
}

void BM_WlParallel(benchmark::State& state) {
  const auto& input = lambda_input(static_cast<std::uint32_t>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(octa::wl_stabilize(input).rounds);
  omp_set_num_threads(omp_get_num_procs());
  state.counters["points"] = input.n();
}

void BM_WlReference(benchmark::State& state) {
  const auto& input = lambda_input(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(octa::wl_stabilize_reference(input).rounds);
  state.counters["points"] = input.n();
}

void BM_TensorFull(benchmark::State& state) {
  const auto& input = lambda_input(static_cast<std::uint32_t>(state.range(0)));
  const auto wl = octa::wl_stabilize(input).final_coloring;
  for (auto _ : state) benchmark::DoNotOptimize(octa::intersection_tensor(wl, octa::CheckLevel::Full).rank());
}

}  // namespace

BENCHMARK(BM_WlParallel)->ArgsProduct({{13, 17, 29, 41}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WlReference)->Arg(13)->Arg(17)->Arg(29)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorFull)->Arg(29)->Arg(41)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
