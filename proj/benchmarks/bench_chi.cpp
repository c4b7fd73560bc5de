#include "cydesing/invariants/chi_data.hpp"

#include <benchmark/benchmark.h>

using namespace cydesing;

namespace {

void BM_ChiCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chi_family_census(4));
}
BENCHMARK(BM_ChiCensus)->Unit(benchmark::kMillisecond);

void BM_ChiTotalSweep(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chi_total_count_sweep(n));
}
BENCHMARK(BM_ChiTotalSweep)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ChiTotalDp(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chi_total_count_dp(n));
}
BENCHMARK(BM_ChiTotalDp)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace
