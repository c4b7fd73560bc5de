#include "cydesing/exact/field_linalg.hpp"
#include "cydesing/exact/smith.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cydesing;

namespace {

IntMatrix random_int_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Integer(d(rng));
  return m;
}

void BM_Snf(benchmark::State& state) {
  auto m = random_int_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto ints = random_int_matrix(n, 2);
  RatMatrix m(n / 2, n);
  for (std::size_t i = 0; i < n / 2; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(ints(i, j));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_Kernel)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
