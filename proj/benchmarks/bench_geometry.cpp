#include "cydesing/group/finite_group.hpp"
#include "cydesing/invariants/euler.hpp"
#include "cydesing/torus/singular_set.hpp"

#include <benchmark/benchmark.h>

using namespace cydesing;

namespace {

Motion diag(std::vector<Cyclotomic> d) {
  const std::size_t n = d.size();
  Matrix<Cyclotomic> a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = d[i];
  return Motion::from_complex(a, false);
}

const Cyclotomic kI = Cyclotomic::root_of_unity(4, 1);

std::vector<Motion> z2z2() { return {diag({1, -1, -1}), diag({-1, 1, -1})}; }

void BM_ClosureZ4(benchmark::State& state) {
  auto gens = std::vector<Motion>{diag({-1, kI, kI})};
  for (auto _ : state) benchmark::DoNotOptimize(FiniteMatrixGroup::close(gens));
}
BENCHMARK(BM_ClosureZ4);

void BM_SingularSetZ2Z2(benchmark::State& state) {
  auto g = FiniteMatrixGroup::close(z2z2());
  auto lattice = TorusLattice::standard(6);
  for (auto _ : state) benchmark::DoNotOptimize(singular_set(g, lattice));
}
BENCHMARK(BM_SingularSetZ2Z2)->Unit(benchmark::kMillisecond);

void BM_EulerZ2Z2(benchmark::State& state) {
  auto g = FiniteMatrixGroup::close(z2z2());
  auto ambient = Ambient::torus(TorusLattice::standard(6));
  for (auto _ : state) benchmark::DoNotOptimize(orbifold_euler(g, ambient));
}
BENCHMARK(BM_EulerZ2Z2)->Unit(benchmark::kMillisecond);

}  // namespace
