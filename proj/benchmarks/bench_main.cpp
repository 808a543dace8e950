#include <random>

#include <benchmark/benchmark.h>

#include "kdirac/euclidean.hpp"
#include "kdirac/parabolic.hpp"

using namespace kdirac;

namespace {

ExactMatrix dense_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<std::int64_t>(engine() % 11) - 5);
  }
  return m;
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix m = dense_matrix(n, n + n / 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix m = dense_matrix(n / 2, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(m).dim());
}
BENCHMARK(BM_Kernel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SolutionSpace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  const EuclideanSystem sys = build_euclidean(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solution_space(sys.ops, *sys.vars, sys.params.s, d).dim());
}
BENCHMARK(BM_SolutionSpace)->Args({3, 2})->Args({3, 4})->Args({4, 3})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_Prolongation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Tableau t = euclidean_tableau(build_euclidean(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(SymbolTower(t, 1).level_dim(2));
}
BENCHMARK(BM_Prolongation)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CartanLevel1(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const EuclideanSystem sys = build_euclidean(n, 2);
  const SymbolTower tower(euclidean_tableau(sys), 1);
  const OrderedBasis ob = euclidean_level1_ordering(sys).ordered_basis();
  for (auto _ : state) benchmark::DoNotOptimize(cartan_test(tower, 1, ob).rhs);
}
BENCHMARK(BM_CartanLevel1)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RandomOrderingK3(benchmark::State& state) {
  const EuclideanSystem sys = build_euclidean(3, 3);
  const SymbolTower tower(euclidean_tableau(sys), 1);
  const Tableau lifted = tower.lifted(1);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filtration_dims(lifted, search_ordering(lifted, OrderingStrategy::random(seed++))));
  }
}
BENCHMARK(BM_RandomOrderingK3)->Unit(benchmark::kMillisecond);

void BM_ParabolicLevel1(benchmark::State& state) {
  const ParabolicSystem sys = build_parabolic(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(parabolic_cartan_suite(sys, OrderingStrategy::given()).level1.rhs);
}
BENCHMARK(BM_ParabolicLevel1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
