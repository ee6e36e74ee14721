#include <benchmark/benchmark.h>

#include "covfock/decompose.hpp"
#include "covfock/lorentz.hpp"
#include "covfock/metric.hpp"
#include "covfock/wavefunctions.hpp"

using namespace covfock;

static void BM_GeneratorBuild(benchmark::State& state) {
  auto basis = make_basis(int(state.range(0)));
  for (auto _ : state) {
    for (const auto& label : all_generator_labels()) {
      benchmark::DoNotOptimize(generator_matrix(basis, label));
    }
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeneratorBuild)->DenseRange(2, 10, 2)->Complexity();

static void BM_FiniteBoost(benchmark::State& state) {
  auto basis = make_basis(int(state.range(0)));
  auto gen = boost_generator(basis, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(finite_transform(gen, 0.5));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FiniteBoost)->DenseRange(2, 10, 2)->Complexity();

static void BM_Casimir(benchmark::State& state) {
  auto basis = make_basis(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(casimir_matrix(basis));
  }
}
BENCHMARK(BM_Casimir)->DenseRange(2, 8, 2);

static void BM_InvarianceCheck(benchmark::State& state) {
  auto basis = make_basis(int(state.range(0)));
  auto lam = finite_transform(boost_generator(basis, 3), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariance_check(lam));
  }
}
BENCHMARK(BM_InvarianceCheck)->DenseRange(2, 8, 2);

static void BM_OverlapPair(benchmark::State& state) {
  const FockIndex a{1, 0, 2, 1};
  const FockIndex b{0, 1, 2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(overlap_cartesian(a, b, false, int(state.range(0))));
  }
}
BENCHMARK(BM_OverlapPair)->Arg(8)->Arg(16)->Arg(32);

static void BM_LevelOverlapMatrix(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(level_overlap_matrix(n));
  }
}
BENCHMARK(BM_LevelOverlapMatrix)->DenseRange(1, 5, 1);

static void BM_DecomposeFock(benchmark::State& state) {
  const FockIndex idx{0, 1, 1, int(state.range(0)) - 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_fock(idx));
  }
}
BENCHMARK(BM_DecomposeFock)->DenseRange(2, 6, 1);

BENCHMARK_MAIN();
