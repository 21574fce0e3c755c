#include <benchmark/benchmark.h>

#include "unicusp/factorization.hpp"
#include "unicusp/lattice.hpp"
#include "unicusp/semigroup.hpp"
#include "unicusp/severi.hpp"

static void BM_EnumerateGenus(benchmark::State& state) {
  const long long genus = state.range(0);
  for (auto _ : state) {
    auto list = unicusp::enumerate_genus(genus);
    benchmark::DoNotOptimize(list);
  }
  state.SetComplexityN(genus);
}
BENCHMARK(BM_EnumerateGenus)->DenseRange(8, 14, 2);

static void BM_SupersymmetricCodim(benchmark::State& state) {
  const long long a3 = state.range(0);
  for (auto _ : state) {
    auto check = unicusp::verify_supersymmetric(2, 3, a3);
    benchmark::DoNotOptimize(check);
  }
}
BENCHMARK(BM_SupersymmetricCodim)->Arg(7)->Arg(35)->Arg(97);

static void BM_BettiScan(benchmark::State& state) {
  const unicusp::GroundSet ground({6, 10, 15});
  const long long bound = state.range(0);
  for (auto _ : state) {
    auto betti = unicusp::betti_elements(ground, bound);
    benchmark::DoNotOptimize(betti);
  }
}
BENCHMARK(BM_BettiScan)->Arg(60)->Arg(240);

static void BM_SimplexCount(benchmark::State& state) {
  const auto spec = unicusp::SimplexSpec::make(7, 9, 11);
  for (auto _ : state) {
    auto count = unicusp::simplex_lattice_count(spec);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SimplexCount);

BENCHMARK_MAIN();
