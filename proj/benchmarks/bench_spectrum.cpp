#include <benchmark/benchmark.h>

#include "u6ncay/families.hpp"
#include "u6ncay/integrality.hpp"
#include "u6ncay/search.hpp"
#include "u6ncay/spectral.hpp"

namespace {

// The 4-first family gives a connected (3n-1)-regular workload on 6n vertices.
u6ncay::ConnectionSet workload(int n) {
  return u6ncay::family(u6ncay::FamilyId::four_first, n).set;
}

void BM_BabaiSpectrum(benchmark::State& state) {
  const auto S = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(u6ncay::babai_spectrum(S));
}
BENCHMARK(BM_BabaiSpectrum)->DenseRange(2, 10, 2);

void BM_BruteSpectrum(benchmark::State& state) {
  const auto S = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(u6ncay::brute_spectrum(S));
}
BENCHMARK(BM_BruteSpectrum)->DenseRange(2, 10, 2);

void BM_ExactIntegerSpectrum(benchmark::State& state) {
  const auto S = workload(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(u6ncay::exact_integer_spectrum(S));
}
BENCHMARK(BM_ExactIntegerSpectrum)->DenseRange(2, 10, 2);

void BM_IntegralityCascade(benchmark::State& state) {
  const auto S = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(u6ncay::decide(S));
}
BENCHMARK(BM_IntegralityCascade)->DenseRange(2, 10, 2);

void BM_CensusExhaustive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(u6ncay::census(n));
}
BENCHMARK(BM_CensusExhaustive)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
