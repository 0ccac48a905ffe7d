#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "rsum/dyson.hpp"
#include "rsum/poly.hpp"
#include "rsum/scan.hpp"
#include "rsum/sumset.hpp"
#include "rsum/witness.hpp"

using namespace rsum;

static void BM_DifferenceProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(difference_product(n, 2, IntegerRing{}));
}
BENCHMARK(BM_DifferenceProduct)->DenseRange(3, 5);

static void BM_RestrictedSumset(benchmark::State& state) {
  const PrimeModulus mod(101);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Residue> A(20);
  std::iota(A.begin(), A.end(), 0);
  const auto F = SetFamily::common(mod, A, n);
  const auto a = CoefficientVector::ones(mod, n);
  for (auto _ : state) benchmark::DoNotOptimize(restricted_linear_sumset(a, F, true));
}
BENCHMARK(BM_RestrictedSumset)->DenseRange(2, 4);

static void BM_FindWitness(benchmark::State& state) {
  const PrimeModulus mod(13);
  const std::vector<std::int64_t> k{3, 7, 1, 9};
  const CoefficientVector a(mod, {1, 2, 5, 12});
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(k, a));
}
BENCHMARK(BM_FindWitness);

static void BM_DysonExpansion(benchmark::State& state) {
  const std::vector<std::uint32_t> m{2, 2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(dyson_coefficient(m));
}
BENCHMARK(BM_DysonExpansion);

static void BM_DistinctSumScan(benchmark::State& state) {
  ScanConfig c;
  c.theorem = TheoremId::thm1_2;
  c.primes = {static_cast<std::uint32_t>(state.range(0))};
  c.n = 3;
  c.size_lo = 4;
  for (auto _ : state) benchmark::DoNotOptimize(run_scan(c));
}
BENCHMARK(BM_DistinctSumScan)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ValueSetScan(benchmark::State& state) {
  ScanConfig c;
  c.theorem = TheoremId::cor5_1;
  c.primes = {7};
  c.n = 3;
  c.ks = {static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(run_scan(c));
}
BENCHMARK(BM_ValueSetScan)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
