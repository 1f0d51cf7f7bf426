#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qrecip/modular.hpp"
#include "qrecip/represent.hpp"
#include "qrecip/symbols.hpp"
#include "qrecip/verify.hpp"

namespace {

using namespace qrecip;

std::vector<std::pair<GaussInt, OddGauss>> coprime_pairs(std::int64_t bound, std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  std::vector<std::pair<GaussInt, OddGauss>> out;
  while (out.size() < n) {
    const GaussInt a{coord(rng), coord(rng)};
    const OddGauss b(coord(rng) | 1, coord(rng) & ~std::int64_t{1});
    if (is_unit(gauss_gcd(a, b.value()))) out.emplace_back(a, b);
  }
  return out;
}

void BM_QuarticJacobi(benchmark::State& state) {
  const auto pairs = coprime_pairs(state.range(0), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(quartic_jacobi(a, b));
  }
}
BENCHMARK(BM_QuarticJacobi)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void BM_QuarticOracle(benchmark::State& state) {
  const auto pairs = coprime_pairs(state.range(0), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(quartic_jacobi_oracle(a, b));
  }
}
BENCHMARK(BM_QuarticOracle)->Arg(1000);

void BM_LucasDoubling(benchmark::State& state) {
  const std::int64_t p = (std::int64_t{1} << 61) - 1;
  std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lucas_uv_mod({3, -1}, n, p));
    ++n;
  }
}
BENCHMARK(BM_LucasDoubling)->Arg(1000)->Arg(1000000000000);

void BM_TwoSquares(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(two_squares(p));
}
BENCHMARK(BM_TwoSquares)->Arg(61)->Arg(1000000009)->Arg(1000000000000000009);

void BM_SuiteScan(benchmark::State& state) {
  SuiteOptions opts;
  opts.p_max = state.range(0);
  const std::vector<CheckId> ids{CheckId::thm4_3, CheckId::thm5_1, CheckId::thm7_2};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(ids, opts).summary.total);
}
BENCHMARK(BM_SuiteScan)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
