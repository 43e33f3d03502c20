#include "zsig/arith.hpp"
#include "zsig/zsigmondy.hpp"

#include <benchmark/benchmark.h>

using namespace zsig;

static void BM_ZsigmondySet(benchmark::State& state) {
  const auto orbit = iterate(X2DivisiblePoly::parse("x^3+x^2"), Rational(5, 6), 8);
  for (auto _ : state) benchmark::DoNotOptimize(zsigmondy_set(orbit, 8));
}
BENCHMARK(BM_ZsigmondySet);

static void BM_PrimitiveWithWitness(benchmark::State& state) {
  const auto orbit = iterate(X2DivisiblePoly::parse("x^2"), Rational(1), 6);
  for (auto _ : state) benchmark::DoNotOptimize(primitive_prime_exists(orbit, 6));
}
BENCHMARK(BM_PrimitiveWithWitness);

static void BM_ThreeFifthsCertificate(benchmark::State& state) {
  const auto limit = static_cast<std::uint32_t>(state.range(0));
  const SmallFactorTable table(limit);
  for (auto _ : state) {
    bool all = true;
    for (std::uint32_t n = 30; n <= limit; ++n) all &= s_d_three_fifths_holds(n, 3, table.distinct_primes(n));
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_ThreeFifthsCertificate)->Arg(1000)->Arg(10000);
BENCHMARK_MAIN();
