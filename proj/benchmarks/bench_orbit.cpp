#include "zsig/orbit.hpp"

#include <benchmark/benchmark.h>

using namespace zsig;

static void BM_IterateCubic(benchmark::State& state) {
  const auto g = X2DivisiblePoly::parse("x^3+x^2");
  const Rational c(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(iterate(g, c, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_IterateCubic)->DenseRange(6, 12, 2);

static void BM_DecideMembership(benchmark::State& state) {
  const auto g = X2DivisiblePoly::parse("2*x^3+x^2");
  for (auto _ : state)
    for (long a = -20; a <= 20; ++a) benchmark::DoNotOptimize(decide_membership(g, Rational(a, 6)));
}
BENCHMARK(BM_DecideMembership);
