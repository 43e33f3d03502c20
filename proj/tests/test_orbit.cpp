#include "zsig/orbit.hpp"
#include "zsig/scan.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zsig;

namespace {

X2DivisiblePoly G(const char* s) { return X2DivisiblePoly::parse(s); }

std::vector<long> small_coeffs(const X2DivisiblePoly& g) {
  std::vector<long> out;
  for (const auto& c : g.coeffs()) out.push_back(c.get_si());
  return out;
}

} // namespace

TEST(Iterate, CubicEscapeOrbit) {
  const auto o = iterate(G("x^3+x^2"), Rational(1), 4);
  ASSERT_EQ(o.size(), 4u);
  const long expect[] = {1, 3, 37, 52023};
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(o.entry(n).num, expect[n - 1]);
    EXPECT_EQ(o.entry(n).den, 1);
  }
  EXPECT_FALSE(o.capped_at());
}

TEST(Iterate, DyadicParameter) {
  const auto o = iterate(G("x^3+x^2"), Rational(1, 2), 2);
  EXPECT_EQ(o.entry(1).value(), Rational(1, 2));
  EXPECT_EQ(o.entry(2).value(), Rational(7, 8));
  EXPECT_EQ(o.entry(2).den_valuations.at(Integer(2)), 3u);
}

TEST(Iterate, FixedPointAtZero) {
  for (const char* g : {"x^2", "x^3", "x^7"}) {
    const auto o = iterate(G(g), Rational(0), 6);
    for (const auto& e : o.entries()) {
      EXPECT_EQ(e.num, 0);
      EXPECT_EQ(e.den, 1);
    }
  }
}

TEST(Iterate, BitCapStopsWithoutError) {
  const auto o = iterate(G("x^3+x^2"), Rational(1, 3), 50, 4000);
  ASSERT_TRUE(o.capped_at());
  EXPECT_EQ(*o.capped_at(), o.size() + 1);
  EXPECT_LE(bit_length(o.entries().back().den), 4000u);
}

TEST(Iterate, MatchesOracleOrbit) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coef(-9, 9), num(-20, 20), den(1, 20);
  for (int i = 0; i < 60; ++i) {
    std::vector<Integer> c(5, 0);
    for (int k = 2; k <= 4; ++k) c[k] = coef(rng);
    if (c[4] == 0) c[4] = 3;
    const X2DivisiblePoly g(c);
    const Rational p(num(rng), den(rng));
    const auto o = iterate(g, p, 5);
    const auto ref = oracle::orbit(small_coeffs(g), mpq_class(p.num(), p.den()), o.size());
    for (std::size_t n = 1; n <= o.size(); ++n) {
      EXPECT_EQ(o.entry(n).num, ref[n - 1].get_num());
      EXPECT_EQ(o.entry(n).den, ref[n - 1].get_den());
    }
  }
}

TEST(EscapeCheck, Examples) {
  const auto g = G("x^3+x^2");
  EXPECT_EQ(escape_check(g, Rational(1), iterate(g, Rational(1), 5)), 2u);
  EXPECT_EQ(escape_check(g, Rational(9), iterate(g, Rational(9), 3)), 0u);
  EXPECT_FALSE(escape_check(g, Rational(-1), iterate(g, Rational(-1), 10)));
}

TEST(DecideMembership, HandCases) {
  const auto g = G("x^3+x^2");
  const auto fin = decide_membership(g, Rational(-1));
  EXPECT_EQ(fin.verdict, Verdict::FiniteOrbit);
  EXPECT_EQ(fin.tail_index, 1u);
  EXPECT_EQ(fin.cycle_length, 1u);

  const auto esc = decide_membership(g, Rational(1));
  EXPECT_EQ(esc.verdict, Verdict::InfiniteEscape);
  EXPECT_EQ(esc.escape_index, 2u);

  const auto den = decide_membership(g, Rational(1, 2));
  EXPECT_EQ(den.verdict, Verdict::InfiniteDenominator);
  EXPECT_EQ(den.denominator_index, 1u);
  EXPECT_EQ(den.prime, 2);
  EXPECT_EQ(den.witness(), "n=1;p=2");
}

TEST(DecideMembership, KnownPostcriticallyFiniteQuadratics) {
  const auto g = G("x^2");
  EXPECT_FALSE(decide_membership(g, Rational(0)).infinite());
  EXPECT_FALSE(decide_membership(g, Rational(-1)).infinite());
  EXPECT_FALSE(decide_membership(g, Rational(-2)).infinite());
  EXPECT_TRUE(decide_membership(g, Rational(1)).infinite());
  EXPECT_TRUE(decide_membership(g, Rational(-1, 4)).infinite());
}

TEST(DecideMembership, DenominatorDividingLeadingCoefficientIsNotGrowth) {
  // 2x^2 - 1/2: 0 -> -1/2 -> 0; val_2(M) = val_2(u_d) never exceeds.
  const auto d = decide_membership(G("2*x^2"), Rational(-1, 2));
  EXPECT_EQ(d.verdict, Verdict::FiniteOrbit);
  EXPECT_EQ(d.cycle_length, 2u);
}

TEST(DecideMembership, AgreesWithBruteForceOnGrid) {
  std::size_t conclusive = 0;
  for (const char* gs : {"x^3+x^2", "2*x^3+x^2", "x^2", "-x^2", "x^4-x^2"}) {
    const auto g = G(gs);
    for (const auto& c : scan_grid(6, 4)) {
      const auto o = oracle::classify(small_coeffs(g), mpq_class(c.num(), c.den()), 500, 200'000);
      if (o == oracle::Orbit::Inconclusive) continue;
      ++conclusive;
      const auto d = decide_membership(g, c);
      EXPECT_EQ(d.infinite(), o == oracle::Orbit::Infinite) << gs << " c = " << c;
      EXPECT_TRUE(recheck_witness(g, c, d));
    }
  }
  EXPECT_GT(conclusive, 150u);
}

TEST(DecideMembership, TamperedWitnessIsRejected) {
  const auto g = G("x^3+x^2");
  auto d = decide_membership(g, Rational(1));
  d.escape_index = 1;
  EXPECT_FALSE(recheck_witness(g, Rational(1), d));
  auto f = decide_membership(g, Rational(-1));
  f.tail_index = 0;
  EXPECT_FALSE(recheck_witness(g, Rational(-1), f));
}

TEST(Verdict, Names) {
  EXPECT_EQ(to_string(Verdict::FiniteOrbit), "FiniteOrbit");
  EXPECT_EQ(to_string(Verdict::InfiniteEscape), "InfiniteEscape");
  EXPECT_EQ(to_string(Verdict::InfiniteDenominator), "InfiniteDenominator");
}
