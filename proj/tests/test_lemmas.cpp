#include "zsig/lemmas.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace zsig;

namespace {

X2DivisiblePoly G(const char* s) { return X2DivisiblePoly::parse(s); }

X2DivisiblePoly random_poly(std::mt19937_64& rng, unsigned d, long h) {
  std::uniform_int_distribution<long> coef(-h, h);
  std::vector<Integer> c(d + 1, 0);
  for (unsigned i = 2; i <= d; ++i) c[i] = coef(rng);
  if (c[d] == 0) c[d] = h;
  return X2DivisiblePoly(c);
}

} // namespace

TEST(LeqTol, RelativeAndAbsoluteSlack) {
  EXPECT_TRUE(leq_tol(1.0 + 1e-10, 1.0));
  EXPECT_FALSE(leq_tol(1.0 + 1e-8, 1.0));
  EXPECT_TRUE(leq_tol(1e-13, 0.0));
  EXPECT_FALSE(leq_tol(2.0, 1.0));
}

TEST(OrbitBounds, HoldOnRandomOrbits) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long> deg(3, 5), num(-20, 20), den(1, 20);
  for (int i = 0; i < 80; ++i) {
    const auto g = random_poly(rng, static_cast<unsigned>(deg(rng)), 9);
    const Rational c(num(rng), den(rng));
    const auto o = iterate(g, c, 10, 300'000);
    for (const auto& lc : {check_upper_bounds(o), check_valuation_recursion(o), check_denominator_lower_bound(o),
                           check_escape_growth(o)})
      EXPECT_TRUE(lc.ok) << g.str() << " c = " << c << ": " << lc.detail;
  }
}

TEST(OrbitBounds, DenominatorLowerBoundSkipsQuadratics) {
  const auto o = iterate(G("x^2"), Rational(1, 3), 6);
  EXPECT_EQ(check_denominator_lower_bound(o).checked, 0u);
}

TEST(OrbitBounds, ValuationRecursionOnKnownOrbit) {
  // 2x^3, c = 1/4: val_2(M_1) = 2 > 1, then 3*2 - 1 = 5, 3*5 - 1 = 14.
  const auto o = iterate(G("2*x^3"), Rational(1, 4), 3);
  EXPECT_EQ(o.entry(2).den_valuations.at(Integer(2)), 5u);
  EXPECT_EQ(o.entry(3).den_valuations.at(Integer(2)), 14u);
  const auto lc = check_valuation_recursion(o);
  EXPECT_TRUE(lc.ok);
  EXPECT_EQ(lc.checked, 2u);
}

TEST(OrbitBounds, EscapeGrowthCountsFromEscapeIndex) {
  const auto o = iterate(G("x^3+x^2"), Rational(1), 5);
  const auto lc = check_escape_growth(o);
  EXPECT_TRUE(lc.ok);
  EXPECT_EQ(lc.checked, 3u);  // entries 3, 4, 5
}

TEST(MonomialSandwich, Region) {
  EXPECT_TRUE(monomial_sandwich_applies(G("x^3"), Rational(1, 5)));
  EXPECT_FALSE(monomial_sandwich_applies(G("x^3"), Rational(1, 4)));
  EXPECT_FALSE(monomial_sandwich_applies(G("x^3"), Rational(0)));
  EXPECT_FALSE(monomial_sandwich_applies(G("x^3 + x^2"), Rational(1, 9)));
  EXPECT_TRUE(monomial_sandwich_applies(G("-2*x^4"), Rational(-1, 9)));
}

TEST(MonomialSandwich, GrowthAndShrinkForms) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const unsigned d = 2 + i % 4;
    const long ud = (i % 5) - 2 == 0 ? 3 : (i % 5) - 2;
    std::vector<Integer> c(d + 1, 0);
    c[d] = ud;
    const X2DivisiblePoly g(c);
    const long b = 4 * std::labs(ud) + 1 + i % 7;
    for (const long a : {1L, -1L}) {
      const auto lc = check_monomial_sandwich(iterate(g, Rational(a, b), 9, 300'000));
      EXPECT_TRUE(lc.ok) << g.str() << " c = " << a << "/" << b << ": " << lc.detail;
      EXPECT_GT(lc.checked, 0u);
    }
  }
}

TEST(MonomialSandwich, NegativeLeadingCoefficientShrinks) {
  // -x^3 + 1/8: |z_2| = |1/8 - 1/512| < |c|, so the orbit shrinks and only the
  // shrink form applies.
  const auto o = iterate(G("-x^3"), Rational(1, 8), 2);
  EXPECT_LT(o.entry(2).value().abs(), Rational(1, 8));
  EXPECT_TRUE(check_monomial_sandwich(iterate(G("-x^3"), Rational(1, 8), 8)).ok);
}

TEST(CrossBound, QuadraticOrbitsReachThirty) {
  for (const char* cs : {"1/2", "1/3", "1", "-3/2"}) {
    const auto o = iterate(G("x^2"), Rational::parse(cs), 40, 2'000'000);
    const auto lc = check_cross_bound(o);
    EXPECT_TRUE(lc.ok) << cs << ": " << lc.detail;
    EXPECT_GT(lc.checked, 0u) << cs;
  }
}

TEST(CrossBound, SyntheticSequences) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (unsigned d = 2; d <= 10; ++d) {
    const auto g = random_poly(rng, d, 9);
    const Rational c(7, 6);
    const double top = ln_abs(Rational(2) * Rational(abs(g.leading()) * c.den()) * std::max(c.abs(), Rational(4) * length(g)));
    const std::uint64_t n_max = static_cast<std::uint64_t>(250.0 / std::log10(static_cast<double>(d)));
    std::vector<double> extreme(n_max / 2 + 1), random(n_max / 2 + 1);
    for (std::size_t k = 0; k < extreme.size(); ++k) {
      extreme[k] = std::pow(static_cast<double>(d), static_cast<double>(k)) * top;
      random[k] = frac(rng) * extreme[k];
    }
    const double base = cross_bound_log_base(g, c);
    for (std::uint64_t n = 30; n <= n_max; ++n) {
      EXPECT_TRUE(cross_bound_holds(extreme, d, base, n)) << d << ' ' << n;
      EXPECT_TRUE(cross_bound_holds(random, d, base, n)) << d << ' ' << n;
    }
  }
}

TEST(CrossBound, DetectsViolation) {
  // Values far above the orbit upper bound must trip the check.
  std::vector<double> huge(40, 1e300);
  EXPECT_FALSE(cross_bound_holds(huge, 2, 1.0, 30));
}

TEST(HatBound, Examples) {
  EXPECT_TRUE(hat_bound_holds(12, 2));
  EXPECT_TRUE(hat_bound_holds(2, 2));
  EXPECT_TRUE(hat_bound_holds(-1000, 10));
}
