#include "zsig/lemmas.hpp"
#include "zsig/orbit.hpp"
#include "zsig/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zsig;

namespace {

RatPolynomial P(const char* s) { return RatPolynomial::parse(s); }
X2DivisiblePoly G(const char* s) { return X2DivisiblePoly::parse(s); }

} // namespace

TEST(RatPolynomial, ParsesCommonForms) {
  EXPECT_EQ(P("x^3 + 3*x^2").coeffs(), (std::vector<Rational>{0, 0, 3, 1}));
  EXPECT_EQ(P("2x^3+x^2"), RatPolynomial::parse_coeffs("0,0,1,2"));
  EXPECT_EQ(P("1/2*x^4 - x").coeff(4), Rational(1, 2));
  EXPECT_EQ(P("(1/2)*x").coeff(1), Rational(1, 2));
  EXPECT_EQ(P("x^2 + x^2").coeff(2), Rational(2));
  EXPECT_EQ(P("-x^3 - 3*x + 7").str(), "-x^3 - 3*x + 7");
  EXPECT_TRUE(P("x - x").is_zero());
}

TEST(RatPolynomial, RejectsGarbage) {
  for (const char* bad : {"", "x^", "x^-1", "3*y", "x^2 +", "x^^2", "1/0*x"})
    EXPECT_THROW(P(bad), std::invalid_argument) << bad;
  EXPECT_THROW(RatPolynomial::parse_coeffs("0,,1"), std::invalid_argument);
}

TEST(RatPolynomial, EvaluationShiftScale) {
  const auto f = P("x^3 - 3*x");
  EXPECT_EQ(f(Rational(2)), Rational(2));
  EXPECT_EQ(f.derivative(), P("3*x^2 - 3"));
  EXPECT_EQ(f.taylor_shift(Rational(1)), P("x^3 + 3*x^2 - 2"));
  EXPECT_EQ(f.scale_argument(Rational(2)), P("8*x^3 - 6*x"));
}

TEST(X2Divisible, ValidatesShape) {
  EXPECT_THROW(G("x^3 + x"), std::invalid_argument);
  EXPECT_THROW(G("x^3 + 1"), std::invalid_argument);
  EXPECT_THROW(G("1/2*x^3"), std::invalid_argument);
  EXPECT_THROW(G("x"), std::invalid_argument);
  EXPECT_EQ(G("x^3+x^2").degree(), 3u);
  EXPECT_TRUE(G("-5*x^4").is_monomial());
  EXPECT_FALSE(G("x^4 + x^2").is_monomial());
}

TEST(Length, Examples) {
  EXPECT_EQ(length(G("2*x^3 + 4*x^2")), Rational(3));
  EXPECT_EQ(length(G("x^3 + x^2")), Rational(2));
  EXPECT_EQ(length(G("2*x^4 + 6*x^3 - 4*x^2")), Rational(6));
  EXPECT_EQ(length(G("7*x^5")), Rational(1));
}

TEST(Length, SignFlipInvariance) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int i = 0; i < 200; ++i) {
    std::vector<Integer> c(6, 0), neg(6, 0);
    for (int k = 2; k <= 5; ++k) c[k] = coef(rng);
    if (c[5] == 0) c[5] = 1;
    for (int k = 0; k <= 5; ++k) neg[k] = -c[k];
    EXPECT_EQ(length(X2DivisiblePoly(c)), length(X2DivisiblePoly(neg)));
  }
}

TEST(CriticalPoints, Examples) {
  EXPECT_EQ(critical_points_rational(P("x^3 - 3*x")), (std::vector<Rational>{-1, 1}));
  EXPECT_EQ(critical_points_rational(P("x^2")), (std::vector<Rational>{0}));
  EXPECT_TRUE(critical_points_rational(P("x^3 + x")).empty());
  EXPECT_EQ(critical_points_rational(P("2*x^3 - 3*x^2")), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(critical_points_rational(P("x^2 + x")), (std::vector<Rational>{Rational(-1, 2)}));
  EXPECT_TRUE(critical_points_rational(P("3*x + 1")).empty());
}

TEST(ShiftToOrigin, Examples) {
  const auto a = shift_to_origin(P("x^3 - 3*x"), Rational(1));
  EXPECT_EQ(a.g0, P("x^3 + 3*x^2"));
  EXPECT_EQ(a.shift_constant, Rational(-3));
  const auto b = shift_to_origin(P("x^2"), Rational(0));
  EXPECT_EQ(b.g0, P("x^2"));
  EXPECT_EQ(b.shift_constant, Rational(0));
  const auto c = shift_to_origin(P("x^3"), Rational(0));
  EXPECT_EQ(c.g0, P("x^3"));
  EXPECT_THROW(shift_to_origin(P("x^3 - 3*x"), Rational(2)), std::invalid_argument);
}

TEST(ScaleToInteger, Examples) {
  const auto a = scale_to_integer(P("x^3 + 1/2*x^2"));
  EXPECT_EQ(a.h, G("4*x^3 + x^2"));
  EXPECT_EQ(a.t, Rational(2));
  const auto b = scale_to_integer(P("x^3 + 3*x^2"));
  EXPECT_EQ(b.h, G("x^3 + 3*x^2"));
  EXPECT_EQ(b.t, Rational(1));
  const auto c = scale_to_integer(P("1/3*x^3"));
  EXPECT_EQ(c.h, G("3*x^3"));
  EXPECT_EQ(c.t, Rational(3));
  const auto q = scale_to_integer(P("5/7*x^2"));
  EXPECT_EQ(q.h, G("x^2"));
  EXPECT_EQ(q.t, Rational(7, 5));
}

TEST(Normalize, Examples) {
  const auto a = normalize_to_x2_divisible(P("x^3 - 3*x"), Rational(1));
  EXPECT_EQ(a.target, G("x^3 + 3*x^2"));
  EXPECT_EQ(a.t, Rational(1));
  EXPECT_EQ(a.map_parameter(Rational(5)), Rational(2));
  EXPECT_EQ(a.zsigmondy_distortion_bound, 0u);
  EXPECT_FALSE(a.krieger_regime);

  const auto b = normalize_to_x2_divisible(P("x^2"), Rational(0));
  EXPECT_EQ(b.target, G("x^2"));
  EXPECT_EQ(b.t, Rational(1));
  EXPECT_EQ(b.zsigmondy_distortion_bound, 0u);
  EXPECT_TRUE(b.krieger_regime);

  const auto c = normalize_to_x2_divisible(P("1/2*x^4"), Rational(0));
  EXPECT_EQ(c.t, Rational(2));
  EXPECT_EQ(c.target, G("4*x^4"));
  EXPECT_EQ(c.zsigmondy_distortion_bound, 1u);
  EXPECT_TRUE(c.verify());
}

TEST(Normalize, ConjugacyIdentityOnRandomParameters) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  const std::pair<const char*, const char*> cases[] = {
      {"x^3 - 3*x", "1"}, {"x^3 - 3*x", "-1"}, {"1/3*x^3 - x", "-1"}, {"x^2 + x", "-1/2"}, {"x^4 - 2*x^2", "-1"}};
  for (const auto& [fs, us] : cases) {
    const auto f = P(fs);
    const auto u = Rational::parse(us);
    const auto nc = normalize_to_x2_divisible(f, u);
    for (int i = 0; i < 20; ++i) {
      const Rational c(num(rng), den(rng));
      const auto offsets = critical_orbit_offsets(f, u, c, 6);
      const auto orbit = iterate(nc.target, nc.map_parameter(c), 6);
      ASSERT_EQ(orbit.size(), 6u);
      for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(offsets[n - 1], nc.t * orbit.entry(n).value()) << fs << ' ' << c;
    }
  }
}

TEST(Normalize, DistortionWithinBound) {
  const auto nc = normalize_to_x2_divisible(P("1/3*x^3 - x"), Rational(1));
  EXPECT_EQ(nc.t, Rational(3));
  EXPECT_EQ(nc.zsigmondy_distortion_bound, 1u);
  std::size_t checked = 0;
  for (long a = -12; a <= 12; ++a)
    for (long b = 1; b <= 4; ++b) {
      const Rational c(a, b);
      if (!decide_membership(nc.target, nc.map_parameter(c)).infinite()) continue;
      const auto cc = check_conjugation_distortion(nc, c, 8);
      EXPECT_TRUE(cc.identity_holds);
      EXPECT_TRUE(cc.within_bound()) << c << ' ' << cc.source_zset_size << ' ' << cc.target_zset_size;
      ++checked;
    }
  EXPECT_GT(checked, 50u);
}

TEST(Normalize, RejectsNonCriticalPoint) {
  EXPECT_THROW(normalize_to_x2_divisible(P("x^3 - 3*x"), Rational(0)), std::invalid_argument);
  EXPECT_THROW(normalize_to_x2_divisible(P("x + 1"), Rational(0)), std::invalid_argument);
}
