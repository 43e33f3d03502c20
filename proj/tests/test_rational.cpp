#include "zsig/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using zsig::Integer;
using zsig::Rational;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse(" 4 / -8 "), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("+5"), Rational(5));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.5", "--1", "2/3/4"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, LowestTermsPositiveDenominator) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational().den(), 1);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::invalid_argument);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 2), b(1, 3);
  EXPECT_EQ(a + b, Rational(5, 6));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 6));
  EXPECT_EQ(a / b, Rational(3, 2));
  EXPECT_EQ(-a, Rational(-1, 2));
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(Rational(-7, 8).abs(), Rational(7, 8));
}

TEST(Rational, LogOfHugeValuesStaysFinite) {
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 3, 200000);
  const double l = zsig::ln_abs(big);
  EXPECT_NEAR(l / (200000 * std::log(3.0)), 1.0, 1e-12);
  EXPECT_EQ(zsig::ln_abs(Integer(1)), 0.0);
  EXPECT_TRUE(std::isinf(zsig::ln_abs(Integer(0))));
  EXPECT_NEAR(zsig::ln_abs(Rational(1, 8)), -std::log(8.0), 1e-15);
}

TEST(Rational, FromReducedSkipsNothingObservable) {
  EXPECT_EQ(Rational::from_reduced(Integer(3), Integer(4)), Rational(3, 4));
}

TEST(Rational, Streams) {
  std::ostringstream os;
  os << Rational(-5, 10);
  EXPECT_EQ(os.str(), "-1/2");
  EXPECT_EQ(zsig::bit_length(Integer(255)), 8u);
}
