#include "zsig/zsigmondy.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zsig;

namespace {

X2DivisiblePoly G(const char* s) { return X2DivisiblePoly::parse(s); }

std::vector<Integer> nums_of(const OrbitRecord& o) {
  std::vector<Integer> out;
  for (const auto& e : o.entries()) out.push_back(e.num);
  return out;
}

} // namespace

TEST(PrimitivePrime, Examples) {
  const auto quad = iterate(G("x^2"), Rational(1), 5);  // 1, 2, 5, 26, 677
  const auto v4 = primitive_prime_exists(quad, 4);
  EXPECT_TRUE(v4.has_primitive);
  EXPECT_EQ(v4.witness_prime, Integer(13));
  EXPECT_FALSE(primitive_prime_exists(quad, 1).has_primitive);
  EXPECT_FALSE(primitive_prime_exists(quad, 1).witness_prime);

  const auto cubic = iterate(G("x^3+x^2"), Rational(1), 4);
  const auto c4 = primitive_prime_exists(cubic, 4);
  EXPECT_TRUE(c4.has_primitive);
  EXPECT_EQ(c4.witness_prime, Integer(17341));
}

TEST(PrimitivePrime, IndexOutOfRange) {
  const auto o = iterate(G("x^2"), Rational(1), 3);
  EXPECT_THROW(primitive_prime_exists(o, 0), std::out_of_range);
  EXPECT_THROW(primitive_prime_exists(o, 4), std::out_of_range);
}

TEST(ZsigmondySet, Examples) {
  EXPECT_EQ(zsigmondy_set(iterate(G("x^2"), Rational(1), 5), 5).zset, (std::vector<std::size_t>{1}));
  EXPECT_EQ(zsigmondy_set(iterate(G("x^3+x^2"), Rational(1), 4), 4).zset, (std::vector<std::size_t>{1}));
}

TEST(ZsigmondySet, UnitOrbitIsEntirelyExceptional) {
  const std::vector<Integer> ones(6, 1);
  EXPECT_EQ(zsigmondy_set(ones, 6).zset, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
  const std::vector<Integer> alternating{1, -1, 1, -1};
  EXPECT_EQ(zsigmondy_set(alternating, 4).zset.size(), 4u);
}

TEST(ZsigmondySet, RefusesZeroTerms) {
  const auto o = iterate(G("x^2"), Rational(-1), 4);  // -1, 0, -1, 0
  EXPECT_THROW(zsigmondy_set(o, 4), std::domain_error);
}

TEST(ZsigmondySet, HorizonClampsToComputedEntries) {
  const auto o = iterate(G("x^3+x^2"), Rational(1, 3), 40, 5000);
  const auto rep = zsigmondy_set(o, 40);
  EXPECT_EQ(rep.horizon, o.size());
}

TEST(ZsigmondySet, AgreesWithDivisibilityOracle) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coef(-4, 4), num(-9, 9), den(1, 6);
  int compared = 0;
  for (int i = 0; i < 150; ++i) {
    std::vector<Integer> c(4, 0);
    c[2] = coef(rng);
    c[3] = coef(rng);
    if (c[3] == 0) c[3] = 1;
    const X2DivisiblePoly g(c);
    const Rational p(num(rng), den(rng));
    if (!decide_membership(g, p).infinite()) continue;
    const auto o = iterate(g, p, 7);
    const auto nums = nums_of(o);
    EXPECT_EQ(zsigmondy_set(o, 7).zset, oracle::zset(nums)) << g.str() << " c = " << p;
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(IdealSet, Examples) {
  EXPECT_EQ(ideal_set(12, 2), (std::vector<Integer>{2, 3}));
  EXPECT_EQ(hat(12, 2), 12);
  EXPECT_TRUE(ideal_set(2, 2).empty());
  EXPECT_EQ(hat(2, 2), 1);
  EXPECT_EQ(ideal_set(8, 2), (std::vector<Integer>{2}));
  EXPECT_EQ(hat(8, 2), 8);
  EXPECT_EQ(hat(-72, 6), 72);  // 2^3 3^2 against 2 3
  EXPECT_EQ(hat(36, 12), 9);   // val_2 equal, val_3 exceeds
  EXPECT_THROW(ideal_set(0, 2), std::domain_error);
}

TEST(IdealSet, HatBound) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> a(1, 1 << 20), u(1, 2000);
  for (int i = 0; i < 500; ++i) {
    const Integer x = a(rng), ud = u(rng);
    EXPECT_LE(abs(x), abs(ud * hat(x, ud)));
  }
}

TEST(RinInequality, Examples) {
  const auto quad = iterate(G("x^2"), Rational(1), 4);
  EXPECT_TRUE(check_rin_inequality(quad, 4).holds);
  EXPECT_FALSE(check_rin_inequality(quad, 1).holds);
  const auto cubic = iterate(G("x^3+x^2"), Rational(1), 2);
  EXPECT_TRUE(check_rin_inequality(cubic, 2).holds);
}

TEST(RinInequality, FlagsZeroNumerator) {
  const std::vector<Integer> nums{-1, 0, -1, 0};
  const auto r = check_rin_inequality(nums, 4);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.zero_numerator);
}

TEST(KriegerDivisibility, Examples) {
  const auto quad = iterate(G("x^2"), Rational(1), 4);
  EXPECT_EQ(check_krieger_divisibility(quad, 1), KriegerResult::Holds);
  EXPECT_EQ(check_krieger_divisibility(quad, 4), KriegerResult::Vacuous);
  const auto cubic = iterate(G("x^3+x^2"), Rational(1), 4);
  EXPECT_EQ(check_krieger_divisibility(cubic, 1), KriegerResult::Holds);
}

TEST(KriegerDivisibility, DetectsFailure) {
  // 4 has no primitive prime after 2, but does not divide N_2 = 2.
  const std::vector<Integer> nums{3, 2, 5, 4};
  EXPECT_EQ(check_krieger_divisibility(nums, 4, false), KriegerResult::Fails);
}

TEST(KriegerDivisibility, ZsetIndicesFailNumeratorInequality) {
  for (const char* gs : {"x^3+x^2", "2*x^3+x^2", "x^2"})
    for (long a = -8; a <= 8; ++a)
      for (long b = 1; b <= 4; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const auto g = G(gs);
        const Rational c(a, b);
        if (!decide_membership(g, c).infinite()) continue;
        const auto rep = zsigmondy_set(iterate(g, c, 7), 7);
        for (const auto& [n, holds] : rep.krieger_checks) {
          EXPECT_TRUE(holds) << gs << " c = " << c << " n = " << n;
          EXPECT_TRUE(std::binary_search(rep.rin_failures.begin(), rep.rin_failures.end(), n));
        }
      }
}
