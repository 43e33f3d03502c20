#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zsig {

using Integer = mpz_class;

/// Exact rational in lowest terms with a positive denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}
  explicit Rational(const Integer& v) : q_(v) {}
  /// Throws std::invalid_argument when den == 0.
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  /// Any gmpxx expression (integer or rational valued).
  template <class T, class U>
  explicit Rational(const __gmp_expr<T, U>& e) : q_(e) { q_.canonicalize(); }

  /// Skips the gcd: num and den must already be coprime with den > 0.
  static Rational from_reduced(const Integer& num, const Integer& den) {
    Rational r;
    r.q_.get_num() = num;
    r.q_.get_den() = den;
    return r;
  }

  /// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpz_class& num_ref() const { return q_.get_num(); }
  const mpz_class& den_ref() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const { return Rational(::abs(q_)); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(unsigned long e) const;
  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Natural log of |x| computed from the mantissa/exponent split, so it stays
/// finite for integers far beyond double range. ln 0 is -inf.
double ln_abs(const Integer& x);
double ln_abs(const Rational& x);

std::size_t bit_length(const Integer& x);

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept;
};

} // namespace zsig
