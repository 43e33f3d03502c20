#pragma once

#include "zsig/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zsig {

/// Dense polynomial over Q; coeffs[i] is the coefficient of x^i. Trailing zeros
/// are trimmed, so degree() is the index of the leading coefficient (0 for the
/// zero polynomial).
class RatPolynomial {
public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);

  /// Parses "x^3 + 3*x^2", "1/2*x^4 - x", "2x^3+x^2".
  static RatPolynomial parse(std::string_view text);
  /// Parses a comma-separated coefficient list "0,0,3,1" (index = power).
  static RatPolynomial parse_coeffs(std::string_view text);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  RatPolynomial derivative() const;
  /// p(x + a)
  RatPolynomial taylor_shift(const Rational& a) const;
  /// p(s x)
  RatPolynomial scale_argument(const Rational& s) const;

  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial operator*(const Rational& s) const;
  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

  std::string str() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// g(x) = u_d x^d + ... + u_2 x^2 with integer coefficients, d >= 2, u_d != 0.
class X2DivisiblePoly {
public:
  /// coeffs indexed by power; entries 0 and 1 must be zero. Throws std::invalid_argument.
  explicit X2DivisiblePoly(std::vector<Integer> coeffs);
  /// Throws std::invalid_argument unless p is x^2-divisible with integer coefficients.
  static X2DivisiblePoly from(const RatPolynomial& p);
  static X2DivisiblePoly parse(std::string_view text) { return from(RatPolynomial::parse(text)); }

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Integer& u(std::size_t i) const { return coeffs_.at(i); }
  const Integer& leading() const { return coeffs_.back(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_monomial() const;

  Rational operator()(const Rational& x) const;
  RatPolynomial to_rational() const;
  std::string str() const { return to_rational().str(); }

  friend bool operator==(const X2DivisiblePoly&, const X2DivisiblePoly&) = default;

private:
  std::vector<Integer> coeffs_;
};

/// L_g = 1 + sum_{i=2}^{d-1} |u_i| / |u_d|.
Rational length(const X2DivisiblePoly& g);

/// Rational roots of f', sorted and without duplicates. Empty when deg f < 2.
std::vector<Rational> critical_points_rational(const RatPolynomial& f);

struct ShiftResult {
  RatPolynomial g0;         ///< f(x + u) - f(u); no constant or linear term
  Rational shift_constant;  ///< f(u) - u; parameters map as c' = c + shift_constant
};

/// Throws std::invalid_argument when f'(u) != 0.
ShiftResult shift_to_origin(const RatPolynomial& f, const Rational& u);

struct ScaleResult {
  X2DivisiblePoly h;
  Rational t;  ///< h(x) = (1/t) g0(t x); parameters map as c -> c / t
};

/// For degree >= 3, t is the least positive integer making every u_i t^(i-1)
/// integral. Degree 2 uses t = 1/u_2 so that h = x^2.
ScaleResult scale_to_integer(const RatPolynomial& g0);

struct NormalizationCertificate {
  RatPolynomial source;
  Rational critical_point;
  Rational shift_constant;
  Rational t;
  X2DivisiblePoly target;
  unsigned zsigmondy_distortion_bound = 0;  ///< omega(num t) + omega(den t)
  bool krieger_regime = false;              ///< degree 2, target is x^2

  /// c' = (c + shift_constant) / t, the parameter of the target family.
  Rational map_parameter(const Rational& c) const { return (c + shift_constant) / t; }
  std::string param_map() const;
  /// (1/t)(f(t x + u) - f(u)) == target(x) at deg + 1 sample points.
  bool verify() const;
};

NormalizationCertificate normalize_to_x2_divisible(const RatPolynomial& f, const Rational& u);

/// f_c^n(u) - u for n = 1..horizon.
std::vector<Rational> critical_orbit_offsets(const RatPolynomial& f, const Rational& u, const Rational& c,
                                             unsigned horizon);

} // namespace zsig
