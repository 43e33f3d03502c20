#pragma once

#include "zsig/poly.hpp"
#include "zsig/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace zsig {

/// Mahler measure of a rational in lowest terms: max(|num|, den).
Integer mahler_rational(const Rational& x);

/// W(r, delta) = 2e7 * delta^-4 * ln(4r) * ln ln(4r). Throws std::invalid_argument
/// unless r >= 1 and 0 < delta < 1.
double evertse_W(const Integer& r, double delta);
inline double evertse_W(unsigned long r, double delta) { return evertse_W(Integer(r), delta); }

/// N0 = ceil(2 ln 3 / ln(d/(d-1))) + 1, evaluated exactly as one more than the
/// least k with d^k >= 9 (d-1)^k.
long bound_N0(unsigned long d);
/// 9 (d-1)^(N0-1) <= d^(N0-1), exactly.
bool n0_inequality_holds(unsigned long d, long n0);
/// N1 = ceil(log_d 120) + N0.
long bound_N1(unsigned long d);
/// N2 = ceil(3 log_d log_2(u_d^2 D + 1)) + 2 N0.
long bound_N2(unsigned long d, const Integer& ud, const Integer& D);

/// Integer D > 1 bounding |root| for every root of g_c^N(x) = 0 with |c| <= L.
/// Iterates the root bound max(1, sum_{i<d} |a_i| / |a_d|) through the N
/// preimage levels; valid, not minimal.
Integer root_bound_D(const X2DivisiblePoly& g, const Rational& L, unsigned N);

/// Least n >= 30 with (d^n/3 - d^(3n/5)) ln beta - d^(3n/5) ln alpha > 0.
/// Decided with outward-rounded interval arithmetic, so the boundary n is exact.
/// Throws std::invalid_argument for beta <= 1 or alpha < 1.
long threshold_solver(unsigned long d, const Rational& alpha, const Rational& beta);

struct BoundReport {
  unsigned d = 0;
  Integer ud;
  Rational length;
  long N0 = 0;
  long N1 = 0;
  long N2 = 0;
  Integer D;
  Rational D_radius;   ///< L used for D
  unsigned D_depth = 0;  ///< N used for D
  double W_value = 0;  ///< W(d^N0, 1/10)
  std::map<std::string, long> region_thresholds;
};

/// L defaults to 4 L_g and N to N0, the values the lower-bound argument uses.
BoundReport bound_report(const X2DivisiblePoly& g, std::optional<Rational> L = std::nullopt,
                         std::optional<unsigned> N = std::nullopt);

} // namespace zsig
