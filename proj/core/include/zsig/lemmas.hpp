#pragma once

#include "zsig/orbit.hpp"
#include "zsig/poly.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace zsig {

inline constexpr double kLogTolerance = 1e-9;

/// Outcome of checking one inequality family over every applicable orbit entry.
struct LemmaCheck {
  bool ok = true;
  std::size_t checked = 0;  ///< number of individual inequalities evaluated
  std::string detail;       ///< first failure, if any

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

/// a <= b up to relative tolerance (with a 1e-12 absolute floor for values near 0).
bool leq_tol(double a, double b, double rel = kLogTolerance);

/// For every entry k: ln M_k <= d^(k-1) ln M_1 and
/// ln |z_k| <= d^(k-1) ln(2 |u_d| max(|c|, 4 L_g)).
LemmaCheck check_upper_bounds(const OrbitRecord& orbit, double rel = kLogTolerance);

/// Exact: p in I(M_k) implies p in I(M_{k+1}) and val_p(M_{k+1}) = d val_p(M_k) - val_p(u_d).
/// Also cross-checks the stored den_valuations against a fresh computation.
LemmaCheck check_valuation_recursion(const OrbitRecord& orbit);

/// d >= 3: ln M_k >= (d^(k-j) / 3) ln hat(M_j) for all 1 <= j <= k. Skipped (checked = 0) for d = 2.
LemmaCheck check_denominator_lower_bound(const OrbitRecord& orbit, double rel = kLogTolerance);

/// If the orbit escapes at n', then ln |z_k| >= d^(k-n'-1) ln |z_{n'+1} / 2| for k > n'.
LemmaCheck check_escape_growth(const OrbitRecord& orbit, double rel = kLogTolerance);

/// Monomial g = u_d x^d with 0 < |c| < 1/(4|u_d|). When u_d c^(d-1) > 0 the orbit grows:
///   |c| <= |z_k| <= (|u_d|+1)^((d^(k-1)-1)/(d-1)) |c|;
/// otherwise it stays in
///   |c| (1 - |u_d| |c|^(d-1)) <= |z_k| <= |c|.
/// Not applicable (checked = 0) outside that region.
LemmaCheck check_monomial_sandwich(const OrbitRecord& orbit, double rel = kLogTolerance);
bool monomial_sandwich_applies(const X2DivisiblePoly& g, const Rational& c);

/// sum_{p | n} lnA[n/p] <= d^(3n/5) * ln_base, where lnA[k] = ln |A_k| (0-based in k).
bool cross_bound_holds(std::span<const double> lnA, unsigned d, double ln_base, std::uint64_t n,
                       double rel = kLogTolerance);
/// ln(2 |u_d|^2 hat(B_0) max(|c|, 4 L_g)).
double cross_bound_log_base(const X2DivisiblePoly& g, const Rational& c);
/// Evaluates the cross bound for every n >= 30 whose A_{n/p} are all in the orbit.
LemmaCheck check_cross_bound(const OrbitRecord& orbit, double rel = kLogTolerance);

struct ConjugationCheck {
  std::size_t horizon = 0;
  bool identity_holds = true;  ///< f_c^n(u) - u == t h_{c'}^n(0) for n <= horizon
  std::size_t source_zset_size = 0;
  std::size_t target_zset_size = 0;
  unsigned bound = 0;
  bool within_bound() const {
    const auto diff = source_zset_size > target_zset_size ? source_zset_size - target_zset_size
                                                          : target_zset_size - source_zset_size;
    return diff <= bound;
  }
};

/// Compares the Zsigmondy sets of {f_c^n(u) - u} and {h_{c'}^n(0)} within the horizon.
/// Throws std::domain_error when the orbit of the target is finite.
ConjugationCheck check_conjugation_distortion(const NormalizationCertificate& cert, const Rational& c,
                                              std::size_t horizon, std::size_t bit_cap = kDefaultBitCap);

/// |a| <= |u_d * hat(a)|.
bool hat_bound_holds(const Integer& a, const Integer& ud);

} // namespace zsig
