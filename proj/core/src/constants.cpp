#include "zsig/constants.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zsig {

namespace {

Integer pow_ui(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = 1 << 16;

// Closed interval [lo, hi] with outward rounding on every operation.
class Interval {
public:
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }
  Interval(const Interval& o) : Interval(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval& operator=(const Interval&) = delete;
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval of(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.raw().get_mpq_t(), MPFR_RNDU);
    return r;
  }
  static Interval of(const Integer& z, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
  }

  /// Requires lo > 0.
  Interval log() const {
    Interval r(prec());
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
  }
  /// Requires lo >= 0.
  Interval root(unsigned long k) const {
    Interval r(prec());
    mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
  }
  Interval operator-(const Interval& o) const {
    Interval r(prec());
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
  }
  Interval operator*(const Interval& o) const {
    Interval r(prec());
    mpfr_t t;
    mpfr_init2(t, prec());
    bool first = true;
    for (auto a : {lo_, hi_})
      for (auto b : {o.lo_, o.hi_}) {
        mpfr_mul(t, a, b, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a, b, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }
  Interval operator/(const Interval& o) const {
    if (mpfr_sgn(o.lo_) <= 0) throw std::logic_error("interval division needs a positive divisor");
    Interval r(prec());
    mpfr_t t;
    mpfr_init2(t, prec());
    bool first = true;
    for (auto a : {lo_, hi_})
      for (auto b : {o.lo_, o.hi_}) {
        mpfr_div(t, a, b, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a, b, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }

  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool nonpositive() const { return mpfr_sgn(hi_) <= 0; }
  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
  /// ceil of the interval if both ends share it (and neither end is an integer).
  std::optional<long> common_ceil() const {
    if (mpfr_integer_p(lo_) || mpfr_integer_p(hi_)) return std::nullopt;
    mpfr_t a, b;
    mpfr_init2(a, prec());
    mpfr_init2(b, prec());
    mpfr_ceil(a, lo_);
    mpfr_ceil(b, hi_);
    std::optional<long> out;
    if (mpfr_equal_p(a, b)) out = mpfr_get_si(a, MPFR_RNDN);
    mpfr_clear(a);
    mpfr_clear(b);
    return out;
  }

private:
  mpfr_t lo_, hi_;
};

// Sign of (d^(2n/5) - 3) ln beta - 3 ln alpha at a given precision; nullopt if undecided.
std::optional<bool> threshold_holds_at(unsigned long d, long n, const Rational& alpha, const Rational& beta,
                                       mpfr_prec_t prec) {
  const Interval y = Interval::of(pow_ui(d, 2 * static_cast<unsigned long>(n)), prec).root(5);
  const Interval three = Interval::of(Integer(3), prec);
  const Interval f = (y - three) * Interval::of(beta, prec).log() - three * Interval::of(alpha, prec).log();
  if (f.positive()) return true;
  if (f.nonpositive()) return false;
  return std::nullopt;
}

} // namespace

Integer mahler_rational(const Rational& x) { return std::max<Integer>(abs(x.num()), x.den()); }

double evertse_W(const Integer& r, double delta) {
  if (r < 1) throw std::invalid_argument("evertse_W: r must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("evertse_W: delta must lie in (0, 1)");
  const double l = ln_abs(Integer(4 * r));
  return 2e7 * std::pow(delta, -4.0) * l * std::log(l);
}

long bound_N0(unsigned long d) {
  if (d < 2) throw std::invalid_argument("bound_N0: d must be >= 2");
  // Float guess, then exact adjustment to the least k with d^k >= 9 (d-1)^k.
  long k = static_cast<long>(std::ceil(2.0 * std::log(3.0) / std::log(static_cast<double>(d) / (d - 1.0))));
  k = std::max(k, 1L);
  const auto ok = [d](long e) { return pow_ui(d, e) >= 9 * pow_ui(d - 1, e); };
  while (!ok(k)) ++k;
  while (k > 1 && ok(k - 1)) --k;
  return k + 1;
}

bool n0_inequality_holds(unsigned long d, long n0) {
  if (n0 < 1) return false;
  const auto e = static_cast<unsigned long>(n0 - 1);
  return 9 * pow_ui(d - 1, e) <= pow_ui(d, e);
}

long bound_N1(unsigned long d) {
  if (d < 2) throw std::invalid_argument("bound_N1: d must be >= 2");
  long k = 0;
  while (pow_ui(d, k) < 120) ++k;
  return k + bound_N0(d);
}

long bound_N2(unsigned long d, const Integer& ud, const Integer& D) {
  if (d < 2) throw std::invalid_argument("bound_N2: d must be >= 2");
  if (ud == 0 || D < 1) throw std::invalid_argument("bound_N2: need u_d != 0 and D >= 1");
  const Integer x = ud * ud * D + 1;
  const long base = 2 * bound_N0(d);
  // Exact branch when log_2 x is an integer j: least k with d^k >= j^3.
  if (mpz_popcount(x.get_mpz_t()) == 1) {
    const unsigned long j = mpz_sizeinbase(x.get_mpz_t(), 2) - 1;
    const Integer j3 = Integer(j) * j * j;
    long k = 0;
    while (pow_ui(d, k) < j3) ++k;
    return k + base;
  }
  // Otherwise 3 log_d log_2 x is transcendental, so its ceiling is settled by a
  // narrow enough enclosure.
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    const Interval lx = Interval::of(x, prec).log() / Interval::of(Integer(2), prec).log();
    const Interval y = Interval::of(Integer(3), prec) * lx.log() / Interval::of(Integer(d), prec).log();
    if (const auto k = y.common_ceil()) return *k + base;
  }
  throw std::runtime_error("bound_N2: could not resolve ceiling");
}

Integer root_bound_D(const X2DivisiblePoly& g, const Rational& L, unsigned N) {
  if (L.sign() <= 0) throw std::invalid_argument("root_bound_D: L must be positive");
  if (N < 1) throw std::invalid_argument("root_bound_D: N must be >= 1");
  const Rational lead(abs(g.leading()));
  Rational middle;
  for (unsigned i = 2; i < g.degree(); ++i) middle += Rational(abs(g.u(i)));
  middle /= lead;
  Rational radius;  // bound on the target value; 0 for g_c^N(x) = 0
  for (unsigned k = 0; k < N; ++k) radius = std::max(Rational(1), middle + (L + radius) / lead);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), radius.num_ref().get_mpz_t(), radius.den_ref().get_mpz_t());
  return fl + 1;
}

long threshold_solver(unsigned long d, const Rational& alpha, const Rational& beta) {
  if (d < 2) throw std::invalid_argument("threshold_solver: d must be >= 2");
  if (beta <= Rational(1)) throw std::invalid_argument("threshold_solver: beta must exceed 1");
  if (alpha < Rational(1)) throw std::invalid_argument("threshold_solver: alpha must be >= 1");
  // After dividing by d^(3n/5) > 0 the condition reads (d^(2n/5) - 3) ln beta > 3 ln alpha,
  // which is monotone in n.
  for (long n = 30; n < 1'000'000; ++n) {
    for (mpfr_prec_t prec = kStartPrecision;; prec *= 2) {
      if (prec > kMaxPrecision) throw std::runtime_error("threshold_solver: undecidable at n = " + std::to_string(n));
      if (const auto r = threshold_holds_at(d, n, alpha, beta, prec)) {
        if (*r) return n;
        break;
      }
    }
  }
  throw std::runtime_error("threshold_solver: no solution below 10^6");
}

BoundReport bound_report(const X2DivisiblePoly& g, std::optional<Rational> L, std::optional<unsigned> N) {
  BoundReport r;
  r.d = g.degree();
  r.ud = g.leading();
  r.length = length(g);
  r.N0 = bound_N0(r.d);
  r.N1 = bound_N1(r.d);
  r.D_radius = L.value_or(Rational(4) * r.length);
  r.D_depth = N.value_or(static_cast<unsigned>(r.N0));
  r.D = root_bound_D(g, r.D_radius, r.D_depth);
  r.N2 = bound_N2(r.d, r.ud, r.D);
  r.W_value = evertse_W(pow_ui(r.d, static_cast<unsigned long>(r.N0)), 0.1);
  const Integer ud_abs = abs(r.ud);
  // Worst case of the escape region: |c * hat(B_0)| >= 4 L_g, and the threshold is non-increasing in beta.
  r.region_thresholds["escape"] = threshold_solver(r.d, Rational(2 * ud_abs * ud_abs), Rational(4) * r.length);
  if (g.is_monomial())
    r.region_thresholds["monomial"] = threshold_solver(r.d, Rational((ud_abs + 1) * ud_abs), Rational(2));
  return r;
}

} // namespace zsig
