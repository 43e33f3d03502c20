#include "zsig/lemmas.hpp"

#include "zsig/zsigmondy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zsig {

namespace {

unsigned long remove_prime(const Integer& x, const Integer& p) {
  if (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) == 0) return 0;
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

std::string at(std::size_t k, double lhs, double rhs) {
  std::ostringstream os;
  os.precision(17);
  os << "entry " << k << ": " << lhs << " vs " << rhs;
  return os.str();
}

double dpow(unsigned d, double e) { return std::pow(static_cast<double>(d), e); }

std::vector<std::uint64_t> distinct_primes_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

} // namespace

bool leq_tol(double a, double b, double rel) {
  return a <= b + rel * std::max(std::fabs(a), std::fabs(b)) + 1e-12;
}

LemmaCheck check_upper_bounds(const OrbitRecord& orbit, double rel) {
  LemmaCheck out;
  if (orbit.size() == 0) return out;
  const auto& g = orbit.poly();
  const Rational& c = orbit.parameter();
  const unsigned d = g.degree();
  const double ln_m1 = orbit.entry(1).ln_den;
  const double ln_base = ln_abs(Rational(2) * Rational(abs(g.leading())) * std::max(c.abs(), Rational(4) * length(g)));
  for (std::size_t k = 1; k <= orbit.size(); ++k) {
    const auto& e = orbit.entry(k);
    const double scale = dpow(d, static_cast<double>(k - 1));
    ++out.checked;
    if (!leq_tol(e.ln_den, scale * ln_m1, rel)) out.fail("denominator upper bound, " + at(k, e.ln_den, scale * ln_m1));
    if (e.num == 0) continue;
    ++out.checked;
    if (!leq_tol(e.ln_abs_value, scale * ln_base, rel))
      out.fail("value upper bound, " + at(k, e.ln_abs_value, scale * ln_base));
  }
  return out;
}

LemmaCheck check_valuation_recursion(const OrbitRecord& orbit) {
  LemmaCheck out;
  const auto& g = orbit.poly();
  const unsigned long d = g.degree();
  for (const auto& p : orbit.den_support()) {
    const unsigned long vud = remove_prime(g.leading(), p);
    for (std::size_t k = 1; k <= orbit.size(); ++k) {
      const auto& e = orbit.entry(k);
      const unsigned long v = remove_prime(e.den, p);
      const bool in_ideal = v > vud;
      const auto it = e.den_valuations.find(p);
      if (in_ideal != (it != e.den_valuations.end()) || (in_ideal && it->second != v))
        out.fail("stored I(M_" + std::to_string(k) + ") disagrees at p = " + p.get_str());
      if (!in_ideal || k == orbit.size()) continue;
      ++out.checked;
      const unsigned long next = remove_prime(orbit.entry(k + 1).den, p);
      if (next <= vud || next != d * v - vud) {
        std::ostringstream os;
        os << "p = " << p.get_str() << ", entry " << k << ": val " << v << " -> " << next << ", expected "
           << d * v - vud;
        out.fail(os.str());
      }
    }
  }
  return out;
}

LemmaCheck check_denominator_lower_bound(const OrbitRecord& orbit, double rel) {
  LemmaCheck out;
  const auto& g = orbit.poly();
  const unsigned d = g.degree();
  if (d < 3) return out;
  std::vector<double> ln_hat(orbit.size() + 1, 0.0);
  for (std::size_t j = 1; j <= orbit.size(); ++j)
    ln_hat[j] = ln_abs(hat_over(orbit.entry(j).den, g.leading(), orbit.den_support()));
  for (std::size_t k = 1; k <= orbit.size(); ++k)
    for (std::size_t j = 1; j <= k; ++j) {
      ++out.checked;
      const double rhs = dpow(d, static_cast<double>(k - j)) / 3.0 * ln_hat[j];
      if (!leq_tol(rhs, orbit.entry(k).ln_den, rel))
        out.fail("denominator lower bound from entry " + std::to_string(j) + ", " + at(k, orbit.entry(k).ln_den, rhs));
    }
  return out;
}

LemmaCheck check_escape_growth(const OrbitRecord& orbit, double rel) {
  LemmaCheck out;
  const auto esc = escape_check(orbit.poly(), orbit.parameter(), orbit);
  if (!esc) return out;
  const unsigned d = orbit.poly().degree();
  const std::size_t base = *esc + 1;
  const double ln_half = ln_abs(orbit.entry(base).value() / Rational(2));
  for (std::size_t k = base; k <= orbit.size(); ++k) {
    ++out.checked;
    const double rhs = dpow(d, static_cast<double>(k - base)) * ln_half;
    if (!leq_tol(rhs, orbit.entry(k).ln_abs_value, rel)) out.fail("escape growth, " + at(k, orbit.entry(k).ln_abs_value, rhs));
  }
  return out;
}

bool monomial_sandwich_applies(const X2DivisiblePoly& g, const Rational& c) {
  if (!g.is_monomial() || c.is_zero()) return false;
  return c.abs() * Rational(4) * Rational(abs(g.leading())) < Rational(1);
}

LemmaCheck check_monomial_sandwich(const OrbitRecord& orbit, double rel) {
  LemmaCheck out;
  const auto& g = orbit.poly();
  const Rational& c = orbit.parameter();
  if (!monomial_sandwich_applies(g, c)) return out;
  const unsigned d = g.degree();
  const Rational ac = c.abs();
  const Integer ud_abs = abs(g.leading());
  // sign(u_d c^(d-1)) decides whether |z| grows or shrinks along the orbit.
  const int drift = sgn(g.leading()) * ((d - 1) % 2 == 0 ? 1 : c.sign());
  if (drift > 0) {
    const double ln_c = ln_abs(c);
    const double ln_step = std::log1p(ud_abs.get_d());
    for (std::size_t k = 1; k <= orbit.size(); ++k) {
      const auto& e = orbit.entry(k);
      out.checked += 2;
      if (e.value().abs() < ac) out.fail("growth sandwich lower bound at entry " + std::to_string(k));
      const double exponent = (dpow(d, static_cast<double>(k - 1)) - 1.0) / (d - 1.0);
      const double rhs = exponent * ln_step + ln_c;
      if (!leq_tol(e.ln_abs_value, rhs, rel)) out.fail("growth sandwich upper bound, " + at(k, e.ln_abs_value, rhs));
    }
  } else {
    const Rational lower = ac * (Rational(1) - Rational(ud_abs) * ac.pow(d - 1));
    for (std::size_t k = 1; k <= orbit.size(); ++k) {
      const Rational z = orbit.entry(k).value().abs();
      out.checked += 2;
      if (z < lower || z > ac) out.fail("shrink sandwich at entry " + std::to_string(k));
    }
  }
  return out;
}

bool cross_bound_holds(std::span<const double> lnA, unsigned d, double ln_base, std::uint64_t n, double rel) {
  double lhs = 0;
  for (const auto p : distinct_primes_u64(n)) lhs += lnA[n / p];
  return leq_tol(lhs, dpow(d, 0.6 * static_cast<double>(n)) * ln_base, rel);
}

double cross_bound_log_base(const X2DivisiblePoly& g, const Rational& c) {
  const Integer ud_abs = abs(g.leading());
  const Integer b0_hat = c.den() == 1 ? Integer(1) : hat(c.den(), g.leading());
  return ln_abs(Rational(2 * ud_abs * ud_abs * b0_hat) * std::max(c.abs(), Rational(4) * length(g)));
}

LemmaCheck check_cross_bound(const OrbitRecord& orbit, double rel) {
  LemmaCheck out;
  // A_k is entry k + 1, so A_0 .. A_{size-1} are available.
  std::vector<double> lnA;
  for (const auto& e : orbit.entries()) lnA.push_back(e.ln_abs_num);
  if (lnA.size() < 16) return out;
  const double base = cross_bound_log_base(orbit.poly(), orbit.parameter());
  for (std::uint64_t n = 30;; ++n) {
    const auto primes = distinct_primes_u64(n);
    if (n / primes.front() >= lnA.size()) break;
    ++out.checked;
    if (!cross_bound_holds(lnA, orbit.poly().degree(), base, n, rel))
      out.fail("cross bound at n = " + std::to_string(n));
  }
  return out;
}

ConjugationCheck check_conjugation_distortion(const NormalizationCertificate& cert, const Rational& c,
                                              std::size_t horizon, std::size_t bit_cap) {
  const Rational cp = cert.map_parameter(c);
  if (!decide_membership(cert.target, cp).infinite())
    throw std::domain_error("check_conjugation_distortion: orbit is finite for c = " + c.str());
  const auto orbit = iterate(cert.target, cp, horizon, bit_cap);
  ConjugationCheck out;
  out.horizon = orbit.size();
  out.bound = cert.zsigmondy_distortion_bound;
  const auto offsets = critical_orbit_offsets(cert.source, cert.critical_point, c, static_cast<unsigned>(out.horizon));
  for (std::size_t n = 1; n <= out.horizon; ++n)
    out.identity_holds = out.identity_holds && offsets[n - 1] == cert.t * orbit.entry(n).value();
  out.source_zset_size = zsigmondy_set(numerators(offsets), out.horizon).zset.size();
  out.target_zset_size = zsigmondy_set(orbit, out.horizon).zset.size();
  return out;
}

bool hat_bound_holds(const Integer& a, const Integer& ud) {
  return abs(a) <= abs(ud * hat(a, ud));
}

} // namespace zsig
