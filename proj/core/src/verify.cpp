#include "zsig/verify.hpp"

#include "zsig/arith.hpp"
#include "zsig/constants.hpp"
#include "zsig/lemmas.hpp"
#include "zsig/scan.hpp"
#include "zsig/zsigmondy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <unordered_set>

namespace zsig {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long height) {
  for (;;) {
    const long a = uniform(rng, -height, height);
    const long b = uniform(rng, 1, height);
    if (std::gcd(a, b) == 1) return Rational(a, b);
  }
}

X2DivisiblePoly random_poly(Rng& rng, unsigned d, long height) {
  std::vector<Integer> coeffs(d + 1, 0);
  for (unsigned i = 2; i < d; ++i) coeffs[i] = uniform(rng, -height, height);
  long lead = 0;
  while (lead == 0) lead = uniform(rng, -height, height);
  coeffs[d] = lead;
  return X2DivisiblePoly(std::move(coeffs));
}

class Check {
public:
  Check(std::vector<CheckResult>& sink, std::string module, std::string name) : sink_(sink), idx_(sink.size()) {
    sink.push_back({std::move(module), std::move(name)});
  }

  void expect(bool ok, const std::function<std::string()>& why) {
    auto& r = sink_[idx_];
    ++r.cases;
    if (ok) return;
    if (r.passed) r.detail = why();
    r.passed = false;
  }
  void absorb(const LemmaCheck& lc, const std::string& where) {
    auto& r = sink_[idx_];
    r.cases += lc.checked;
    if (!lc.ok && r.passed) {
      r.passed = false;
      r.detail = where + ": " + lc.detail;
    }
  }

private:
  std::vector<CheckResult>& sink_;
  std::size_t idx_;
};

// N_n M_{n-1}^d b == M_n (sum_i u_i N_{n-1}^i M_{n-1}^(d-i) b + a M_{n-1}^d), with N_n / M_n reduced.
bool recurrence_holds(const OrbitRecord& orbit, std::size_t n) {
  const auto& g = orbit.poly();
  const Integer a = orbit.parameter().num(), b = orbit.parameter().den();
  const auto& e = orbit.entry(n);
  if (e.den <= 0) return false;
  for (const auto& p : orbit.den_support())
    if (mpz_divisible_p(e.num.get_mpz_t(), p.get_mpz_t()) && mpz_divisible_p(e.den.get_mpz_t(), p.get_mpz_t())) return false;
  Integer rest = e.den;
  for (const auto& p : orbit.den_support()) mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  if (rest != 1) return false;
  const Integer prev_num = n == 1 ? Integer(0) : orbit.entry(n - 1).num;
  const Integer prev_den = n == 1 ? Integer(1) : orbit.entry(n - 1).den;
  const unsigned d = g.degree();
  Integer sum = 0, term, md;
  mpz_pow_ui(md.get_mpz_t(), prev_den.get_mpz_t(), d);
  for (unsigned i = 2; i <= d; ++i) {
    if (g.u(i) == 0) continue;
    Integer ni, mi;
    mpz_pow_ui(ni.get_mpz_t(), prev_num.get_mpz_t(), i);
    mpz_pow_ui(mi.get_mpz_t(), prev_den.get_mpz_t(), d - i);
    term = g.u(i) * ni * mi;
    sum += term;
  }
  const Integer lhs = e.num * md * b;
  const Integer rhs = e.den * (sum * b + a * md);
  return lhs == rhs;
}

std::string describe(const X2DivisiblePoly& g, const Rational& c) { return "g = " + g.str() + ", c = " + c.str(); }

struct CriticalSample {
  const char* poly;
  const char* u;
};

constexpr CriticalSample kCriticalSamples[] = {
    {"x^3 - 3*x", "1"},   {"x^3 - 3*x", "-1"}, {"x^2 + x", "-1/2"}, {"2*x^3 - 3*x^2", "1"},
    {"x^4 - 2*x^2", "1"}, {"1/3*x^3 - x", "1"}, {"3*x^2", "0"},     {"1/2*x^3 + x^2", "0"},
};

void arith_checks(std::vector<CheckResult>& out, const VerifyOptions& opt, Rng& rng) {
  {
    Check ck(out, "arith", "valuation of a quotient");
    const auto primes = primes_below(60);
    for (unsigned i = 0; i < 300; ++i) {
      Integer a = uniform(rng, 1, 1L << 40), b = uniform(rng, 1, 1L << 40);
      const Integer g = gcd(a, b);
      a /= g;
      b /= g;
      if (uniform(rng, 0, 1)) a = -a;
      const Rational q(a, b);
      for (const auto p32 : primes) {
        const Integer p = p32;
        const long vq = val_p(q, p);
        const long va = static_cast<long>(val_p(a, p)), vb = static_cast<long>(val_p(b, p));
        ck.expect(vq == va - vb && (va == 0 || vb == 0), [&] { return q.str() + " at p = " + p.get_str(); });
      }
    }
  }
  const auto limit = static_cast<std::uint32_t>(std::max<std::uint64_t>(opt.index_limit, 30));
  const SmallFactorTable table(limit);
  {
    Check ck(out, "arith", "omega(n) <= log2 n");
    for (std::uint32_t n = 2; n <= limit; ++n)
      ck.expect((std::uint64_t{1} << table.omega(n)) <= n, [&] { return "n = " + std::to_string(n); });
  }
  {
    Check half(out, "arith", "s_d(n) <= d^(n/2) omega(n)");
    Check three(out, "arith", "s_d(n) <= d^(3n/5) for n >= 30");
    for (unsigned long d = 2; d <= 10; ++d)
      for (std::uint32_t n = 2; n <= limit; ++n) {
        const auto ps = table.distinct_primes(n);
        half.expect(s_d_half_power_holds(n, d, ps), [&] { return "d = " + std::to_string(d) + ", n = " + std::to_string(n); });
        if (n >= 30)
          three.expect(s_d_three_fifths_holds(n, d, ps),
                       [&] { return "d = " + std::to_string(d) + ", n = " + std::to_string(n); });
      }
  }
  {
    Check ck(out, "arith", "strip_common_primes");
    for (unsigned i = 0; i < 300; ++i) {
      const Integer s = Integer(uniform(rng, 1, 1L << 20)) * uniform(rng, 1, 1000);
      const Integer r = Integer(uniform(rng, 1, 1L << 30)) * s * uniform(rng, 1, 50);
      const Integer out_r = strip_common_primes(r, s);
      Integer q = r / out_r;
      for (Integer g = gcd(q, s); g > 1; g = gcd(q, s)) q /= g;
      ck.expect(gcd(out_r, s) == 1 && r % out_r == 0 && q == 1, [&] { return "r = " + r.get_str() + ", s = " + s.get_str(); });
    }
  }
  {
    Check ck(out, "arith", "factor_small reconstructs n");
    for (unsigned i = 0; i < 200; ++i) {
      const Integer n = Integer(uniform(rng, 2, 1L << 40)) * uniform(rng, 2, 1L << 40);
      const auto f = factor_small(n);
      Integer prod = f.cofactor, pk;
      bool primes_ok = true;
      for (const auto& pp : f.factors) {
        mpz_pow_ui(pk.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        prod *= pk;
        primes_ok = primes_ok && is_probable_prime(pp.prime);
      }
      ck.expect(prod == n && primes_ok && f.complete(), [&] { return "n = " + n.get_str(); });
    }
  }
}

void poly_checks(std::vector<CheckResult>& out, Rng& rng) {
  Check conj(out, "poly", "conjugacy identity f_c^n(u) - u = t h^n(0)");
  Check dist(out, "poly", "Zsigmondy distortion bounded by omega(t)");
  Check cert(out, "poly", "certificate recomposes to the target");
  Check shape(out, "poly", "shifted map has no constant or linear term");
  for (const auto& s : kCriticalSamples) {
    const auto f = RatPolynomial::parse(s.poly);
    const auto u = Rational::parse(s.u);
    const auto nc = normalize_to_x2_divisible(f, u);
    const auto sh = shift_to_origin(f, u);
    const std::string where = std::string(s.poly) + " at u = " + s.u;
    shape.expect(sh.g0.coeff(0).is_zero() && sh.g0.coeff(1).is_zero(), [&] { return where; });
    cert.expect(nc.verify(), [&] { return where; });
    const unsigned horizon = f.degree() <= 3 ? 8 : 6;
    for (unsigned i = 0; i < 12; ++i) {
      const Rational c = random_rational(rng, 20);
      const std::string at_c = where + ", c = " + c.str();
      if (!decide_membership(nc.target, nc.map_parameter(c)).infinite()) {
        const auto offsets = critical_orbit_offsets(f, u, c, 6);
        const auto orbit = iterate(nc.target, nc.map_parameter(c), 6, kDefaultBitCap);
        for (std::size_t n = 1; n <= orbit.size(); ++n)
          conj.expect(offsets[n - 1] == nc.t * orbit.entry(n).value(), [&] { return at_c; });
        continue;
      }
      const auto cc = check_conjugation_distortion(nc, c, horizon);
      conj.expect(cc.identity_holds, [&] { return at_c; });
      dist.expect(cc.within_bound(), [&] { return at_c; });
    }
  }
  Check len(out, "poly", "length invariance");
  for (unsigned i = 0; i < 100; ++i) {
    const auto g = random_poly(rng, static_cast<unsigned>(uniform(rng, 2, 6)), 9);
    std::vector<Integer> neg;
    for (const auto& a : g.coeffs()) neg.push_back(-a);
    const X2DivisiblePoly h(std::move(neg));
    std::vector<Integer> mono(g.degree() + 1, 0);
    mono.back() = g.leading();
    len.expect(length(g) == length(h) && length(X2DivisiblePoly(mono)) == Rational(1), [&] { return g.str(); });
  }
}

void orbit_checks(std::vector<CheckResult>& out, const VerifyOptions& opt, Rng& rng) {
  Check rec(out, "orbit", "recurrence exactness");
  Check val(out, "orbit", "valuation recursion and persistence");
  Check up(out, "orbit", "upper bounds");
  Check low(out, "orbit", "denominator lower bound (d >= 3)");
  Check esc(out, "orbit", "escape growth");
  Check wit(out, "orbit", "membership witnesses recheck");
  for (unsigned i = 0; i < opt.random_cases; ++i) {
    const auto g = random_poly(rng, static_cast<unsigned>(uniform(rng, 3, 5)), 9);
    const Rational c = random_rational(rng, 20);
    const auto orbit = iterate(g, c, 12, opt.bit_cap);
    const std::string where = describe(g, c);
    for (std::size_t n = 1; n <= orbit.size(); ++n)
      rec.expect(recurrence_holds(orbit, n), [&] { return where + ", n = " + std::to_string(n); });
    val.absorb(check_valuation_recursion(orbit), where);
    up.absorb(check_upper_bounds(orbit), where);
    low.absorb(check_denominator_lower_bound(orbit), where);
    esc.absorb(check_escape_growth(orbit), where);
    const auto dec = decide_membership(g, c);
    wit.expect(recheck_witness(g, c, dec), [&] { return where; });
  }

  Check oracle(out, "orbit", "decide_membership agrees with brute force");
  const auto g = X2DivisiblePoly::parse("x^3 + x^2");
  for (const auto& c : scan_grid(6, 3)) {
    const auto o = brute_force_classify(g, c, 500, opt.oracle_bit_cap);
    if (o == OracleVerdict::Inconclusive) continue;
    const bool inf = decide_membership(g, c).infinite();
    oracle.expect(inf == (o == OracleVerdict::Infinite), [&] { return describe(g, c); });
  }
  for (unsigned i = 0; i < 40; ++i) {
    const auto h = random_poly(rng, static_cast<unsigned>(uniform(rng, 2, 4)), 3);
    const Rational c = random_rational(rng, 4);
    const auto o = brute_force_classify(h, c, 500, opt.oracle_bit_cap);
    if (o == OracleVerdict::Inconclusive) continue;
    oracle.expect(decide_membership(h, c).infinite() == (o == OracleVerdict::Infinite), [&] { return describe(h, c); });
  }
}

void zsig_checks(std::vector<CheckResult>& out, const VerifyOptions& opt, Rng& rng) {
  {
    Check kr(out, "zsig", "Krieger divisibility on the Zsigmondy set");
    Check rin(out, "zsig", "Zsigmondy indices fail the numerator inequality");
    for (const char* p : {"x^3 + x^2", "2*x^3 + x^2"}) {
      ScanConfig cfg;
      cfg.poly = X2DivisiblePoly::parse(p);
      cfg.num_bound = 10;
      cfg.den_bound = 4;
      cfg.horizon = 8;
      cfg.bit_cap = opt.bit_cap;
      cfg.threads = 1;
      for (const auto& row : run_scan(cfg).rows) {
        if (!row.decision.infinite()) continue;
        const std::string where = describe(cfg.poly, row.c);
        kr.expect(row.krieger_failures.empty(), [&] { return where; });
        for (const auto n : row.zset)
          rin.expect(std::binary_search(row.rin_failures.begin(), row.rin_failures.end(), n),
                     [&] { return where + ", n = " + std::to_string(n); });
      }
    }
  }
  {
    Check ck(out, "zsig", "|a| <= |u_d hat(a)|");
    for (unsigned i = 0; i < 500; ++i) {
      Integer a = uniform(rng, 1, 1L << 24);
      if (uniform(rng, 0, 1)) a = -a;
      Integer ud = uniform(rng, 1, 5000);
      ck.expect(hat_bound_holds(a, ud), [&] { return "a = " + a.get_str() + ", u_d = " + ud.get_str(); });
    }
  }
  {
    Check ck(out, "zsig", "monomial sandwiches");
    for (unsigned i = 0; i < 80; ++i) {
      const unsigned d = static_cast<unsigned>(uniform(rng, 2, 5));
      long ud = 0;
      while (ud == 0) ud = uniform(rng, -5, 5);
      std::vector<Integer> coeffs(d + 1, 0);
      coeffs[d] = ud;
      const X2DivisiblePoly g(std::move(coeffs));
      // 0 < |c| < 1/(4|u_d|)
      const long b = uniform(rng, 4 * std::labs(ud) + 1, 60);
      const Rational c(uniform(rng, 0, 1) ? 1 : -1, b);
      ck.absorb(check_monomial_sandwich(iterate(g, c, 10, opt.bit_cap)), describe(g, c));
    }
  }
  {
    Check ck(out, "zsig", "cross bound on computed orbits (n >= 30)");
    const auto g = X2DivisiblePoly::parse("x^2");
    for (const char* cs : {"1/2", "1/3", "-1/3", "1", "-3/2"}) {
      const auto c = Rational::parse(cs);
      ck.absorb(check_cross_bound(iterate(g, c, 40, opt.bit_cap)), describe(g, c));
    }
  }
  {
    Check ck(out, "zsig", "cross bound on synthetic sequences");
    for (unsigned i = 0; i < 200; ++i) {
      const unsigned d = static_cast<unsigned>(uniform(rng, 2, 10));
      const auto g = random_poly(rng, d, 9);
      const Rational c = random_rational(rng, 20);
      // ln |A_k| <= d^k ln(2 |u_d| B_0 max(|c|, 4 L_g)) is what the orbit upper bounds give.
      const double top = ln_abs(Rational(2) * Rational(abs(g.leading()) * c.den()) * std::max(c.abs(), Rational(4) * length(g)));
      const std::uint64_t n_max = static_cast<std::uint64_t>(250.0 / std::log10(static_cast<double>(d)));
      std::vector<double> lnA(n_max / 2 + 1);
      std::uniform_real_distribution<double> frac(0.0, 1.0);
      for (std::size_t k = 0; k < lnA.size(); ++k)
        lnA[k] = (i % 4 == 0 ? 1.0 : frac(rng)) * std::pow(static_cast<double>(d), static_cast<double>(k)) * top;
      const double base = cross_bound_log_base(g, c);
      for (std::uint64_t n = 30; n <= n_max; ++n)
        ck.expect(cross_bound_holds(lnA, d, base, n), [&] { return describe(g, c) + ", n = " + std::to_string(n); });
    }
  }
  {
    Check ck(out, "zsig", "N0 satisfies its defining inequality");
    for (unsigned long d = 2; d <= 64; ++d) {
      const long n0 = bound_N0(d);
      ck.expect(n0_inequality_holds(d, n0) && !n0_inequality_holds(d, n0 - 1), [&] { return "d = " + std::to_string(d); });
    }
  }
}

} // namespace

OracleVerdict brute_force_classify(const X2DivisiblePoly& g, const Rational& c, std::size_t steps, std::size_t bit_cap) {
  std::unordered_set<Rational, RationalHash> seen;
  Rational z;
  seen.insert(z);
  for (std::size_t i = 0; i < steps; ++i) {
    z = g(z) + c;
    if (bit_length(z.num()) > bit_cap || bit_length(z.den()) > bit_cap) return OracleVerdict::Infinite;
    if (!seen.insert(z).second) return OracleVerdict::Finite;
  }
  return OracleVerdict::Inconclusive;
}

std::vector<CheckResult> run_verification_suite(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  Rng rng(options.seed);
  arith_checks(out, options, rng);
  poly_checks(out, rng);
  orbit_checks(out, options, rng);
  zsig_checks(out, options, rng);
  return out;
}

} // namespace zsig
