#include "zsig/orbit.hpp"

#include "zsig/arith.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace zsig {

namespace {

std::vector<Integer> denominator_support(const Rational& c) {
  if (c.den() == 1) return {};
  const auto f = factor_small(c.den());
  if (!f.complete()) throw std::invalid_argument("denominator of c could not be factored: " + c.den().get_str());
  return f.primes();
}

unsigned long remove_prime(const Integer& x, const Integer& p) {
  if (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) == 0) return 0;
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

// One step z -> g(z) + c on the reduced pair (num, den), with c = a / b.
// den is supported on the primes of b, so cancellation is checked prime by prime;
// den_val[k] tracks val_p(den) for p = support[k].
void step(const X2DivisiblePoly& g, const Integer& a, const Integer& b, std::span<const Integer> support,
          std::span<const unsigned long> b_val, std::vector<unsigned long>& den_val, Integer& num, Integer& den) {
  const unsigned d = g.degree();
  // Q = sum_{j=0}^{d-2} u_{j+2} N^j M^{d-2-j}, so g(N/M) = N^2 Q / M^d.
  std::vector<Integer> mpow(d + 1);
  mpow[0] = 1;
  for (unsigned i = 1; i <= d; ++i) mpow[i] = mpow[i - 1] * den;
  Integer q = g.u(d);
  for (unsigned j = d - 2; j-- > 0;) {
    q *= num;
    if (g.u(j + 2) != 0) q += g.u(j + 2) * mpow[d - 2 - j];
  }
  Integer top = num * num * q * b + a * mpow[d];
  Integer bottom = mpow[d] * b;
  Integer pk;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const unsigned long vb = d * den_val[k] + b_val[k];
    unsigned long cancel = 0;
    if (top == 0) {
      cancel = vb;
    } else if (mpz_divisible_p(top.get_mpz_t(), support[k].get_mpz_t()) != 0) {
      mpz_pow_ui(pk.get_mpz_t(), support[k].get_mpz_t(), vb);
      if (mpz_divisible_p(top.get_mpz_t(), pk.get_mpz_t()) != 0) cancel = vb;
      else cancel = mpz_remove(pk.get_mpz_t(), top.get_mpz_t(), support[k].get_mpz_t());
    }
    if (cancel > 0) {
      mpz_pow_ui(pk.get_mpz_t(), support[k].get_mpz_t(), cancel);
      mpz_divexact(bottom.get_mpz_t(), bottom.get_mpz_t(), pk.get_mpz_t());
      if (top != 0) mpz_divexact(top.get_mpz_t(), top.get_mpz_t(), pk.get_mpz_t());
    }
    den_val[k] = vb - cancel;
  }
  num.swap(top);
  den.swap(bottom);
}

Rational escape_threshold(const X2DivisiblePoly& g, const Rational& c) {
  return std::max(Rational(4) * length(g), c.abs());
}

} // namespace

OrbitRecord iterate(const X2DivisiblePoly& g, const Rational& c, std::size_t horizon, std::size_t bit_cap) {
  if (horizon < 1) throw std::invalid_argument("iterate: horizon must be >= 1");
  OrbitRecord rec(g, c);
  rec.support_ = denominator_support(c);
  std::vector<unsigned long> ud_val;
  for (const auto& p : rec.support_) ud_val.push_back(remove_prime(g.leading(), p));

  Integer num = 0, den = 1;
  const Integer a = c.num(), b = c.den();
  std::vector<unsigned long> b_val, den_val(rec.support_.size(), 0);
  for (const auto& p : rec.support_) b_val.push_back(remove_prime(b, p));
  rec.entries_.reserve(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) {
    step(g, a, b, rec.support_, b_val, den_val, num, den);
    if (std::max(bit_length(num), bit_length(den)) > bit_cap) {
      rec.capped_at_ = n;
      break;
    }
    OrbitEntry e;
    e.num = num;
    e.den = den;
    e.ln_abs_num = ln_abs(num);
    e.ln_den = ln_abs(den);
    e.ln_abs_value = e.ln_abs_num - e.ln_den;
    for (std::size_t k = 0; k < rec.support_.size(); ++k)
      if (den_val[k] > ud_val[k]) e.den_valuations.emplace(rec.support_[k], den_val[k]);
    rec.entries_.push_back(std::move(e));
  }
  return rec;
}

std::optional<std::size_t> escape_check(const X2DivisiblePoly& g, const Rational& c, const OrbitRecord& orbit) {
  const Rational threshold = escape_threshold(g, c);
  for (std::size_t n = 1; n <= orbit.size(); ++n)
    if (orbit.entry(n).value().abs() >= threshold) return n - 1;
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FiniteOrbit: return "FiniteOrbit";
    case Verdict::InfiniteEscape: return "InfiniteEscape";
    case Verdict::InfiniteDenominator: return "InfiniteDenominator";
  }
  return "?";
}

std::string MembershipDecision::witness() const {
  std::ostringstream os;
  switch (verdict) {
    case Verdict::FiniteOrbit: os << "tail=" << tail_index << ";cycle=" << cycle_length; break;
    case Verdict::InfiniteEscape: os << "escape=" << escape_index; break;
    case Verdict::InfiniteDenominator: os << "n=" << denominator_index << ";p=" << prime.get_str(); break;
  }
  return os.str();
}

MembershipDecision decide_membership(const X2DivisiblePoly& g, const Rational& c) {
  const Rational threshold = escape_threshold(g, c);
  const std::vector<Integer> support = denominator_support(c);
  std::vector<unsigned long> ud_val;
  for (const auto& p : support) ud_val.push_back(remove_prime(g.leading(), p));

  // Pigeonhole bound on steps before a repeat must occur:
  // sum over b' <= |u_d| of #{a : |a| < T b'} plus the seed value.
  const Integer ud = abs(g.leading());
  Integer t_ceil;
  mpz_cdiv_q(t_ceil.get_mpz_t(), threshold.num_ref().get_mpz_t(), threshold.den_ref().get_mpz_t());
  const Integer step_bound = t_ceil * ud * (ud + 1) + ud + 2;

  std::unordered_map<Rational, std::size_t, RationalHash> seen;
  Rational z;
  seen.emplace(z, 0);
  MembershipDecision out;
  for (std::size_t n = 1;; ++n) {
    if (Integer(static_cast<unsigned long>(n)) > step_bound)
      throw std::logic_error("decide_membership exceeded its termination bound");
    z = g(z) + c;
    if (const auto it = seen.find(z); it != seen.end()) {
      out.verdict = Verdict::FiniteOrbit;
      out.tail_index = it->second;
      out.cycle_length = n - it->second;
      return out;
    }
    seen.emplace(z, n);
    if (z.abs() >= threshold) {
      out.verdict = Verdict::InfiniteEscape;
      out.escape_index = n - 1;
      return out;
    }
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (remove_prime(z.den_ref(), support[k]) > ud_val[k]) {
        out.verdict = Verdict::InfiniteDenominator;
        out.denominator_index = n;
        out.prime = support[k];
        return out;
      }
    }
  }
}

bool recheck_witness(const X2DivisiblePoly& g, const Rational& c, const MembershipDecision& decision) {
  const Rational threshold = escape_threshold(g, c);
  switch (decision.verdict) {
    case Verdict::FiniteOrbit: {
      if (decision.cycle_length == 0) return false;
      std::vector<Rational> z{Rational()};
      for (std::size_t n = 1; n <= decision.tail_index + decision.cycle_length; ++n) z.push_back(g(z.back()) + c);
      return z[decision.tail_index] == z[decision.tail_index + decision.cycle_length];
    }
    case Verdict::InfiniteEscape: {
      const auto orbit = iterate(g, c, decision.escape_index + 1);
      return orbit.size() == decision.escape_index + 1 && escape_check(g, c, orbit) == decision.escape_index;
    }
    case Verdict::InfiniteDenominator: {
      if (!is_probable_prime(decision.prime) || decision.denominator_index == 0) return false;
      const auto orbit = iterate(g, c, decision.denominator_index);
      if (orbit.size() != decision.denominator_index) return false;
      const unsigned long vud = remove_prime(g.leading(), decision.prime);
      const auto& e = orbit.entry(decision.denominator_index);
      return remove_prime(e.den, decision.prime) > vud && e.value().abs() < threshold;
    }
  }
  return false;
}

} // namespace zsig
