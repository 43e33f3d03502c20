#include "zsig/arith.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace zsig {

namespace {

std::vector<std::uint32_t> sieve_primes(unsigned long limit) {
  std::vector<std::uint32_t> out;
  if (limit <= 2) return out;
  std::vector<bool> composite(limit, false);
  for (unsigned long i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (unsigned long j = i * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

const std::vector<std::uint32_t>& default_prime_table() {
  static const std::vector<std::uint32_t> table = sieve_primes(kDefaultTrialBound);
  return table;
}

std::mutex& big_table_mutex() {
  static std::mutex m;
  return m;
}

Integer pow_ui(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Step budget per seed: finds factors up to roughly 2^36 quickly and gives up on
// balanced 128-bit semiprimes.
constexpr unsigned long kRhoBudget = 1UL << 18;
constexpr unsigned long kRhoSeeds = 4;

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 on failure.
Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  const Integer c = seed;
  Integer y = seed + 1, x, ys, q = 1, g = 1, t;
  unsigned long r = 1;
  const unsigned long m = 128;
  const auto step = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        step(y);
        t = x - y;
        q = q * abs(t);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
    if (r > kRhoBudget) return 0;
  }
  if (g == n) {
    do {
      step(ys);
      t = x - ys;
      t = abs(t);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

// Splits a composite n < 2^128 into primes, appending to `out`.
bool split_completely(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return true;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return true;
  }
  for (unsigned long seed = 1; seed <= kRhoSeeds; ++seed) {
    const Integer f = pollard_brent(n, seed);
    if (f != 0 && f != 1 && f != n) {
      const Integer other = n / f;
      return split_completely(f, out) && split_completely(other, out);
    }
  }
  return false;
}

} // namespace

std::vector<Integer> PrimePowerFactorization::primes() const {
  std::vector<Integer> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::span<const std::uint32_t> primes_below(unsigned long limit) {
  const auto& table = default_prime_table();
  if (limit <= kDefaultTrialBound) {
    const auto end = std::lower_bound(table.begin(), table.end(), limit);
    return {table.data(), static_cast<std::size_t>(end - table.begin())};
  }
  // Larger tables are rare (explicit user bound); keep the largest one built so far.
  static std::vector<std::uint32_t> big;
  std::lock_guard lock(big_table_mutex());
  if (big.empty() || big.back() < limit - 1) {
    auto fresh = sieve_primes(limit);
    if (fresh.size() > big.size()) big = std::move(fresh);
  }
  const auto end = std::lower_bound(big.begin(), big.end(), limit);
  return {big.data(), static_cast<std::size_t>(end - big.begin())};
}

unsigned long val_p(const Integer& x, const Integer& p) {
  if (x == 0) throw std::domain_error("val_p(0) is infinite");
  if (!is_probable_prime(p)) throw std::invalid_argument("val_p: " + p.get_str() + " is not prime");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

long val_p(const Rational& x, const Integer& p) {
  if (x.is_zero()) throw std::domain_error("val_p(0) is infinite");
  return static_cast<long>(val_p(x.num_ref(), p)) - static_cast<long>(val_p(x.den_ref(), p));
}

PrimePowerFactorization factor_small(const Integer& n, unsigned long bound) {
  if (bound < 2) throw std::invalid_argument("factor_small: bound must be >= 2");
  if (n == 0) throw std::domain_error("factor_small: cannot factor 0");
  PrimePowerFactorization out;
  Integer rest = abs(n);
  Integer p;
  for (const std::uint32_t q : primes_below(bound)) {
    if (rest == 1) break;
    p = q;
    if (p * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), q) == 0) continue;
    const unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    out.factors.push_back({p, e});
  }
  if (rest == 1) return out;

  std::vector<Integer> big;
  Integer limit128 = 1;
  limit128 <<= 128;
  bool done = false;
  if (is_probable_prime(rest)) {
    big.push_back(rest);
    done = true;
  } else if (rest < limit128) {
    done = split_completely(rest, big);
  }
  if (!done) {
    out.cofactor = rest;
    return out;
  }
  std::sort(big.begin(), big.end());
  for (const auto& q : big) {
    if (!out.factors.empty() && out.factors.back().prime == q)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({q, 1});
  }
  // Trial primes are all below the split ones, so order is already increasing.
  return out;
}

unsigned omega(const Integer& n) {
  if (n == 0) throw std::domain_error("omega(0) is undefined");
  const auto f = factor_small(n);
  if (!f.complete()) throw std::runtime_error("omega: could not factor " + n.get_str());
  return static_cast<unsigned>(f.factors.size());
}

Integer strip_common_primes(Integer r, const Integer& s) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
  while (g != 1 && g != 0) {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

Integer s_d(std::uint64_t n, unsigned long d) {
  if (n == 0) throw std::invalid_argument("s_d: n must be >= 1");
  if (d < 2) throw std::invalid_argument("s_d: d must be >= 2");
  Integer sum = 0;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    sum += pow_ui(d, n / p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) sum += pow_ui(d, n / rest);
  return sum;
}

SmallFactorTable::SmallFactorTable(std::uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0) {
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = i;
  }
}

std::vector<std::uint32_t> SmallFactorTable::distinct_primes(std::uint32_t n) const {
  if (n == 0 || n > limit()) throw std::out_of_range("SmallFactorTable: index out of range");
  std::vector<std::uint32_t> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

unsigned SmallFactorTable::omega(std::uint32_t n) const {
  return static_cast<unsigned>(distinct_primes(n).size());
}

bool s_d_three_fifths_holds(std::uint64_t n, unsigned long d, std::span<const std::uint32_t> distinct_primes) {
  if (distinct_primes.empty()) return true; // s_d(1) = 0
  const std::uint64_t w = distinct_primes.size();
  const std::uint64_t top = n / distinct_primes.front();
  // Certificate: s_d(n)^5 <= w^5 d^(5 top), so it suffices that w^5 <= d^(3n - 5 top).
  if (3 * n >= 5 * top) {
    const std::uint64_t e = 3 * n - 5 * top;
    const std::uint64_t w5 = w * w * w * w * w;
    if (e >= 64 || pow_ui(d, e) >= Integer(static_cast<unsigned long>(w5))) return true;
  }
  return s_d_three_fifths_holds_direct(n, d);
}

bool s_d_three_fifths_holds_direct(std::uint64_t n, unsigned long d) {
  const Integer s = s_d(n, d);
  Integer s5;
  mpz_pow_ui(s5.get_mpz_t(), s.get_mpz_t(), 5);
  return s5 <= pow_ui(d, 3 * n);
}

bool s_d_half_power_holds(std::uint64_t n, unsigned long d, std::span<const std::uint32_t> distinct_primes) {
  if (distinct_primes.empty()) return true;
  // Each of the w terms is at most d^(n/p_min) and 2 (n/p_min) <= n.
  const std::uint64_t top = n / distinct_primes.front();
  if (2 * top <= n) return true;
  return s_d_half_power_holds_direct(n, d);
}

bool s_d_half_power_holds_direct(std::uint64_t n, unsigned long d) {
  const Integer s = s_d(n, d);
  unsigned long w = 0;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    ++w;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) ++w;
  return s * s <= Integer(w * w) * pow_ui(d, n);
}

} // namespace zsig
