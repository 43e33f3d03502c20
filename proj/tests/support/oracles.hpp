#pragma once

// Reference implementations used only by the tests. They share no code with the
// library beyond gmpxx, and favour obviousness over speed.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

enum class Orbit { Finite, Infinite, Inconclusive };

// coeffs[i] is the coefficient of x^i.
inline mpq_class eval(const std::vector<long>& coeffs, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs[i];
  }
  return acc;
}

// Iterate z -> g(z) + c from 0; Finite on repetition, Infinite once a term has
// more than bit_cap bits.
inline Orbit classify(const std::vector<long>& coeffs, const mpq_class& c, std::size_t steps = 500,
                      std::size_t bit_cap = 1'000'000) {
  std::set<std::pair<std::string, std::string>> seen;
  mpq_class z = 0;
  seen.emplace("0", "1");
  for (std::size_t i = 0; i < steps; ++i) {
    z = eval(coeffs, z) + c;
    z.canonicalize();
    if (mpz_sizeinbase(z.get_num_mpz_t(), 2) > bit_cap || mpz_sizeinbase(z.get_den_mpz_t(), 2) > bit_cap)
      return Orbit::Infinite;
    if (!seen.emplace(z.get_num().get_str(16), z.get_den().get_str(16)).second) return Orbit::Finite;
  }
  return Orbit::Inconclusive;
}

inline std::vector<mpq_class> orbit(const std::vector<long>& coeffs, const mpq_class& c, std::size_t n) {
  std::vector<mpq_class> out;
  mpq_class z = 0;
  for (std::size_t i = 0; i < n; ++i) {
    z = eval(coeffs, z) + c;
    z.canonicalize();
    out.push_back(z);
  }
  return out;
}

// n has no primitive prime iff every prime of N_n divides some earlier N_k, i.e.
// N_n divides (prod_{k<n} N_k)^e with e large enough (bit length of N_n).
inline bool no_primitive(const std::vector<mpz_class>& nums, std::size_t n) {
  const mpz_class top = abs(nums[n - 1]);
  if (top <= 1) return true;
  mpz_class prod = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) prod *= nums[k];
  if (prod == 0) return true;
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), prod.get_mpz_t(), mpz_sizeinbase(top.get_mpz_t(), 2));
  return mpz_divisible_p(power.get_mpz_t(), top.get_mpz_t()) != 0;
}

inline std::vector<std::size_t> zset(const std::vector<mpz_class>& nums) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= nums.size(); ++n)
    if (no_primitive(nums, n)) out.push_back(n);
  return out;
}

// #{(a, b) : |a| <= A, 1 <= b <= B, gcd(a, b) = 1} via Moebius inversion over b.
inline long farey_count(long A, long B) {
  if (A <= 0) return 0;
  long total = 0;
  for (long b = 1; b <= B; ++b) {
    // squarefree divisors of b with Moebius signs
    std::vector<long> primes;
    long m = b;
    for (long p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
    long count = 0;
    for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
      long dv = 1;
      int sign = 1;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask >> i & 1) {
          dv *= primes[i];
          sign = -sign;
        }
      // multiples of dv in [-A, A]
      const long k = 2 * (A / dv) + 1;
      count += sign * k;
    }
    total += count;
  }
  return total;
}

inline long trial_omega(std::uint64_t n) {
  long w = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ++w;
      while (n % p == 0) n /= p;
    }
  return w + (n > 1);
}

} // namespace oracle
