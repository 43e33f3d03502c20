#pragma once

#include "zsig/rational.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zsig {

inline constexpr unsigned long kDefaultTrialBound = 1'000'000;

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// factors has strictly increasing primes; product(factors) * cofactor == |n|.
/// cofactor == 1 means the factorization is complete.
struct PrimePowerFactorization {
  std::vector<PrimePower> factors;
  Integer cofactor = 1;

  bool complete() const { return cofactor == 1; }
  std::vector<Integer> primes() const;
};

bool is_probable_prime(const Integer& n);

/// Primes below `limit` (exclusive). The default-bound table is built once and shared.
std::span<const std::uint32_t> primes_below(unsigned long limit);

/// val_p(x) = val_p(num) - val_p(den). Throws std::domain_error for x == 0 and
/// std::invalid_argument when p is not prime.
long val_p(const Rational& x, const Integer& p);
unsigned long val_p(const Integer& x, const Integer& p);

/// Trial division by primes below `bound`, probable-prime check on what remains,
/// then a step-budgeted Pollard-Brent split for composite cofactors below 2^128. Anything
/// larger stays in `cofactor`.
PrimePowerFactorization factor_small(const Integer& n, unsigned long bound = kDefaultTrialBound);

/// Number of distinct primes dividing |n|. Throws std::domain_error for n == 0
/// and std::runtime_error if |n| cannot be factored completely.
unsigned omega(const Integer& n);

/// r with every prime of s removed to full multiplicity (iterated gcd division).
Integer strip_common_primes(Integer r, const Integer& s);

/// s_d(n) = sum over distinct primes p | n of d^(n/p); s_d(1) = 0.
Integer s_d(std::uint64_t n, unsigned long d);

/// Sieve-backed helpers for index-sized integers.
class SmallFactorTable {
public:
  explicit SmallFactorTable(std::uint32_t limit);
  std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
  /// Distinct primes of n in increasing order; n must be in [1, limit].
  std::vector<std::uint32_t> distinct_primes(std::uint32_t n) const;
  unsigned omega(std::uint32_t n) const;

private:
  std::vector<std::uint32_t> spf_;
};

/// Exact decision of s_d(n)^5 <= d^(3n). Tries the dominant-term certificate
/// s_d(n) <= omega(n) * d^(n/p_min) first and evaluates in full big-integer
/// arithmetic only when the certificate does not settle it.
bool s_d_three_fifths_holds(std::uint64_t n, unsigned long d, std::span<const std::uint32_t> distinct_primes);
/// Reference evaluation of the same inequality with no shortcuts.
bool s_d_three_fifths_holds_direct(std::uint64_t n, unsigned long d);

/// Exact decision of s_d(n)^2 <= omega(n)^2 * d^n, i.e. s_d(n) <= d^(n/2) omega(n).
bool s_d_half_power_holds(std::uint64_t n, unsigned long d, std::span<const std::uint32_t> distinct_primes);
bool s_d_half_power_holds_direct(std::uint64_t n, unsigned long d);

} // namespace zsig
