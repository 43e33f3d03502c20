#pragma once

#include "zsig/orbit.hpp"
#include "zsig/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace zsig {

/// Remainders above this size are not handed to factor_small for a witness prime.
inline constexpr std::size_t kWitnessBitsLimit = 256;

struct PrimitiveVerdict {
  bool has_primitive = false;
  std::optional<Integer> witness_prime;   ///< smallest primitive prime, when the remainder factors
  std::size_t stripped_remainder_bits = 0;
};

/// Primitive prime test on the numerators of a sequence (1-based n): does |nums[n]|
/// have a prime dividing no earlier nums[k]? Works by gcd stripping; a zero earlier
/// term divides by every prime, so nothing after it is primitive.
PrimitiveVerdict primitive_prime_test(std::span<const Integer> nums, std::size_t n, bool find_witness = true);
PrimitiveVerdict primitive_prime_exists(const OrbitRecord& orbit, std::size_t n);

struct RinCheck {
  bool holds = false;
  bool zero_numerator = false;
};

/// |N_n| > prod_{p | n} |N_{n/p}| in exact integers.
RinCheck check_rin_inequality(std::span<const Integer> nums, std::size_t n);
RinCheck check_rin_inequality(const OrbitRecord& orbit, std::size_t n);

enum class KriegerResult { Holds, Fails, Vacuous };

/// Vacuous when n has a primitive divisor; otherwise N_n | prod_{p | n} N_{n/p}.
KriegerResult check_krieger_divisibility(std::span<const Integer> nums, std::size_t n, bool has_primitive);
KriegerResult check_krieger_divisibility(const OrbitRecord& orbit, std::size_t n);

struct ZsigmondyReport {
  std::size_t horizon = 0;
  std::vector<PrimitiveVerdict> verdicts;  ///< verdicts[n-1] for n = 1..horizon
  std::vector<std::size_t> zset;           ///< n without a primitive prime divisor
  std::vector<std::size_t> rin_failures;   ///< n where the numerator inequality fails
  std::vector<std::pair<std::size_t, bool>> krieger_checks;  ///< (n in zset, divisibility holds)
};

/// Zsigmondy set of a sequence within [1, horizon]. Throws std::domain_error if a
/// numerator is zero (the sequence is preperiodic).
/// Witness primes are skipped unless find_witnesses is set.
ZsigmondyReport zsigmondy_set(std::span<const Integer> nums, std::size_t horizon, bool find_witnesses = false);
/// horizon is clamped to the entries the orbit actually has.
ZsigmondyReport zsigmondy_set(const OrbitRecord& orbit, std::size_t horizon, bool find_witnesses = false);
/// Numerators of f_c^n(u) - u, for sequences not coming from an OrbitRecord.
std::vector<Integer> numerators(std::span<const Rational> values);

/// I(a) = {p : val_p(a) > val_p(u_d)}, increasing.
std::vector<Integer> ideal_set(const Integer& a, const Integer& ud);
/// Same, when the primes of a are known to lie in `support`.
std::vector<Integer> ideal_set_over(const Integer& a, const Integer& ud, std::span<const Integer> support);
/// â = prod_{p in I(a)} p^val_p(a); 1 when I(a) is empty.
Integer hat(const Integer& a, const Integer& ud);
Integer hat_over(const Integer& a, const Integer& ud, std::span<const Integer> support);

} // namespace zsig
