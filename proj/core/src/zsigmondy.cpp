#include "zsig/zsigmondy.hpp"

#include "zsig/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsig {

namespace {

std::vector<std::size_t> index_primes(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<Integer> orbit_numerators(const OrbitRecord& orbit) {
  std::vector<Integer> nums;
  nums.reserve(orbit.size());
  for (const auto& e : orbit.entries()) nums.push_back(e.num);
  return nums;
}

void require_index(std::span<const Integer> nums, std::size_t n) {
  if (n < 1 || n > nums.size()) throw std::out_of_range("sequence index " + std::to_string(n) + " not available");
}

} // namespace

PrimitiveVerdict primitive_prime_test(std::span<const Integer> nums, std::size_t n, bool find_witness) {
  require_index(nums, n);
  PrimitiveVerdict out;
  Integer rem = abs(nums[n - 1]);
  if (rem <= 1) return out;
  for (std::size_t k = 0; k + 1 < n && rem > 1; ++k) {
    if (nums[k] == 0) return out;
    rem = strip_common_primes(std::move(rem), abs(nums[k]));
  }
  out.stripped_remainder_bits = rem > 1 ? bit_length(rem) : 0;
  out.has_primitive = rem > 1;
  if (find_witness && out.has_primitive && out.stripped_remainder_bits <= kWitnessBitsLimit) {
    const auto f = factor_small(rem);
    if (f.complete()) out.witness_prime = f.factors.front().prime;
  }
  return out;
}

PrimitiveVerdict primitive_prime_exists(const OrbitRecord& orbit, std::size_t n) {
  const auto nums = orbit_numerators(orbit);
  return primitive_prime_test(nums, n, true);
}

RinCheck check_rin_inequality(std::span<const Integer> nums, std::size_t n) {
  require_index(nums, n);
  const Integer& top = nums[n - 1];
  if (top == 0) return {false, true};
  Integer prod = 1;
  for (const std::size_t p : index_primes(n)) {
    const Integer& v = nums[n / p - 1];
    if (v == 0) return {false, true};
    prod *= abs(v);
  }
  return {abs(top) > prod, false};
}

RinCheck check_rin_inequality(const OrbitRecord& orbit, std::size_t n) {
  const auto nums = orbit_numerators(orbit);
  return check_rin_inequality(nums, n);
}

KriegerResult check_krieger_divisibility(std::span<const Integer> nums, std::size_t n, bool has_primitive) {
  require_index(nums, n);
  if (has_primitive) return KriegerResult::Vacuous;
  Integer prod = 1;
  for (const std::size_t p : index_primes(n)) prod *= nums[n / p - 1];
  const Integer& top = nums[n - 1];
  if (top == 0) return prod == 0 ? KriegerResult::Holds : KriegerResult::Fails;
  return mpz_divisible_p(prod.get_mpz_t(), top.get_mpz_t()) != 0 ? KriegerResult::Holds : KriegerResult::Fails;
}

KriegerResult check_krieger_divisibility(const OrbitRecord& orbit, std::size_t n) {
  const auto nums = orbit_numerators(orbit);
  return check_krieger_divisibility(nums, n, primitive_prime_test(nums, n, false).has_primitive);
}

ZsigmondyReport zsigmondy_set(std::span<const Integer> nums, std::size_t horizon, bool find_witnesses) {
  if (horizon > nums.size()) throw std::out_of_range("zsigmondy_set: horizon beyond available terms");
  for (std::size_t k = 0; k < horizon; ++k)
    if (nums[k] == 0)
      throw std::domain_error("zero term at n = " + std::to_string(k + 1) + ": orbit is preperiodic");
  ZsigmondyReport rep;
  rep.horizon = horizon;
  rep.verdicts.reserve(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) {
    auto v = primitive_prime_test(nums, n, find_witnesses);
    if (!v.has_primitive) {
      rep.zset.push_back(n);
      rep.krieger_checks.emplace_back(n, check_krieger_divisibility(nums, n, false) == KriegerResult::Holds);
    }
    if (!check_rin_inequality(nums, n).holds) rep.rin_failures.push_back(n);
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

ZsigmondyReport zsigmondy_set(const OrbitRecord& orbit, std::size_t horizon, bool find_witnesses) {
  const auto nums = orbit_numerators(orbit);
  return zsigmondy_set(nums, std::min(horizon, nums.size()), find_witnesses);
}

std::vector<Integer> numerators(std::span<const Rational> values) {
  std::vector<Integer> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.num());
  return out;
}

std::vector<Integer> ideal_set_over(const Integer& a, const Integer& ud, std::span<const Integer> support) {
  if (a == 0) throw std::domain_error("ideal_set: a must be nonzero");
  if (ud == 0) throw std::invalid_argument("ideal_set: u_d must be nonzero");
  std::vector<Integer> out;
  Integer rest;
  for (const auto& p : support) {
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) == 0) continue;
    const unsigned long va = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    const unsigned long vu = mpz_remove(rest.get_mpz_t(), ud.get_mpz_t(), p.get_mpz_t());
    if (va > vu) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> ideal_set(const Integer& a, const Integer& ud) {
  if (a == 0) throw std::domain_error("ideal_set: a must be nonzero");
  const auto f = factor_small(a);
  if (!f.complete()) throw std::runtime_error("ideal_set: incomplete factorization of " + a.get_str());
  const auto primes = f.primes();
  return ideal_set_over(a, ud, primes);
}

namespace {

Integer hat_from(const Integer& a, std::span<const Integer> ideal) {
  Integer out = 1, rest, pk;
  for (const auto& p : ideal) {
    const unsigned long v = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), v);
    out *= pk;
  }
  return out;
}

} // namespace

Integer hat(const Integer& a, const Integer& ud) { return hat_from(a, ideal_set(a, ud)); }

Integer hat_over(const Integer& a, const Integer& ud, std::span<const Integer> support) {
  return hat_from(a, ideal_set_over(a, ud, support));
}

} // namespace zsig
