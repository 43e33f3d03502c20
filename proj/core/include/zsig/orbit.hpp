#pragma once

#include "zsig/poly.hpp"
#include "zsig/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zsig {

inline constexpr std::size_t kDefaultBitCap = 2'000'000;

struct OrbitEntry {
  Integer num;                           ///< N_n, coprime to den
  Integer den;                           ///< M_n > 0
  double ln_abs_value = 0;               ///< ln |N_n / M_n|
  double ln_abs_num = 0;                 ///< ln |N_n|
  double ln_den = 0;                     ///< ln M_n
  std::map<Integer, unsigned long> den_valuations;  ///< p -> val_p(M_n) for p in I(M_n)

  Rational value() const { return Rational::from_reduced(num, den); }
};

/// The critical orbit g_c^n(0) for n = 1..size(). Entry n is N_n / M_n, which is
/// A_{n-1} / B_{n-1} when indexing from g_c^0(c) = c instead.
class OrbitRecord {
public:
  OrbitRecord(X2DivisiblePoly g, Rational c) : g_(std::move(g)), c_(std::move(c)) {}

  const X2DivisiblePoly& poly() const { return g_; }
  const Rational& parameter() const { return c_; }
  std::size_t size() const { return entries_.size(); }
  /// 1-based: entry(1) is g_c(0) = c.
  const OrbitEntry& entry(std::size_t n) const { return entries_.at(n - 1); }
  const std::vector<OrbitEntry>& entries() const { return entries_; }
  /// Primes dividing den(c); every M_n is supported on these.
  const std::vector<Integer>& den_support() const { return support_; }
  /// Index of the first entry whose size exceeded the bit cap, if iteration stopped there.
  std::optional<std::size_t> capped_at() const { return capped_at_; }

private:
  friend OrbitRecord iterate(const X2DivisiblePoly&, const Rational&, std::size_t, std::size_t);
  X2DivisiblePoly g_;
  Rational c_;
  std::vector<OrbitEntry> entries_;
  std::vector<Integer> support_;
  std::optional<std::size_t> capped_at_;
};

/// Computes entries 1..horizon, stopping early (not an error) once an entry would
/// need more than bit_cap bits in its numerator or denominator.
OrbitRecord iterate(const X2DivisiblePoly& g, const Rational& c, std::size_t horizon,
                    std::size_t bit_cap = kDefaultBitCap);

/// Least n' >= 0 with |g_c^{n'}(c)| >= max(4 L_g, |c|), i.e. entry n'+1 of the orbit.
std::optional<std::size_t> escape_check(const X2DivisiblePoly& g, const Rational& c, const OrbitRecord& orbit);

enum class Verdict { FiniteOrbit, InfiniteEscape, InfiniteDenominator };

std::string to_string(Verdict v);

struct MembershipDecision {
  Verdict verdict = Verdict::FiniteOrbit;
  // FiniteOrbit: z_tail == z_{tail + cycle_length}, indices counted from z_0 = 0.
  std::size_t tail_index = 0;
  std::size_t cycle_length = 0;
  // InfiniteEscape: least n' with |g_c^{n'}(c)| >= max(4 L_g, |c|).
  std::size_t escape_index = 0;
  // InfiniteDenominator: least n (1-based) and least prime p with val_p(M_n) > val_p(u_d).
  std::size_t denominator_index = 0;
  Integer prime;

  bool infinite() const { return verdict != Verdict::FiniteOrbit; }
  std::string witness() const;
};

/// Decides whether {g_c^n(0)} is infinite. Always terminates: without escape or
/// denominator growth the orbit stays in {a/b : |a/b| < max(4L_g,|c|), b | u_d}.
MembershipDecision decide_membership(const X2DivisiblePoly& g, const Rational& c);

/// Recomputes the witness from scratch in exact arithmetic.
bool recheck_witness(const X2DivisiblePoly& g, const Rational& c, const MembershipDecision& decision);

} // namespace zsig
