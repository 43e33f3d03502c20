#pragma once

#include "zsig/orbit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zsig {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  ///< first failure
};

struct VerifyOptions {
  std::uint64_t index_limit = 100'000;  ///< n range for the pure index lemmas
  unsigned random_cases = 200;          ///< random (g, c) pairs for orbit invariants
  std::uint64_t seed = 20240601;
  std::size_t bit_cap = 200'000;         ///< orbit bit cap for the random and scan checks
  std::size_t oracle_bit_cap = 100'000;  ///< brute-force classifier cap
};

enum class OracleVerdict { Finite, Infinite, Inconclusive };

/// Plain iteration from 0: Finite on a repeated value, Infinite once a term needs
/// more than bit_cap bits, Inconclusive otherwise.
OracleVerdict brute_force_classify(const X2DivisiblePoly& g, const Rational& c, std::size_t steps = 500,
                                   std::size_t bit_cap = 1'000'000);

std::vector<CheckResult> run_verification_suite(const VerifyOptions& options = {});

} // namespace zsig
