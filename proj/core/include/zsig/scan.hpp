#pragma once

#include "zsig/orbit.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zsig {

enum class OutputFormat { Csv, Json };

struct ScanConfig {
  X2DivisiblePoly poly{{0, 0, 1}};
  long num_bound = 1;   ///< |a| <= num_bound; 0 gives an empty grid
  long den_bound = 1;   ///< 1 <= b <= den_bound
  std::size_t horizon = 8;
  std::size_t bit_cap = kDefaultBitCap;
  unsigned threads = 0;  ///< 0: hardware concurrency
  std::string output;    ///< empty: stdout
  OutputFormat format = OutputFormat::Csv;

  /// Throws std::invalid_argument on bounds out of range.
  void validate() const;
};

/// Reads key=value lines (# comments). Keys: poly, coeffs, num_bound, den_bound,
/// horizon, bit_cap, threads, output, format. Unknown keys are errors.
ScanConfig parse_scan_config(std::istream& in);
ScanConfig load_scan_config(const std::string& path);

/// ZSIG_THREADS if set, else config.threads, else hardware concurrency; at least 1.
unsigned effective_threads(const ScanConfig& config);

/// Reduced a/b with |a| <= A, 1 <= b <= B, ordered by b then a.
std::vector<Rational> scan_grid(long A, long B);

struct ScanRow {
  Rational c;
  MembershipDecision decision;
  // Filled only for infinite orbits.
  std::optional<std::size_t> horizon;  ///< entries actually examined
  std::vector<std::size_t> zset;
  std::vector<std::size_t> rin_failures;
  std::vector<std::size_t> krieger_failures;  ///< zset entries violating the divisibility
  std::optional<std::size_t> capped_at;
};

struct ScanSummary {
  std::vector<ScanRow> rows;  ///< grid order
  std::size_t empirical_max_zset_size = 0;  ///< over infinite rows, within horizon
  std::map<Verdict, std::size_t> verdict_counts;
  double runtime_seconds = 0;  ///< wall time; not serialized
};

ScanRow scan_point(const X2DivisiblePoly& g, const Rational& c, std::size_t horizon, std::size_t bit_cap);

/// Output is independent of the thread count.
ScanSummary run_scan(const ScanConfig& config);

inline constexpr const char* kCsvHeader = "c_num,c_den,verdict,witness,horizon,zset,zset_size,rin_failures,capped_at";

void write_csv(std::ostream& out, const ScanSummary& summary);
void write_json(std::ostream& out, const ScanConfig& config, const ScanSummary& summary);

} // namespace zsig
