#include "zsig/scan.hpp"

#include "zsig/zsigmondy.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zsig {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw std::invalid_argument("config: bad value for " + key + ": '" + value + "'");
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(xs[i]);
  }
  return out;
}

} // namespace

void ScanConfig::validate() const {
  if (num_bound < 0) throw std::invalid_argument("num_bound must be >= 0");
  if (den_bound < 1) throw std::invalid_argument("den_bound must be >= 1");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (bit_cap < 1) throw std::invalid_argument("bit_cap must be >= 1");
}

ScanConfig parse_scan_config(std::istream& in) {
  ScanConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key == "poly") cfg.poly = X2DivisiblePoly::parse(value);
    else if (key == "coeffs") cfg.poly = X2DivisiblePoly::from(RatPolynomial::parse_coeffs(value));
    else if (key == "num_bound") cfg.num_bound = parse_number<long>(key, value);
    else if (key == "den_bound") cfg.den_bound = parse_number<long>(key, value);
    else if (key == "horizon") cfg.horizon = parse_number<std::size_t>(key, value);
    else if (key == "bit_cap") cfg.bit_cap = parse_number<std::size_t>(key, value);
    else if (key == "threads") cfg.threads = parse_number<unsigned>(key, value);
    else if (key == "output") cfg.output = value;
    else if (key == "format") {
      if (value == "csv") cfg.format = OutputFormat::Csv;
      else if (value == "json") cfg.format = OutputFormat::Json;
      else throw std::invalid_argument("config: format must be csv or json");
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ScanConfig load_scan_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  return parse_scan_config(in);
}

unsigned effective_threads(const ScanConfig& config) {
  if (const char* env = std::getenv("ZSIG_THREADS"); env && *env) {
    unsigned v = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
    throw std::invalid_argument("ZSIG_THREADS must be a positive integer");
  }
  if (config.threads > 0) return config.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Rational> scan_grid(long A, long B) {
  std::vector<Rational> out;
  if (A <= 0) return out;
  for (long b = 1; b <= B; ++b)
    for (long a = -A; a <= A; ++a)
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

ScanRow scan_point(const X2DivisiblePoly& g, const Rational& c, std::size_t horizon, std::size_t bit_cap) {
  ScanRow row;
  row.c = c;
  row.decision = decide_membership(g, c);
  if (!row.decision.infinite()) return row;
  const OrbitRecord orbit = iterate(g, c, horizon, bit_cap);
  const ZsigmondyReport rep = zsigmondy_set(orbit, horizon);
  row.horizon = rep.horizon;
  row.zset = rep.zset;
  row.rin_failures = rep.rin_failures;
  for (const auto& [n, holds] : rep.krieger_checks)
    if (!holds) row.krieger_failures.push_back(n);
  row.capped_at = orbit.capped_at();
  return row;
}

ScanSummary run_scan(const ScanConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto grid = scan_grid(config.num_bound, config.den_bound);
  ScanSummary summary;
  summary.rows.resize(grid.size());

  // Workers claim indices from a shared cursor and write into their own slot.
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  const auto work = [&] {
    for (std::size_t i; !failed && (i = cursor.fetch_add(1)) < grid.size();) {
      try {
        summary.rows[i] = scan_point(config.poly, grid[i], config.horizon, config.bit_cap);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const unsigned n_threads = std::min<std::size_t>(effective_threads(config), std::max<std::size_t>(grid.size(), 1));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  for (const auto& row : summary.rows) {
    ++summary.verdict_counts[row.decision.verdict];
    if (row.decision.infinite()) summary.empirical_max_zset_size = std::max(summary.empirical_max_zset_size, row.zset.size());
  }
  summary.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

void write_csv(std::ostream& out, const ScanSummary& summary) {
  out << kCsvHeader << '\n';
  for (const auto& r : summary.rows) {
    out << r.c.num().get_str() << ',' << r.c.den().get_str() << ',' << to_string(r.decision.verdict) << ','
        << r.decision.witness() << ',';
    if (r.decision.infinite()) {
      out << *r.horizon << ',' << join(r.zset) << ',' << r.zset.size() << ',' << join(r.rin_failures) << ',';
      if (r.capped_at) out << *r.capped_at;
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const ScanConfig& config, const ScanSummary& summary) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["config"] = {{"poly", config.poly.str()},
                   {"num_bound", config.num_bound},
                   {"den_bound", config.den_bound},
                   {"horizon", config.horizon},
                   {"bit_cap", config.bit_cap}};
  ordered_json rows = ordered_json::array();
  for (const auto& r : summary.rows) {
    ordered_json row;
    row["c_num"] = r.c.num().get_str();
    row["c_den"] = r.c.den().get_str();
    row["verdict"] = to_string(r.decision.verdict);
    row["witness"] = r.decision.witness();
    if (r.decision.infinite()) {
      row["horizon"] = *r.horizon;
      row["zset"] = r.zset;
      row["zset_size"] = r.zset.size();
      row["rin_failures"] = r.rin_failures;
      row["capped_at"] = r.capped_at ? ordered_json(*r.capped_at) : ordered_json(nullptr);
    } else {
      row["horizon"] = nullptr;
      row["zset"] = nullptr;
      row["zset_size"] = nullptr;
      row["rin_failures"] = nullptr;
      row["capped_at"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  ordered_json counts = ordered_json::object();
  for (const auto v : {Verdict::FiniteOrbit, Verdict::InfiniteEscape, Verdict::InfiniteDenominator}) {
    const auto it = summary.verdict_counts.find(v);
    counts[to_string(v)] = it == summary.verdict_counts.end() ? 0 : it->second;
  }
  doc["summary"] = {{"rows", summary.rows.size()},
                    {"empirical_max_zset_size", summary.empirical_max_zset_size},
                    {"verdict_counts", counts}};
  out << doc.dump(2) << '\n';
}

} // namespace zsig
