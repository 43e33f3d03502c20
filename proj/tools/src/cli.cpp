#include "cli.hpp"

#include "zsig/arith.hpp"
#include "zsig/constants.hpp"
#include "zsig/orbit.hpp"
#include "zsig/poly.hpp"
#include "zsig/scan.hpp"
#include "zsig/verify.hpp"
#include "zsig/zsigmondy.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zsig::cli {

namespace {

struct Options {
  std::string poly;
  std::string coeffs;
  std::string c;
  std::string u;
  std::size_t horizon = 8;
  std::size_t bit_cap = kDefaultBitCap;
  bool full = false;
  long num_bound = 1;
  long den_bound = 1;
  unsigned threads = 0;
  std::string output;
  std::string format = "csv";
  std::string config;
  std::string L;
  unsigned N = 0;
  std::uint64_t index_limit = 100'000;
  unsigned cases = 200;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t verify_bit_cap = VerifyOptions{}.bit_cap;
};

RatPolynomial read_rat_poly(const Options& o) {
  if (!o.poly.empty() && !o.coeffs.empty()) throw std::invalid_argument("give --poly or --coeffs, not both");
  if (!o.coeffs.empty()) return RatPolynomial::parse_coeffs(o.coeffs);
  if (!o.poly.empty()) return RatPolynomial::parse(o.poly);
  throw std::invalid_argument("missing --poly or --coeffs");
}

X2DivisiblePoly read_poly(const Options& o) { return X2DivisiblePoly::from(read_rat_poly(o)); }

Rational read_c(const Options& o) {
  if (o.c.empty()) throw std::invalid_argument("missing --c");
  return Rational::parse(o.c);
}

std::string brief(const Integer& x, bool full) {
  std::string s = x.get_str();
  const std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
  if (full || digits <= 40) return s;
  return s.substr(0, s.size() - digits + 12) + "..." + s.substr(s.size() - 12) + " (" + std::to_string(digits) +
         " digits)";
}

std::string join_primes(const std::map<Integer, unsigned long>& vals) {
  std::string out;
  for (const auto& [p, v] : vals) {
    if (!out.empty()) out += ' ';
    out += p.get_str() + "^" + std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

std::string set_str(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "}";
}

void print_decision(std::ostream& out, const MembershipDecision& d) {
  out << "verdict: " << to_string(d.verdict) << " (" << d.witness() << ")\n";
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const auto g = read_poly(o);
  const auto c = read_c(o);
  const auto orbit = iterate(g, c, o.horizon, o.bit_cap);
  out << "g = " << g.str() << ", c = " << c << '\n';
  print_decision(out, decide_membership(g, c));
  out << "n\tN_n\tM_n\tbits(N)\tbits(M)\tI(M_n)\n";
  for (std::size_t n = 1; n <= orbit.size(); ++n) {
    const auto& e = orbit.entry(n);
    out << n << '\t' << brief(e.num, o.full) << '\t' << brief(e.den, o.full) << '\t' << bit_length(e.num) << '\t'
        << bit_length(e.den) << '\t' << join_primes(e.den_valuations) << '\n';
  }
  if (orbit.capped_at()) out << "stopped at n = " << *orbit.capped_at() << " (bit cap " << o.bit_cap << ")\n";
  return kExitOk;
}

int cmd_zsigmondy(const Options& o, std::ostream& out) {
  const auto g = read_poly(o);
  const auto c = read_c(o);
  const auto decision = decide_membership(g, c);
  out << "g = " << g.str() << ", c = " << c << '\n';
  print_decision(out, decision);
  if (!decision.infinite()) throw std::domain_error("orbit of 0 is finite; the Zsigmondy set is not defined");
  const auto orbit = iterate(g, c, o.horizon, o.bit_cap);
  const auto rep = zsigmondy_set(orbit, o.horizon, true);
  out << "n\tprimitive\twitness\tremainder_bits\tnumerator_growth\n";
  for (std::size_t n = 1; n <= rep.horizon; ++n) {
    const auto& v = rep.verdicts[n - 1];
    const bool rin_fails = std::binary_search(rep.rin_failures.begin(), rep.rin_failures.end(), n);
    out << n << '\t' << (v.has_primitive ? "yes" : "no") << '\t'
        << (v.witness_prime ? v.witness_prime->get_str() : std::string("-")) << '\t' << v.stripped_remainder_bits << '\t'
        << (rin_fails ? "fails" : "holds") << '\n';
  }
  out << "zset (within horizon " << rep.horizon << "): " << set_str(rep.zset) << '\n';
  for (const auto& [n, holds] : rep.krieger_checks)
    out << "divisibility at n = " << n << ": " << (holds ? "holds" : "FAILS") << '\n';
  if (orbit.capped_at()) out << "stopped at n = " << *orbit.capped_at() << " (bit cap " << o.bit_cap << ")\n";
  return kExitOk;
}

int cmd_scan(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  ScanConfig cfg = o.config.empty() ? ScanConfig{} : load_scan_config(o.config);
  const auto given = [&](const char* name) { return sub.get_option(name)->count() > 0; };
  if (given("--poly") || given("--coeffs")) cfg.poly = read_poly(o);
  else if (o.config.empty()) throw std::invalid_argument("missing --poly or --coeffs");
  if (given("--num-bound")) cfg.num_bound = o.num_bound;
  if (given("--den-bound")) cfg.den_bound = o.den_bound;
  if (given("--horizon")) cfg.horizon = o.horizon;
  if (given("--bit-cap")) cfg.bit_cap = o.bit_cap;
  if (given("--threads")) cfg.threads = o.threads;
  if (given("--output")) cfg.output = o.output;
  if (given("--format")) cfg.format = o.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  cfg.validate();

  const auto summary = run_scan(cfg);
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + cfg.output);
  }
  std::ostream& sink = cfg.output.empty() ? out : file;
  if (cfg.format == OutputFormat::Json) write_json(sink, cfg, summary);
  else write_csv(sink, summary);

  err << "rows=" << summary.rows.size() << " empirical_max_zset_size=" << summary.empirical_max_zset_size;
  for (const auto& [v, n] : summary.verdict_counts) err << ' ' << to_string(v) << '=' << n;
  err << " runtime=" << std::fixed << std::setprecision(3) << summary.runtime_seconds << "s\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.index_limit = o.index_limit;
  vo.random_cases = o.cases;
  vo.seed = o.seed;
  vo.bit_cap = o.verify_bit_cap;
  bool ok = true;
  for (const auto& r : run_verification_suite(vo)) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.module << ": " << r.name << " (" << r.cases << " cases)";
    if (!r.passed) out << " -- " << r.detail;
    out << '\n';
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const auto g = read_poly(o);
  std::optional<Rational> L;
  if (!o.L.empty()) L = Rational::parse(o.L);
  std::optional<unsigned> N;
  if (o.N > 0) N = o.N;
  const auto r = bound_report(g, L, N);
  out << "g = " << g.str() << '\n'
      << "d = " << r.d << "\nu_d = " << r.ud << "\nL_g = " << r.length << '\n'
      << "N0 = " << r.N0 << "\nN1 = " << r.N1 << "\nN2 = " << r.N2 << '\n'
      << "D = " << r.D << " (L = " << r.D_radius << ", N = " << r.D_depth << ")\n"
      << std::setprecision(12) << "W(d^N0, 1/10) = " << r.W_value << '\n';
  for (const auto& [name, n] : r.region_thresholds) out << "threshold[" << name << "] = " << n << '\n';
  return kExitOk;
}

void print_certificate(std::ostream& out, const NormalizationCertificate& nc) {
  out << "f = " << nc.source.str() << '\n'
      << "critical point u = " << nc.critical_point << '\n'
      << "shift constant f(u) - u = " << nc.shift_constant << '\n'
      << "t = " << nc.t << '\n'
      << "h = " << nc.target.str() << '\n'
      << "parameter map: " << nc.param_map() << '\n'
      << "distortion bound = " << nc.zsigmondy_distortion_bound << '\n'
      << "degree-2 regime: " << (nc.krieger_regime ? "yes" : "no") << '\n'
      << "recomposition check: " << (nc.verify() ? "ok" : "FAILED") << '\n';
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const auto f = read_rat_poly(o);
  std::vector<Rational> points;
  if (!o.u.empty()) points.push_back(Rational::parse(o.u));
  else points = critical_points_rational(f);
  if (points.empty()) throw std::invalid_argument("f has no rational critical point; pass --u");
  bool ok = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << '\n';
    const auto nc = normalize_to_x2_divisible(f, points[i]);
    print_certificate(out, nc);
    ok = ok && nc.verify();
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zsigmondy sets and critical orbits of polynomial families", "zsig"};
  app.require_subcommand(1);
  Options o;

  const auto add_poly = [&](CLI::App* s) {
    s->add_option("--poly", o.poly, "polynomial, e.g. \"x^3+x^2\"");
    s->add_option("--coeffs", o.coeffs, "coefficients by power, e.g. \"0,0,1,1\"");
  };
  const auto add_orbit = [&](CLI::App* s) {
    add_poly(s);
    s->add_option("--c", o.c, "parameter a or a/b")->required();
    s->add_option("--horizon", o.horizon, "number of iterates")->check(CLI::PositiveNumber);
    s->add_option("--bit-cap", o.bit_cap, "stop once a term needs more bits")->check(CLI::PositiveNumber);
  };

  auto* orbit = app.add_subcommand("orbit", "print the critical orbit");
  add_orbit(orbit);
  orbit->add_flag("--full", o.full, "print integers in full");

  auto* zs = app.add_subcommand("zsigmondy", "primitive divisors and the Zsigmondy set");
  add_orbit(zs);

  auto* scan = app.add_subcommand("scan", "classify a grid of parameters");
  add_poly(scan);
  scan->add_option("--num-bound", o.num_bound, "|a| bound")->check(CLI::NonNegativeNumber);
  scan->add_option("--den-bound", o.den_bound, "b bound")->check(CLI::PositiveNumber);
  scan->add_option("--horizon", o.horizon)->check(CLI::PositiveNumber);
  scan->add_option("--bit-cap", o.bit_cap)->check(CLI::PositiveNumber);
  scan->add_option("--threads", o.threads, "worker threads (ZSIG_THREADS overrides)");
  scan->add_option("--output", o.output, "output file (default stdout)");
  scan->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--config", o.config, "key=value config file")->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--index-limit", o.index_limit, "upper n for the index lemmas")->check(CLI::Range(30, 10'000'000));
  verify->add_option("--cases", o.cases, "random orbits");
  verify->add_option("--seed", o.seed);
  verify->add_option("--bit-cap", o.verify_bit_cap, "orbit bit cap for the suite")->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "explicit constants for g");
  add_poly(bounds);
  bounds->add_option("--L", o.L, "parameter radius for D (default 4 L_g)");
  bounds->add_option("--N", o.N, "iterate depth for D (default N0)")->check(CLI::PositiveNumber);

  auto* normalize = app.add_subcommand("normalize", "reduce f at a critical point to an x^2-divisible map");
  add_poly(normalize);
  normalize->add_option("--u", o.u, "critical point (default: every rational one)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (zs->parsed()) return cmd_zsigmondy(o, out);
    if (scan->parsed()) return cmd_scan(o, *scan, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    return cmd_normalize(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

} // namespace zsig::cli
