#include "zsig/poly.hpp"

#include "zsig/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zsig {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

namespace {

[[noreturn]] void bad_poly(std::string_view text, const std::string& why) {
  throw std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
}

Rational parse_coefficient(std::string_view s, std::string_view whole) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument&) {
    bad_poly(whole, "bad coefficient '" + std::string(s) + "'");
  }
}

} // namespace

RatPolynomial RatPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) bad_poly(text, "empty");

  std::map<unsigned long, Rational> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad_poly(text, "expected '+' or '-'");
    }
    std::size_t j = i;
    int depth = 0;
    while (j < s.size() && (depth > 0 || (s[j] != '+' && s[j] != '-'))) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      ++j;
    }
    const std::string_view term(s.data() + i, j - i);
    if (term.empty()) bad_poly(text, "empty term");

    const auto xpos = term.find('x');
    Rational coef = 1;
    unsigned long power = 0;
    if (xpos == std::string_view::npos) {
      coef = parse_coefficient(term, text);
    } else {
      auto head = term.substr(0, xpos);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (!head.empty()) coef = parse_coefficient(head, text);
      auto tail = term.substr(xpos + 1);
      power = 1;
      if (!tail.empty()) {
        if (tail.front() != '^' || tail.size() < 2) bad_poly(text, "expected '^<power>' after x");
        tail.remove_prefix(1);
        if (!std::all_of(tail.begin(), tail.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
          bad_poly(text, "bad exponent");
        power = std::stoul(std::string(tail));
        if (power > 4096) bad_poly(text, "exponent too large");
      }
    }
    terms[power] += sign < 0 ? -coef : coef;
    i = j;
  }
  std::vector<Rational> coeffs(terms.rbegin()->first + 1);
  for (const auto& [p, c] : terms) coeffs[p] = c;
  return RatPolynomial(std::move(coeffs));
}

RatPolynomial RatPolynomial::parse_coeffs(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    coeffs.push_back(Rational::parse(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RatPolynomial(std::move(coeffs));
}

Rational RatPolynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::taylor_shift(const Rational& a) const {
  // Repeated synthetic division by (x - a).
  std::vector<Rational> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i > k; --i) c[i - 1] += a * c[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::scale_argument(const Rational& s) const {
  std::vector<Rational> c = coeffs_;
  Rational power = 1;
  for (auto& v : c) {
    v *= power;
    power *= s;
  }
  return RatPolynomial(std::move(c));
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial RatPolynomial::operator*(const Rational& s) const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v *= s;
  return RatPolynomial(std::move(c));
}

std::string RatPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

X2DivisiblePoly::X2DivisiblePoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() < 3) throw std::invalid_argument("x^2-divisible polynomial needs degree >= 2");
  if (coeffs_[0] != 0 || coeffs_[1] != 0)
    throw std::invalid_argument("x^2-divisible polynomial must have zero constant and linear terms");
}

X2DivisiblePoly X2DivisiblePoly::from(const RatPolynomial& p) {
  std::vector<Integer> c;
  for (const auto& r : p.coeffs()) {
    if (!r.is_integer()) throw std::invalid_argument("polynomial " + p.str() + " has non-integer coefficients");
    c.push_back(r.num());
  }
  return X2DivisiblePoly(std::move(c));
}

bool X2DivisiblePoly::is_monomial() const {
  return std::all_of(coeffs_.begin(), coeffs_.end() - 1, [](const Integer& v) { return v == 0; });
}

Rational X2DivisiblePoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

RatPolynomial X2DivisiblePoly::to_rational() const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

Rational length(const X2DivisiblePoly& g) {
  Integer sum = 0;
  for (unsigned i = 2; i < g.degree(); ++i) sum += abs(g.u(i));
  return Rational(1) + Rational(sum, abs(g.leading()));
}

namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
  const auto f = factor_small(n);
  if (!f.complete()) throw std::runtime_error("cannot enumerate divisors of " + n.get_str());
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

} // namespace

std::vector<Rational> critical_points_rational(const RatPolynomial& f) {
  if (f.degree() < 2) return {};
  const RatPolynomial df = f.derivative();
  // Clear denominators to get an integer polynomial with the same roots.
  Integer l = 1;
  for (const auto& c : df.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  std::vector<Integer> p;
  for (const auto& c : df.coeffs()) p.push_back((c * Rational(l)).num());

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (p.size() - low >= 2) {
    const RatPolynomial reduced(std::vector<Rational>(df.coeffs().begin() + static_cast<long>(low), df.coeffs().end()));
    for (const auto& num : positive_divisors(p[low]))
      for (const auto& den : positive_divisors(p.back()))
        for (const int s : {1, -1}) {
          const Rational cand(Integer(num * s), den);
          if (reduced(cand).is_zero()) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

ShiftResult shift_to_origin(const RatPolynomial& f, const Rational& u) {
  if (!f.derivative()(u).is_zero())
    throw std::invalid_argument(u.str() + " is not a critical point of " + f.str());
  std::vector<Rational> c = f.taylor_shift(u).coeffs();
  if (!c.empty()) c[0] = Rational();
  return {RatPolynomial(std::move(c)), f(u) - u};
}

ScaleResult scale_to_integer(const RatPolynomial& g0) {
  if (g0.degree() < 2 || !g0.coeff(0).is_zero() || !g0.coeff(1).is_zero())
    throw std::invalid_argument("scale_to_integer expects an x^2-divisible polynomial of degree >= 2: " + g0.str());
  const std::size_t d = g0.degree();
  if (d == 2) {
    const Rational t = Rational(1) / g0.leading();
    return {X2DivisiblePoly({0, 0, 1}), t};
  }
  // v_p(t) >= ceil(v_p(den u_i) / (i - 1)) for every i and prime p.
  std::map<Integer, unsigned long> need;
  for (std::size_t i = 2; i <= d; ++i) {
    const Rational& ui = g0.coeff(i);
    if (ui.is_zero() || ui.den() == 1) continue;
    const auto f = factor_small(ui.den());
    if (!f.complete()) throw std::runtime_error("cannot factor denominator " + ui.den().get_str());
    for (const auto& [p, e] : f.factors) {
      const unsigned long k = (e + i - 2) / (i - 1);
      auto& slot = need[p];
      slot = std::max(slot, k);
    }
  }
  Integer t = 1;
  for (const auto& [p, k] : need) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    t *= pk;
  }
  std::vector<Integer> h(d + 1, 0);
  Integer tp = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    if (i >= 2) {
      const Rational v = g0.coeff(i) * Rational(tp);
      if (!v.is_integer()) throw std::logic_error("scale_to_integer: t does not clear denominators");
      h[i] = v.num();
    }
    tp *= t;
  }
  return {X2DivisiblePoly(std::move(h)), Rational(t)};
}

std::string NormalizationCertificate::param_map() const {
  std::ostringstream os;
  os << "c -> (c";
  if (shift_constant.sign() != 0) os << (shift_constant.sign() < 0 ? " - " : " + ") << shift_constant.abs();
  os << ")";
  if (t != Rational(1)) os << " / " << t;
  return os.str();
}

bool NormalizationCertificate::verify() const {
  const RatPolynomial target_q = target.to_rational();
  const Rational fu = source(critical_point);
  for (long x = 0; x <= static_cast<long>(source.degree()); ++x) {
    const Rational lhs = (source(t * Rational(x) + critical_point) - fu) / t;
    if (lhs != target_q(Rational(x))) return false;
  }
  return true;
}

NormalizationCertificate normalize_to_x2_divisible(const RatPolynomial& f, const Rational& u) {
  if (f.degree() < 2) throw std::invalid_argument("normalization needs degree >= 2");
  auto [g0, shift] = shift_to_origin(f, u);
  auto [h, t] = scale_to_integer(g0);
  const unsigned distortion = (t.num() == 1 || t.num() == -1 ? 0 : omega(t.num())) + (t.den() == 1 ? 0 : omega(t.den()));
  NormalizationCertificate cert{f, u, shift, t, std::move(h), distortion, f.degree() == 2};
  if (!cert.verify()) throw std::logic_error("normalization certificate failed its own identity check");
  return cert;
}

std::vector<Rational> critical_orbit_offsets(const RatPolynomial& f, const Rational& u, const Rational& c,
                                             unsigned horizon) {
  std::vector<Rational> out;
  out.reserve(horizon);
  Rational z = u;
  for (unsigned n = 0; n < horizon; ++n) {
    z = f(z) + c;
    out.push_back(z - u);
  }
  return out;
}

} // namespace zsig
