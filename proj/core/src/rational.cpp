#include "zsig/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace zsig {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned long e) const {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(n, d);
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  Integer num, den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(s, num)
                      : parse_integer(trim(s.substr(0, slash)), num) &&
                            parse_integer(trim(s.substr(slash + 1)), den);
  if (!ok) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

double ln_abs(const Integer& x) {
  if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double ln_abs(const Rational& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  return ln_abs(x.num_ref()) - ln_abs(x.den_ref());
}

std::size_t bit_length(const Integer& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t RationalHash::operator()(const Rational& r) const noexcept {
  // Low limbs are enough to spread values; equality decides collisions.
  const auto limb = [](const mpz_class& z) -> std::size_t {
    return mpz_size(z.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
  };
  std::size_t h = limb(r.num_ref()) * 0x9e3779b97f4a7c15ULL;
  h ^= limb(r.den_ref()) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(mpz_size(r.num_ref().get_mpz_t())) << 1;
  return h ^ static_cast<std::size_t>(r.sign() + 1);
}

} // namespace zsig
