#include "origami/rational.hpp"

#include <cctype>
#include <ostream>

#include "origami/error.hpp"

namespace origami {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  q_.get_num() = numerator;
  q_.get_den() = denominator;
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  Integer num;
  Integer den = 1;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw Error(Errc::Parse, "bad rational '" + std::string(text) + "'");
  } else {
    const auto d = trim(s.substr(slash + 1));
    if (!parse_integer(trim(s.substr(0, slash)), num) || !parse_integer(d, den) || d.front() == '-') {
      throw Error(Errc::Parse, "bad rational '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t hash_integer(const Integer& z) noexcept {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(p)) + 0x51ed27;
  const std::size_t n = mpz_size(p);
  const mp_limb_t* limbs = mpz_limbs_read(p);
  for (std::size_t i = 0; i < n; ++i) hash_combine(seed, static_cast<std::size_t>(limbs[i]));
  return seed;
}

std::size_t Rational::hash() const noexcept {
  std::size_t seed = hash_integer(q_.get_num());
  hash_combine(seed, hash_integer(q_.get_den()));
  return seed;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace origami
