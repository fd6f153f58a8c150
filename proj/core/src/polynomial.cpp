#include "origami/polynomial.hpp"

#include <cctype>
#include <string>

#include "origami/error.hpp"

namespace origami {

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(Rational c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  return *this * c_.back().reciprocal();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational lead_inv = divisor.leading().reciprocal();
  for (int k = degree(); k >= dd; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const Rational f = top * lead_inv;
    quot[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].to_string();
    if (k == 1) out += "*x";
    if (k > 1) out += "*x^" + std::to_string(k);
  }
  return out;
}

std::size_t Polynomial::hash() const noexcept {
  std::size_t seed = c_.size();
  for (const auto& c : c_) hash_combine(seed, c.hash());
  return seed;
}

namespace {

Polynomial parse_term(std::string_view t, std::string_view whole) {
  auto fail = [&] { return Error(Errc::Parse, "bad polynomial '" + std::string(whole) + "'"); };
  if (t.empty()) throw fail();
  const auto xpos = t.find('x');
  if (xpos == std::string_view::npos) return Polynomial(Rational::parse(t));
  std::string_view coeff = t.substr(0, xpos);
  if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
  Rational c(1);
  if (coeff == "-") {
    c = Rational(-1);
  } else if (!coeff.empty() && coeff != "+") {
    c = Rational::parse(coeff);
  }
  std::string_view rest = t.substr(xpos + 1);
  std::size_t k = 1;
  if (!rest.empty()) {
    if (rest.front() != '^' || rest.size() < 2) throw fail();
    k = 0;
    for (char ch : rest.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail();
      k = k * 10 + static_cast<std::size_t>(ch - '0');
      if (k > 100000) throw fail();
    }
  }
  return Polynomial::monomial(c, k);
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw Error(Errc::Parse, "empty polynomial");
  Polynomial out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const bool at_end = i == s.size();
    const bool split = at_end || ((s[i] == '+' || s[i] == '-') &&
                                  std::string_view("+-*/^").find(s[i - 1]) == std::string_view::npos);
    if (!split) continue;
    std::string_view term(s.data() + start, i - start);
    if (!term.empty() && term.front() == '+') term.remove_prefix(1);
    out += parse_term(term, text);
    if (!at_end) start = s[i] == '+' ? i + 1 : i;
  }
  return out;
}

}  // namespace origami
