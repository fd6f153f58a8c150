#include "origami/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <ostream>

#include "origami/error.hpp"

namespace origami {

namespace {

std::atomic<int> g_degree_cap{RationalFunction::kDefaultDegreeCap};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

int RationalFunction::degree_cap() noexcept { return g_degree_cap.load(); }
void RationalFunction::set_degree_cap(int cap) noexcept { g_degree_cap.store(cap); }

RationalFunction::RationalFunction(Rational constant) : num_(std::move(constant)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(Rational(1)) {
  canonicalize();
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    const Rational inv = lead.reciprocal();
    num_ *= inv;
    den_ *= inv;
  }
  const int cap = degree_cap();
  if (num_.degree() > cap || den_.degree() > cap) {
    throw Error(Errc::EtaDegreeCapExceeded,
                "eta degree " + std::to_string(std::max(num_.degree(), den_.degree())) + " exceeds cap " +
                    std::to_string(cap));
  }
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational d = den_.evaluate(at);
  if (d.is_zero()) throw Error(Errc::DivisionByZero, "denominator vanishes at eta = " + at.to_string());
  return num_.evaluate(at) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::size_t RationalFunction::hash() const noexcept {
  std::size_t seed = num_.hash();
  hash_combine(seed, den_.hash());
  return seed;
}

RationalFunction RationalFunction::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (!s.empty() && s.front() == '(') {
    const auto close = s.find(')');
    if (close == std::string_view::npos) throw Error(Errc::Parse, "bad rational function '" + std::string(text) + "'");
    const auto num = s.substr(1, close - 1);
    auto rest = trim(s.substr(close + 1));
    if (rest.empty()) return RationalFunction(Polynomial::parse(num));
    if (rest.front() != '/') throw Error(Errc::Parse, "bad rational function '" + std::string(text) + "'");
    rest = trim(rest.substr(1));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
      throw Error(Errc::Parse, "bad rational function '" + std::string(text) + "'");
    }
    return RationalFunction(Polynomial::parse(num), Polynomial::parse(rest.substr(1, rest.size() - 2)));
  }
  return RationalFunction(Polynomial::parse(s));
}

// ---- Scalar ----

Scalar::Scalar(RationalFunction f) {
  if (f.is_constant()) {
    v_ = f.numerator().coefficient(0);
  } else {
    v_ = std::move(f);
  }
}

Scalar Scalar::parse(std::string_view text) {
  if (text.find('x') == std::string_view::npos) return Scalar(Rational::parse(text));
  return Scalar(RationalFunction::parse(text));
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
  return std::get<RationalFunction>(v_).is_zero();
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  throw Error(Errc::NonRationalScalar, "scalar depends on eta: " + to_string());
}

RationalFunction Scalar::as_function() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return RationalFunction(*r);
  return std::get<RationalFunction>(v_);
}

Rational Scalar::evaluate(const Rational& eta_value) const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  return std::get<RationalFunction>(v_).evaluate(eta_value);
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, v_);
}

std::size_t Scalar::hash() const noexcept {
  return std::visit([](const auto& v) { return v.hash(); }, v_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) += std::get<Rational>(o.v_);
  } else {
    *this = Scalar(as_function() + o.as_function());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) -= std::get<Rational>(o.v_);
  } else {
    *this = Scalar(as_function() - o.as_function());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) *= std::get<Rational>(o.v_);
  } else {
    *this = Scalar(as_function() * o.as_function());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) /= std::get<Rational>(o.v_);
  } else {
    *this = Scalar(as_function() / o.as_function());
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  if (a.is_rational()) return Scalar(-std::get<Rational>(a.v_));
  return Scalar(-std::get<RationalFunction>(a.v_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace origami
