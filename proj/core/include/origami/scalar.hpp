#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "origami/polynomial.hpp"
#include "origami/rational.hpp"

namespace origami {

/// Element of ℚ(η): numerator/denominator coprime, denominator monic.
/// Numerator and denominator degrees are bounded by degree_cap(); exceeding
/// it raises EtaDegreeCapExceeded instead of truncating.
class RationalFunction {
 public:
  static constexpr int kDefaultDegreeCap = 64;

  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Rational constant);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction eta() { return RationalFunction(Polynomial::x()); }
  static RationalFunction parse(std::string_view text);

  static int degree_cap() noexcept;
  static void set_degree_cap(int cap) noexcept;

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Value at η = at; DivisionByZero if the denominator vanishes there.
  Rational evaluate(const Rational& at) const;

  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

/// Exact field element: a rational, or a rational function in η. Constant
/// rational functions are always demoted to Rational, so equal values have
/// identical representations.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T v) : v_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction f);  // NOLINT(google-explicit-constructor)

  static Scalar eta() { return Scalar(RationalFunction::eta()); }
  /// Rational text ("p/q") unless the text mentions x, in which case a
  /// polynomial or "(num)/(den)" rational function.
  static Scalar parse(std::string_view text);

  bool is_rational() const noexcept { return std::holds_alternative<Rational>(v_); }
  bool is_zero() const noexcept;
  /// Throws NonRationalScalar if η occurs.
  const Rational& rational() const;
  RationalFunction as_function() const;
  Rational evaluate(const Rational& eta_value) const;

  std::string to_string() const;
  std::size_t hash() const noexcept;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

 private:
  std::variant<Rational, RationalFunction> v_;
};

inline bool is_zero(const Rational& r) noexcept { return r.is_zero(); }
inline bool is_zero(const Scalar& s) noexcept { return s.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace origami

template <>
struct std::hash<origami::Scalar> {
  std::size_t operator()(const origami::Scalar& s) const noexcept { return s.hash(); }
};
