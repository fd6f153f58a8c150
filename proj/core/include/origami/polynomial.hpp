#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "origami/rational.hpp"

namespace origami {

/// Univariate polynomial over the rationals in the formal indeterminate η,
/// printed with the variable name `x`. Coefficients are stored lowest degree
/// first with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);

  /// c·x^k
  static Polynomial monomial(Rational c, std::size_t k);
  static Polynomial x() { return monomial(Rational(1), 1); }

  /// Grammar: term (('+' | '-') term)*, term = [rational ['*']] ['x' ['^' n]].
  static Polynomial parse(std::string_view text);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational evaluate(const Rational& at) const;
  Polynomial monic() const;
  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string to_string() const;
  std::size_t hash() const noexcept;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& k);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace origami
