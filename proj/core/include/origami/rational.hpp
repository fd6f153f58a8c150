#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace origami {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : q_(value) {}        // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return q_; }
  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational reciprocal() const;

  /// Largest integer not exceeding the value.
  Integer floor() const;
  Integer ceil() const;

  std::string to_string() const { return q_.get_str(); }
  std::size_t hash() const noexcept;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::size_t hash_integer(const Integer& z) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace origami

template <>
struct std::hash<origami::Rational> {
  std::size_t operator()(const origami::Rational& r) const noexcept { return r.hash(); }
};
