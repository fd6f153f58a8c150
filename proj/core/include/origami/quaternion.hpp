#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "origami/geometry.hpp"

namespace origami {

/// Hamilton quaternion a + b i + c j + d k with rational components.
/// i² = j² = k² = ijk = −1.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational a, Rational b, Rational c, Rational d)
      : q_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  explicit Quaternion(const Rational& real) : q_{real, Rational(0), Rational(0), Rational(0)} {}
  /// Coordinates (a, b, c, d) of a point of ℚ⁴; DimensionMismatch otherwise.
  static Quaternion from_point(std::span<const Rational> p);
  static Quaternion i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
  static Quaternion j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
  static Quaternion k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

  const Rational& operator[](std::size_t idx) const { return q_[idx]; }
  const Rational& real() const noexcept { return q_[0]; }
  bool is_zero() const;
  bool is_real() const;
  Point to_point() const { return {q_.begin(), q_.end()}; }

  Quaternion conj() const;
  Rational norm() const;  // q·conj(q)

  /// "a + b i + c j + d k".
  std::string to_string() const;

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator-(const Quaternion& x);
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator*(const Rational& s, const Quaternion& x);
  friend bool operator==(const Quaternion&, const Quaternion&) = default;

 private:
  std::array<Rational, 4> q_;
};

inline Quaternion qmul(const Quaternion& x, const Quaternion& y) { return x * y; }
/// conj(x) / norm(x); ZeroQuaternion for x = 0.
Quaternion qinv(const Quaternion& x);

/// [[p, q]]_{α, β} in the quaternion closed form
///   r = [β·conj(p − q) − (p − q)·β̄]·(αβ̄ − βᾱ)⁻¹,  point = p + rα,
/// which is invariant under real rescaling of α and β. Returns nullopt when
/// αβ̄ − βᾱ = 0, when r is not real, or when p + rα is not on q + ℝβ.
/// ZeroDirection for α = 0 or β = 0.
std::optional<Quaternion> quat_intersect(const Quaternion& p, const Quaternion& q, const Quaternion& alpha,
                                         const Quaternion& beta);

using OrderTable = std::vector<std::vector<std::optional<Quaternion>>>;

/// table[a][b] = [[0, 1]]_{U[a], U[b]}: the first angle of the pair indexes
/// rows, the second indexes columns.
OrderTable order_table(std::span<const Quaternion> angles);

/// {1, i, i−1, j, j−1, k, k−1}.
std::vector<Quaternion> lipschitz_angles();
/// {1, i, i−1, j, j−1, (1+i+j+k)/2, (1−i−j−k)/2}.
std::vector<Quaternion> hurwitz_angles();

/// Compact cell text: "∅", or a sum of nonzero terms such as "1 - i".
std::string table_cell(const std::optional<Quaternion>& cell);
/// Aligned markdown table; the header row lists the column angles.
std::string order_table_markdown(std::span<const Quaternion> angles, const OrderTable& table);
std::string order_table_csv(std::span<const Quaternion> angles, const OrderTable& table);

}  // namespace origami
