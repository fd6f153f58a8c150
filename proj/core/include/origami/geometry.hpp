#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "origami/vector.hpp"

namespace origami {

/// A direction (an "angle") up to nonzero scaling, sign included. The stored
/// representative is canonical, so two directions are equal iff their
/// coordinates are identical:
///   rational: integer entries with gcd 1, first nonzero entry positive;
///   over ℚ(η): primitive polynomial entries in ℤ[η] (no common polynomial
///   factor, integer content 1), first nonzero entry with positive leading
///   coefficient.
template <class F>
class BasicDirection {
 public:
  BasicDirection() = default;
  explicit BasicDirection(std::span<const F> v);
  explicit BasicDirection(const Vector<F>& v) : BasicDirection(std::span<const F>(v)) {}

  const Vector<F>& coords() const noexcept { return c_; }
  std::size_t dimension() const noexcept { return c_.size(); }
  std::string to_string() const { return format_point<F>(c_); }

  friend bool operator==(const BasicDirection&, const BasicDirection&) = default;

 private:
  Vector<F> c_;
};

using Direction = BasicDirection<Rational>;
using EtaDirection = BasicDirection<Scalar>;

/// Throws ZeroVector for v = 0 and DimensionMismatch for n < 2.
Direction canonicalize_direction(std::span<const Rational> v);
EtaDirection canonicalize_direction(std::span<const Scalar> v);

/// The distinguished direction 1 = (1, 0, …, 0).
Direction unit_direction(std::size_t n);

EtaDirection to_eta(const Direction& d);

struct Identical {};
struct ParallelDistinct {};
struct Skew {};

template <class F>
struct Intersecting {
  Vector<F> point;
  F r;  // point = p + r·alpha for the representatives passed in
  F s;  // point = q + s·beta
};

template <class F>
using LineRelation = std::variant<Identical, ParallelDistinct, Intersecting<F>, Skew>;

/// Relation between the lines p + ℝα and q + ℝβ, found by exact elimination on
/// the n×2 system rα − sβ = q − p. Works on any nonzero representatives.
template <class F>
LineRelation<F> line_relation(std::span<const F> p, std::span<const F> alpha, std::span<const F> q,
                              std::span<const F> beta);

template <class F>
LineRelation<F> line_relation(const Vector<F>& p, const BasicDirection<F>& alpha, const Vector<F>& q,
                              const BasicDirection<F>& beta) {
  return line_relation<F>(std::span<const F>(p), std::span<const F>(alpha.coords()), std::span<const F>(q),
                          std::span<const F>(beta.coords()));
}

/// [[p, q]]_{α,β}: the unique common point, or nullopt when there is none.
template <class F>
std::optional<Vector<F>> intersect(std::span<const F> p, std::span<const F> q, std::span<const F> alpha,
                                   std::span<const F> beta) {
  auto rel = line_relation<F>(p, alpha, q, beta);
  if (auto* hit = std::get_if<Intersecting<F>>(&rel)) return std::move(hit->point);
  return std::nullopt;
}

template <class F>
std::optional<Vector<F>> intersect(const Vector<F>& p, const Vector<F>& q, const BasicDirection<F>& alpha,
                                   const BasicDirection<F>& beta) {
  return intersect<F>(std::span<const F>(p), std::span<const F>(q), std::span<const F>(alpha.coords()),
                      std::span<const F>(beta.coords()));
}

/// Planar closed form using complex arithmetic on coordinate pairs. Throws
/// SameDirection when αβ̄ − ᾱβ = 0 and DimensionMismatch outside dimension 2.
/// The closed form is invariant under real rescaling of α and β, so any
/// representatives may be passed.
Point intersect_complex(std::span<const Rational> p, std::span<const Rational> q,
                        std::span<const Rational> alpha, std::span<const Rational> beta);
Point intersect_complex(const Point& p, const Point& q, const Direction& alpha, const Direction& beta);

// ---- implementation ----

Vector<Rational> canonical_coords(std::span<const Rational> v);
Vector<Scalar> canonical_coords(std::span<const Scalar> v);

template <class F>
BasicDirection<F>::BasicDirection(std::span<const F> v) : c_(canonical_coords(v)) {}

template <class F>
LineRelation<F> line_relation(std::span<const F> p, std::span<const F> alpha, std::span<const F> q,
                              std::span<const F> beta) {
  require_same_dimension<F>(p, alpha);
  require_same_dimension<F>(p, q);
  require_same_dimension<F>(p, beta);
  if (is_zero_vector<F>(alpha) || is_zero_vector<F>(beta)) {
    throw Error(Errc::ZeroVector, "line direction is the zero vector");
  }
  const std::size_t n = p.size();
  // Rows (α_k, −β_k | q_k − p_k).
  std::vector<std::array<F, 3>> m(n);
  for (std::size_t k = 0; k < n; ++k) m[k] = {alpha[k], -beta[k], q[k] - p[k]};

  std::size_t p0 = 0;
  while (is_zero(m[p0][0])) ++p0;  // α ≠ 0
  std::swap(m[0], m[p0]);
  for (std::size_t k = 1; k < n; ++k) {
    if (is_zero(m[k][0])) continue;
    const F f = m[k][0] / m[0][0];
    m[k][1] -= f * m[0][1];
    m[k][2] -= f * m[0][2];
  }
  std::size_t p1 = 1;
  while (p1 < n && is_zero(m[p1][1])) ++p1;
  if (p1 == n) {
    for (std::size_t k = 1; k < n; ++k) {
      if (!is_zero(m[k][2])) return ParallelDistinct{};
    }
    return Identical{};
  }
  std::swap(m[1], m[p1]);
  for (std::size_t k = 2; k < n; ++k) {
    if (is_zero(m[k][1])) {
      if (!is_zero(m[k][2])) return Skew{};
      continue;
    }
    const F f = m[k][1] / m[1][1];
    if (!is_zero(m[k][2] - f * m[1][2])) return Skew{};
  }
  F s = m[1][2] / m[1][1];
  F r = (m[0][2] - m[0][1] * s) / m[0][0];
  Vector<F> point(p.begin(), p.end());
  for (std::size_t k = 0; k < n; ++k) point[k] += r * alpha[k];
  return Intersecting<F>{std::move(point), std::move(r), std::move(s)};
}

}  // namespace origami
