#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "origami/error.hpp"
#include "origami/rational.hpp"
#include "origami/scalar.hpp"

namespace origami {

/// Coordinates over an exact field (Rational or Scalar).
template <class F>
using Vector = std::vector<F>;

/// Point of ℚⁿ; every construction in the lattice and generation code lives here.
using Point = Vector<Rational>;
/// Point whose coordinates may involve η.
using EtaPoint = Vector<Scalar>;

template <class F>
void require_same_dimension(std::span<const F> a, std::span<const F> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch,
                "dimensions " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

template <class F>
Vector<F> operator+(const Vector<F>& a, const Vector<F>& b) {
  require_same_dimension<F>(a, b);
  Vector<F> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

template <class F>
Vector<F> operator-(const Vector<F>& a, const Vector<F>& b) {
  require_same_dimension<F>(a, b);
  Vector<F> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

template <class F>
Vector<F> operator*(const F& k, const Vector<F>& v) {
  Vector<F> out(v);
  for (auto& c : out) c *= k;
  return out;
}

template <class F>
bool is_zero_vector(std::span<const F> v) {
  for (const auto& c : v) {
    if (!is_zero(c)) return false;
  }
  return true;
}

template <class F>
F dot(std::span<const F> a, std::span<const F> b) {
  require_same_dimension<F>(a, b);
  F acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

/// Unit vector e_k of dimension n.
Point basis_vector(std::size_t n, std::size_t k);

EtaPoint to_eta(std::span<const Rational> p);
/// Throws NonRationalScalar if any coordinate involves η.
Point to_rational(std::span<const Scalar> p);

/// Rank over the field by exact Gaussian elimination.
template <class F>
std::size_t rank(std::vector<Vector<F>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][c])) continue;
      const F f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::size_t seed = p.size();
    for (const auto& c : p) hash_combine(seed, c.hash());
    return seed;
  }
};

/// "(a, b, c)" with canonical scalar text.
template <class F>
std::string format_point(std::span<const F> p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].to_string();
  }
  return out + ")";
}

/// Lexicographic order on the canonical coordinate strings; the output order
/// of every exported point list.
bool string_order_less(const Point& a, const Point& b);

/// Numeric lexicographic order.
bool numeric_order_less(const Point& a, const Point& b);

}  // namespace origami
