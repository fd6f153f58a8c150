#include "origami/vector.hpp"

#include <algorithm>

namespace origami {

Point basis_vector(std::size_t n, std::size_t k) {
  Point p(n);
  p.at(k) = Rational(1);
  return p;
}

EtaPoint to_eta(std::span<const Rational> p) { return EtaPoint(p.begin(), p.end()); }

Point to_rational(std::span<const Scalar> p) {
  Point out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.rational());
  return out;
}

bool string_order_less(const Point& a, const Point& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return a[i].to_string() < b[i].to_string();
  }
  return a.size() < b.size();
}

bool numeric_order_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace origami
