#include "origami/geometry.hpp"

namespace origami {

namespace {

void check_direction_input(std::size_t n, bool zero) {
  if (n < 2) throw Error(Errc::DimensionMismatch, "directions need dimension >= 2");
  if (zero) throw Error(Errc::ZeroVector, "direction from the zero vector");
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  return (a * b).divmod(gcd(a, b)).first.monic();
}

struct Complex {
  Rational re;
  Rational im;
  Complex conj() const { return {re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) throw Error(Errc::DivisionByZero, "complex division by zero");
    const Complex t = a * b.conj();
    return {t.re / n, t.im / n};
  }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Complex as_complex(std::span<const Rational> v) { return {v[0], v[1]}; }

}  // namespace

Vector<Rational> canonical_coords(std::span<const Rational> v) {
  check_direction_input(v.size(), is_zero_vector<Rational>(v));
  Integer den = 1;
  for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g = 0;
  for (const auto& c : v) {
    ints.push_back(c.numerator() * (den / c.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  int sign = 0;
  for (const auto& z : ints) {
    if (z != 0) {
      sign = sgn(z);
      break;
    }
  }
  Vector<Rational> out;
  out.reserve(v.size());
  for (const auto& z : ints) out.emplace_back(Integer(z * sign / g));
  return out;
}

Vector<Scalar> canonical_coords(std::span<const Scalar> v) {
  check_direction_input(v.size(), is_zero_vector<Scalar>(v));
  std::vector<RationalFunction> f;
  f.reserve(v.size());
  Polynomial common_den(Rational(1));
  for (const auto& c : v) {
    f.push_back(c.as_function());
    common_den = lcm(common_den, f.back().denominator());
  }
  std::vector<Polynomial> polys;
  polys.reserve(v.size());
  Polynomial g;
  for (const auto& fn : f) {
    polys.push_back(fn.numerator() * common_den.divmod(fn.denominator()).first);
    g = gcd(g, polys.back());
  }
  Integer coeff_den = 1;
  for (auto& p : polys) {
    p = p.divmod(g).first;
    for (const auto& c : p.coefficients()) {
      mpz_lcm(coeff_den.get_mpz_t(), coeff_den.get_mpz_t(), c.value().get_den_mpz_t());
    }
  }
  Integer content = 0;
  for (const auto& p : polys) {
    for (const auto& c : p.coefficients()) {
      const Integer z = c.numerator() * (coeff_den / c.denominator());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    }
  }
  Rational scale(coeff_den, content);
  for (const auto& p : polys) {
    if (!p.is_zero()) {
      if (p.leading().sign() < 0) scale = -scale;
      break;
    }
  }
  Vector<Scalar> out;
  out.reserve(v.size());
  for (auto& p : polys) out.emplace_back(RationalFunction(p * scale));
  return out;
}

Direction canonicalize_direction(std::span<const Rational> v) { return Direction(v); }
EtaDirection canonicalize_direction(std::span<const Scalar> v) { return EtaDirection(v); }

Direction unit_direction(std::size_t n) {
  const Point e = basis_vector(n, 0);
  return Direction(e);
}

EtaDirection to_eta(const Direction& d) {
  const EtaPoint v = to_eta(std::span<const Rational>(d.coords()));
  return EtaDirection(v);
}

Point intersect_complex(std::span<const Rational> p, std::span<const Rational> q, std::span<const Rational> alpha,
                        std::span<const Rational> beta) {
  for (auto s : {p, q, alpha, beta}) {
    if (s.size() != 2) throw Error(Errc::DimensionMismatch, "complex intersection needs dimension 2");
  }
  const Complex P = as_complex(p), Q = as_complex(q), A = as_complex(alpha), B = as_complex(beta);
  if (A.is_zero() || B.is_zero()) throw Error(Errc::ZeroVector, "line direction is the zero vector");
  const Complex den = A * B.conj() - A.conj() * B;
  if (den.is_zero()) throw Error(Errc::SameDirection, "alpha and beta represent the same direction");
  const Complex first = (A * P.conj() - A.conj() * P) / den * B;
  const Complex second = (B * Q.conj() - B.conj() * Q) / (A.conj() * B - A * B.conj()) * A;
  const Complex z = first + second;
  return {z.re, z.im};
}

Point intersect_complex(const Point& p, const Point& q, const Direction& alpha, const Direction& beta) {
  return intersect_complex(std::span<const Rational>(p), std::span<const Rational>(q),
                           std::span<const Rational>(alpha.coords()), std::span<const Rational>(beta.coords()));
}

}  // namespace origami
