#include "origami/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "origami/density.hpp"

namespace origami {

// ---- LatticeBasis ----

void LatticeBasis::build_canonical(std::span<const Point> points) {
  const std::size_t n = generators_.empty() ? points.front().size() : generators_.size();
  Integer d = 1;
  for (const auto& p : points) {
    if (p.size() != n) throw Error(Errc::DimensionMismatch, "lattice generator of wrong dimension");
    for (const auto& c : p) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.value().get_den_mpz_t());
  }
  IntMatrix a(n, std::vector<Integer>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& c = points[j][i];
      a[i][j] = c.numerator() * (d / c.denominator());
    }
  }
  denominator_ = d;
  hnf_ = hermite_normal_form(std::move(a));
}

void LatticeBasis::build_inverse() {
  const std::size_t n = generators_.size();
  // Gauss–Jordan on [G | I] with G's columns the generators.
  std::vector<Point> m(n, Point(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = generators_[j][i];
    m[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error(Errc::RankDeficient, "generators are linearly dependent");
    std::swap(m[c], m[piv]);
    const Rational inv = m[c][c].reciprocal();
    for (auto& v : m[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  inverse_.assign(n, Point(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inverse_[i][j] = m[i][n + j];
  }
}

LatticeBasis LatticeBasis::from_generators(std::vector<Point> generators) {
  if (generators.empty()) throw Error(Errc::RankDeficient, "no generators");
  const std::size_t n = generators.size();
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw Error(Errc::RankDeficient, std::to_string(n) + " generators in dimension " + std::to_string(g.size()));
    }
  }
  LatticeBasis b;
  b.generators_ = std::move(generators);
  b.build_canonical(b.generators_);
  b.build_inverse();
  return b;
}

LatticeBasis LatticeBasis::from_generators(std::span<const EtaPoint> generators) {
  std::vector<Point> rational;
  rational.reserve(generators.size());
  for (const auto& g : generators) rational.push_back(to_rational(g));
  return from_generators(std::move(rational));
}

LatticeBasis LatticeBasis::span_of(std::span<const Point> points, std::size_t n) {
  if (points.empty()) throw Error(Errc::RankDeficient, "empty point set");
  LatticeBasis b;
  b.generators_.assign(n, Point(n));
  b.build_canonical(points);
  b.generators_ = b.hnf_generators();
  b.build_inverse();
  return b;
}

std::vector<Point> LatticeBasis::hnf_generators() const {
  const std::size_t n = hnf_.size();
  std::vector<Point> out(n, Point(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out[j][i] = Rational(hnf_[i][j], denominator_);
  }
  return out;
}

std::optional<std::vector<Integer>> LatticeBasis::coordinates(std::span<const Rational> p) const {
  const std::size_t n = dimension();
  if (p.size() != n) throw Error(Errc::DimensionMismatch, "point dimension differs from lattice");
  std::vector<Integer> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) {
      if (!inverse_[i][j].is_zero() && !p[j].is_zero()) acc += inverse_[i][j] * p[j];
    }
    if (!acc.is_integer()) return std::nullopt;
    x[i] = acc.numerator();
  }
  return x;
}

bool LatticeBasis::contains(std::span<const Rational> p) const {
  const std::size_t n = dimension();
  if (p.size() != n) throw Error(Errc::DimensionMismatch, "point dimension differs from lattice");
  std::vector<Integer> target(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational scaled = p[i] * Rational(denominator_);
    if (!scaled.is_integer()) return false;
    target[i] = scaled.numerator();
  }
  std::vector<Integer> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Integer rhs = target[i];
    for (std::size_t j = i + 1; j < n; ++j) rhs -= hnf_[i][j] * x[j];
    if (!mpz_divisible_p(rhs.get_mpz_t(), hnf_[i][i].get_mpz_t())) return false;
    mpz_divexact(x[i].get_mpz_t(), rhs.get_mpz_t(), hnf_[i][i].get_mpz_t());
  }
  return true;
}

Rational LatticeBasis::covolume() const {
  Integer dn;
  mpz_pow_ui(dn.get_mpz_t(), denominator_.get_mpz_t(), dimension());
  return Rational(determinant_of_triangular(hnf_), dn);
}

bool LatticeBasis::contains_lattice(const LatticeBasis& sub) const {
  if (sub.dimension() != dimension()) return false;
  return std::all_of(sub.generators_.begin(), sub.generators_.end(),
                     [&](const Point& g) { return contains(g); });
}

std::optional<Integer> LatticeBasis::index_of(const LatticeBasis& sub) const {
  if (!contains_lattice(sub)) return std::nullopt;
  const Rational ratio = sub.covolume() / covolume();
  return ratio.numerator();
}

std::vector<Point> LatticeBasis::points_in_box(const Box& box) const {
  const std::size_t n = dimension();
  if (box.dimension() != n) throw Error(Errc::DimensionMismatch, "box dimension differs from lattice");
  std::vector<Point> out;
  std::vector<Integer> x(n);
  const Rational d(denominator_);
  // Coordinate i of H·x/d depends on x_i … x_{n−1} only.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    Integer partial = 0;
    for (std::size_t j = i + 1; j < n; ++j) partial += hnf_[i][j] * x[j];
    const Rational h(hnf_[i][i]);
    const Rational lo = (box.lo[i] * d - Rational(partial)) / h;
    const Rational hi = (box.hi[i] * d - Rational(partial)) / h;
    for (Integer k = lo.ceil(); k <= hi.floor(); ++k) {
      x[i] = k;
      if (i == 0) {
        Point p(n);
        for (std::size_t r = 0; r < n; ++r) {
          Integer acc = 0;
          for (std::size_t j = r; j < n; ++j) acc += hnf_[r][j] * x[j];
          p[r] = Rational(acc, denominator_);
        }
        out.push_back(std::move(p));
      } else {
        self(self, i - 1);
      }
    }
  };
  recurse(recurse, n - 1);
  std::sort(out.begin(), out.end(), numeric_order_less);
  return out;
}

std::vector<Point> LatticeBasis::unit_first_basis() const {
  const std::size_t n = dimension();
  if (generators_.front() == basis_vector(n, 0)) return generators_;
  if (hnf_[0][0] != denominator_) {
    throw Error(Errc::DegenerateTau, "1 is not a primitive vector of the lattice");
  }
  return hnf_generators();
}

std::optional<std::vector<Integer>> member(const LatticeBasis& lattice, std::span<const Rational> p) {
  return lattice.coordinates(p);
}

// ---- synthesis ----

std::optional<Point> tau_from_pair(const Direction& alpha, const Direction& alpha_prime) {
  const std::size_t n = alpha.dimension();
  return intersect<Rational>(Point(n), basis_vector(n, 0), alpha, alpha_prime);
}

std::vector<Direction> angles_for_lattice(const LatticeBasis& lattice) {
  const std::size_t n = lattice.dimension();
  const auto basis = lattice.unit_first_basis();
  const Point one = basis_vector(n, 0);
  std::vector<Direction> u{unit_direction(n)};
  for (std::size_t i = 1; i < n; ++i) {
    const Point& tau = basis[i];
    if (std::all_of(tau.begin() + 1, tau.end(), [](const Rational& c) { return c.is_zero(); })) {
      throw Error(Errc::DegenerateTau, "tau " + format_point<Rational>(tau) + " is parallel to 1");
    }
    u.emplace_back(tau);
    u.emplace_back(tau - one);
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] == u[j]) throw Error(Errc::CollidingDirections, "direction " + u[i].to_string() + " repeats");
    }
  }
  return u;
}

ClosureReport verify_closure_table(std::span<const Direction> angles, const LatticeBasis& lattice,
                                   std::size_t coeff_range) {
  const std::size_t n = lattice.dimension();
  for (const auto& a : angles) {
    if (a.dimension() != n) throw Error(Errc::DimensionMismatch, "angle dimension differs from lattice");
  }
  ClosureReport report;
  report.coeff_range = coeff_range;
  const auto& gens = lattice.generators();
  const Point origin(n);
  const long range = static_cast<long>(coeff_range);
  std::vector<long> a(n, -range);
  while (true) {
    Point q(n);
    for (std::size_t g = 0; g < n; ++g) {
      if (a[g] == 0) continue;
      const Rational c(a[g]);
      for (std::size_t i = 0; i < n; ++i) q[i] += c * gens[g][i];
    }
    for (std::size_t xi = 0; xi < angles.size(); ++xi) {
      for (std::size_t phi = 0; phi < angles.size(); ++phi) {
        if (xi == phi) continue;
        ++report.checks;
        auto z = intersect<Rational>(origin, q, angles[xi], angles[phi]);
        if (!z) continue;
        ++report.defined;
        if (!lattice.contains(*z)) report.violations.push_back({q, xi, phi, std::move(*z)});
      }
    }
    std::size_t pos = 0;
    while (pos < n && a[pos] == range) a[pos++] = -range;
    if (pos == n) break;
    ++a[pos];
  }
  return report;
}

// ---- structural scan ----

namespace {

bool in_span(const std::vector<Point>& basis, const Point& x) {
  std::vector<Point> rows = basis;
  rows.push_back(x);
  return rank<Rational>(rows) == basis.size();
}

/// ℓ candidates: 1 first, then Σ cⱼ·basisⱼ with cⱼ ∈ [−2, 2] ordered by Σ|cⱼ|.
std::vector<Point> ell_candidates(const std::vector<Point>& basis) {
  const std::size_t m = basis.size();
  const std::size_t n = basis.front().size();
  std::vector<std::vector<int>> coeffs;
  std::vector<int> c(m, -2);
  while (true) {
    const bool zero = std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
    const bool unit = c[0] == 1 && std::all_of(c.begin() + 1, c.end(), [](int v) { return v == 0; });
    if (!zero && !unit) coeffs.push_back(c);
    std::size_t pos = 0;
    while (pos < m && c[pos] == 2) c[pos++] = -2;
    if (pos == m) break;
    ++c[pos];
  }
  auto weight = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0, [](int s, int x) { return s + std::abs(x); });
  };
  std::stable_sort(coeffs.begin(), coeffs.end(),
                   [&](const auto& x, const auto& y) { return weight(x) < weight(y); });
  std::vector<Point> out{basis_vector(n, 0)};
  for (const auto& v : coeffs) {
    Point ell(n);
    for (std::size_t j = 0; j < m; ++j) {
      if (v[j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i) ell[i] += Rational(v[j]) * basis[j][i];
    }
    out.push_back(std::move(ell));
  }
  return out;
}

}  // namespace

std::variant<PairingReport, ScanFailure> structural_scan(std::span<const Direction> angles) {
  validate_angle_set(angles);
  const std::size_t n = angles.front().dimension();
  std::vector<Point> coords;
  for (const auto& a : angles) coords.push_back(a.coords());
  if (rank<Rational>(coords) < n) {
    return ScanFailure{"span deficient: the angles span a proper subspace", 0, true};
  }
  const std::size_t unit_index =
      static_cast<std::size_t>(std::find(angles.begin(), angles.end(), unit_direction(n)) - angles.begin());

  PairingReport report;
  std::vector<Point> v_basis{basis_vector(n, 0)};
  report.xi_basis = v_basis;
  std::vector<bool> used(angles.size(), false);
  used[unit_index] = true;
  const Point origin(n);

  for (std::size_t stage = 1; stage < n; ++stage) {
    std::optional<AnglePairing> found;
    for (const Point& ell : ell_candidates(report.xi_basis)) {
      for (std::size_t a = 0; a < angles.size() && !found; ++a) {
        if (used[a] || in_span(v_basis, coords[a])) continue;
        for (std::size_t b = 0; b < angles.size() && !found; ++b) {
          if (b == a || used[b] || in_span(v_basis, coords[b])) continue;
          auto z = intersect<Rational>(origin, ell, angles[a], angles[b]);
          if (z && !in_span(v_basis, *z)) found = AnglePairing{a, b, ell, std::move(*z)};
        }
      }
      if (found) break;
    }
    if (!found) {
      return ScanFailure{"span deficient: no angle pair leaves a subspace of dimension " + std::to_string(stage),
                         stage, false};
    }
    used[found->alpha] = used[found->alpha_prime] = true;
    v_basis.push_back(found->xi);
    report.xi_basis.push_back(found->xi);
    report.pairs.push_back(std::move(*found));
  }

  report.independent_subset.push_back(unit_index);
  for (const auto& p : report.pairs) report.independent_subset.push_back(p.alpha);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!used[i]) report.leftover.push_back(i);
  }
  return report;
}

// ---- verdicts ----

const char* dense_reason_code(DenseReason r) noexcept {
  return r == DenseReason::CoplanarQuadruple ? "coplanar" : "gap_shrinking";
}

Verdict lattice_hypothesis_test(std::span<const Direction> angles, const GenerationConfig& cfg) {
  validate_angle_set(angles);
  const std::size_t n = angles.front().dimension();

  const CoplanarResult coplanar = coplanar_quadruple(angles);
  if (!coplanar.spans_space) return UnknownVerdict{"span deficient: the angles span a proper subspace"};
  if (coplanar.indices) {
    const auto& q = *coplanar.indices;
    std::string data = "angles";
    for (auto i : q) data += " " + angles[i].to_string();
    data += " lie in one 2-dimensional subspace";
    return DenseVerdict{DenseReason::CoplanarQuadruple, {q.begin(), q.end()}, data};
  }

  auto scan = structural_scan(angles);
  if (auto* failure = std::get_if<ScanFailure>(&scan)) return UnknownVerdict{failure->reason};
  const auto& pairing = std::get<PairingReport>(scan);

  GenerationConfig run = cfg;
  if (!run.retention_box) run.retention_box = Box::cube(n, Rational(-2), Rational(2));
  const Box box = *run.retention_box;
  const GenerationState state = generate(angles, run);
  if (state.cap_truncated()) {
    return UnknownVerdict{"point cap of " + std::to_string(run.max_points) + " reached at depth " +
                          std::to_string(state.depth())};
  }

  LatticeBasis candidate = LatticeBasis::from_generators(pairing.xi_basis);
  bool refined = false;
  const auto points = state.points();
  const auto outside = std::find_if(points.begin(), points.end(),
                                    [&](const Point& p) { return !candidate.contains(p); });
  if (outside != points.end()) {
    try {
      candidate = LatticeBasis::span_of(points, n);
    } catch (const Error& e) {
      return UnknownVerdict{"generated points do not span a full lattice: " + std::string(e.what())};
    }
    refined = true;
  }

  const auto expected = candidate.points_in_box(box);
  std::size_t missing = 0;
  const Point* first_missing = nullptr;
  for (const auto& p : expected) {
    if (!state.contains(p)) {
      if (!first_missing) first_missing = &p;
      ++missing;
    }
  }
  if (missing > 0) {
    return UnknownVerdict{std::to_string(missing) + " of " + std::to_string(expected.size()) +
                          " candidate lattice points in the box not generated by depth " +
                          std::to_string(state.depth()) + ", e.g. " + format_point<Rational>(*first_missing)};
  }
  return LatticeVerdict{std::move(candidate), state.depth(), box, refined, points.size(), expected.size()};
}

}  // namespace origami
