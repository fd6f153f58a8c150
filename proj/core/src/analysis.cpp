#include "origami/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "origami/density.hpp"

namespace origami {

namespace {

// Inverse of the matrix whose rows are tau, by Gauss–Jordan elimination.
std::vector<Point> inverse_rows(std::span<const Point> tau) {
  const std::size_t n = tau.size();
  for (const auto& t : tau) {
    if (t.size() != n) throw Error(Errc::RankDeficientBasis, "basis must have n vectors of dimension n");
  }
  std::vector<Point> a(tau.begin(), tau.end());
  std::vector<Point> inv(n, Point(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error(Errc::RankDeficientBasis, "basis vectors are linearly dependent");
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    const Rational f = a[c][c].reciprocal();
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= f;
      inv[c][k] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational g = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= g * a[c][k];
        inv[r][k] -= g * inv[c][k];
      }
    }
  }
  return inv;
}

// Row vector times matrix (given by rows).
Point row_times(std::span<const Rational> row, std::span<const Point> m) {
  Point out(m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].is_zero()) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += row[i] * m[i][k];
  }
  return out;
}

void fill_polynomials(OrigamiPolynomialMatrix& out) {
  const std::size_t m = out.matrix.size();
  const std::size_t n = out.basis.size();
  out.polynomials.clear();
  out.degrees.clear();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> coeffs(m + 1);
    for (std::size_t i = 0; i < m; ++i) coeffs[i + 1] = out.matrix[i][j];
    out.polynomials.emplace_back(std::move(coeffs));
    out.degrees.push_back(out.polynomials.back().degree());
  }
}

bool pairwise_distinct(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end());
  return std::adjacent_find(degrees.begin(), degrees.end()) == degrees.end();
}

// Scales a rational row to a primitive integer row (sign kept).
std::vector<Integer> primitive_integer_row(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& c : row) l = lcm(l, c.denominator());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : row) {
    out.push_back(c.numerator() * (l / c.denominator()));
    g = gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& c : out) c /= g;
  }
  return out;
}

// Columns j and k of every row and of C are replaced by unimodular
// combinations so that row r gets gcd(row[r][j], row[r][k]) in column k and 0
// in column j.
void merge_columns(std::vector<std::vector<Integer>>& rows, IntMatrix& c, std::size_t r, std::size_t j,
                   std::size_t k) {
  const Integer a = rows[r][j];
  const Integer b = rows[r][k];
  if (a == 0) return;
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // [col_j, col_k] ← [col_j·(b/g) − col_k·(a/g), col_j·x + col_k·y]; det = 1.
  const Integer bg = b / g;
  const Integer ag = a / g;
  auto apply = [&](std::vector<Integer>& row) {
    const Integer u = row[j];
    const Integer v = row[k];
    row[j] = u * bg - v * ag;
    row[k] = u * x + v * y;
  };
  for (auto& row : rows) apply(row);
  for (auto& row : c) apply(row);
}

}  // namespace

OrigamiPolynomialMatrix origami_polynomials(std::span<const Point> representatives, std::span<const Point> tau) {
  const auto inv = inverse_rows(tau);
  OrigamiPolynomialMatrix out;
  out.basis.assign(tau.begin(), tau.end());
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    if (representatives[i].size() != tau.size()) throw Error(Errc::DimensionMismatch, "angle dimension");
    out.matrix.push_back(row_times(representatives[i], inv));
    out.angle_order.push_back(i);
  }
  fill_polynomials(out);
  return out;
}

OrigamiPolynomialMatrix origami_polynomials(std::span<const Direction> angles, std::span<const Point> tau) {
  std::vector<Point> reps;
  for (const auto& a : angles) reps.push_back(a.coords());
  return origami_polynomials(reps, tau);
}

DistinctDegreeResult distinct_degree_basis(std::span<const Point> representatives, std::span<const Point> tau) {
  const std::size_t n = tau.size();
  DistinctDegreeResult out;
  out.polynomials = origami_polynomials(representatives, tau);
  out.basis.assign(tau.begin(), tau.end());
  out.angles.assign(representatives.begin(), representatives.end());
  out.column_ops.assign(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out.column_ops[i][i] = 1;
  if (pairwise_distinct(out.polynomials.degrees)) return out;

  const std::size_t m = representatives.size();
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : out.polynomials.matrix) rows.push_back(primitive_integer_row(r));

  // n independent rows, scanning from the last row upward.
  std::vector<std::size_t> chosen;
  std::vector<Point> span;
  for (std::size_t i = m; i-- > 0 && chosen.size() < n;) {
    Point row(rows[i].begin(), rows[i].end());
    span.push_back(row);
    if (rank<Rational>(span) == span.size()) {
      chosen.push_back(i);
    } else {
      span.pop_back();
    }
  }
  if (chosen.size() < n) {
    throw Error(Errc::CannotTriangularize, "only " + std::to_string(chosen.size()) + " independent rows");
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::binary_search(chosen.begin(), chosen.end(), i)) order.push_back(i);
  }
  order.insert(order.end(), chosen.begin(), chosen.end());
  std::vector<std::vector<Integer>> permuted;
  for (auto i : order) permuted.push_back(rows[i]);
  rows = std::move(permuted);

  // Block row t (0-based) sits at rows[m − n + t]; it must end up with zeros
  // in columns < t and a nonzero diagonal.
  IntMatrix& c = out.column_ops;
  for (std::size_t t = n; t-- > 0;) {
    const std::size_t r = m - n + t;
    for (std::size_t j = 0; j < t; ++j) merge_columns(rows, c, r, j, t);
    if (rows[r][t] == 0) throw Error(Errc::CannotTriangularize, "zero diagonal after column operations");
  }

  // τ′ = C⁻¹ τ.
  std::vector<Point> c_rows;
  for (const auto& row : c) c_rows.emplace_back(row.begin(), row.end());
  const auto c_inv = inverse_rows(c_rows);
  out.basis.clear();
  for (const auto& row : c_inv) out.basis.push_back(row_times(row, tau));
  if (!(LatticeBasis::from_generators(out.basis) == LatticeBasis::from_generators(std::vector<Point>(tau.begin(), tau.end())))) {
    throw Error(Errc::CannotTriangularize, "column operations changed the lattice");
  }

  out.angles.clear();
  OrigamiPolynomialMatrix& pm = out.polynomials;
  pm.basis = out.basis;
  pm.matrix.clear();
  pm.angle_order.clear();
  for (std::size_t i = 0; i < m; ++i) {
    pm.matrix.emplace_back(rows[i].begin(), rows[i].end());
    pm.angle_order.push_back(order[i]);
    out.angles.push_back(row_times(pm.matrix.back(), pm.basis));
  }
  fill_polynomials(pm);
  out.changed = true;
  return out;
}

IrrelevantAngle irrelevant_angle(std::span<const Point> representatives, const LatticeBasis& lattice) {
  const std::size_t n = lattice.dimension();
  EtaPoint beta(n, Scalar(0));
  Polynomial power = Polynomial(Rational(1));
  for (const auto& alpha : representatives) {
    if (alpha.size() != n) throw Error(Errc::DimensionMismatch, "angle dimension");
    power = power * Polynomial::x();
    for (std::size_t k = 0; k < n; ++k) beta[k] += Scalar(RationalFunction(power)) * Scalar(alpha[k]);
  }
  return {beta, EtaDirection(beta)};
}

IrrelevantReport verify_irrelevant(std::span<const Direction> angles, const EtaPoint& beta,
                                   const LatticeBasis& lattice, std::size_t depth, std::size_t max_reported) {
  GenerationConfig cfg;
  cfg.max_depth = depth;
  const GenerationState state = generate(angles, cfg);
  const auto points = state.points();
  IrrelevantReport report;
  report.depth = state.depth();
  report.points = points.size();

  // The parameter of the hit depends only on q − p, so each difference is
  // solved once per (angle, assignment).
  struct Hit {
    bool exists = false;
    bool eta_free = true;
    Rational t;  // point = p + t·α (α through p) or q + t·α (α through q)
  };
  std::map<std::tuple<Point, std::size_t, bool>, Hit> cache;
  const EtaPoint zero(beta.size(), Scalar(0));
  auto solve = [&](const Point& d, std::size_t a, bool beta_first) -> const Hit& {
    auto key = std::make_tuple(d, a, beta_first);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const EtaPoint alpha = to_eta(angles[a].coords());
    const EtaPoint de = to_eta(d);
    Hit hit;
    // Lines 0 + ℝ·first and d + ℝ·second.
    const auto rel = beta_first ? line_relation<Scalar>(zero, beta, de, alpha)
                                : line_relation<Scalar>(zero, alpha, de, beta);
    if (const auto* x = std::get_if<Intersecting<Scalar>>(&rel)) {
      hit.exists = true;
      const Scalar& t = beta_first ? x->s : x->r;
      if (t.is_rational()) {
        hit.t = t.rational();
      } else {
        hit.eta_free = false;
      }
    }
    return cache.emplace(std::move(key), std::move(hit)).first->second;
  };

  for (const auto& p : points) {
    for (const auto& q : points) {
      const Point d = q - p;
      for (std::size_t a = 0; a < angles.size(); ++a) {
        for (bool beta_first : {false, true}) {
          ++report.checks;
          const Hit& hit = solve(d, a, beta_first);
          if (!hit.exists) {
            ++report.nonexistent;
            continue;
          }
          std::string detail;
          if (!hit.eta_free) {
            detail = "intersection depends on η";
          } else {
            const Point point = (beta_first ? q : p) + hit.t * angles[a].coords();
            if (lattice.contains(point)) {
              ++report.in_lattice;
              continue;
            }
            detail = "intersection " + format_point<Rational>(point) + " is not in the lattice";
          }
          if (report.violations.size() < max_reported) report.violations.push_back({p, q, a, beta_first, detail});
          ++report.violation_count;
        }
      }
    }
  }
  return report;
}

namespace {

bool bounded_match(std::span<const Direction> angles, const GenerationConfig& cfg, const LatticeBasis& lattice) {
  const std::size_t n = lattice.dimension();
  std::vector<Point> reps;
  for (const auto& a : angles) reps.push_back(a.coords());
  if (rank<Rational>(reps) < n) return false;
  if (coplanar_quadruple(angles).indices) return false;
  const GenerationState state = generate(angles, cfg);
  if (state.cap_truncated()) return false;
  for (const auto& p : state.points()) {
    if (!lattice.contains(p)) return false;
  }
  for (const auto& p : lattice.points_in_box(*cfg.retention_box)) {
    if (!state.contains(p)) return false;
  }
  return true;
}

// Lexicographic successor of a k-subset of {0 … m−1}; false after the last.
bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == m - k + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::size_t binomial_capped(std::size_t m, std::size_t k, std::size_t cap) {
  if (k > m) return 0;
  long double v = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    v = v * static_cast<long double>(m - k + i) / static_cast<long double>(i);
    if (v > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(v + 0.5L);
}

}  // namespace

BasisSearchResult origami_basis_search(std::span<const Direction> angles, const GenerationConfig& cfg,
                                       const LatticeBasis& lattice, std::size_t max_candidates) {
  validate_angle_set(angles);
  const std::size_t n = angles.front().dimension();
  if (lattice.dimension() != n) throw Error(Errc::DimensionMismatch, "lattice dimension");
  GenerationConfig run = cfg;
  if (!run.retention_box) run.retention_box = Box::cube(n, Rational(-2), Rational(2));

  const Direction unit = unit_direction(n);
  const std::size_t unit_index =
      static_cast<std::size_t>(std::find(angles.begin(), angles.end(), unit) - angles.begin());
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (i != unit_index) others.push_back(i);
  }

  BasisSearchResult out;
  auto test = [&](const std::vector<std::size_t>& pick) {
    std::vector<std::size_t> idx{unit_index};
    for (auto p : pick) idx.push_back(others[p]);
    std::sort(idx.begin(), idx.end());
    std::vector<Direction> subset;
    for (auto i : idx) subset.push_back(angles[i]);
    ++out.candidates_tested;
    if (bounded_match(subset, run, lattice)) out.bases.push_back(std::move(idx));
  };

  for (std::size_t size = 2 * n - 1; size <= angles.size(); ++size) {
    const std::size_t k = size - 1;
    const std::size_t count = binomial_capped(others.size(), k, max_candidates);
    if (count <= max_candidates) {
      std::vector<std::size_t> pick(k);
      std::iota(pick.begin(), pick.end(), 0);
      do {
        test(pick);
      } while (next_combination(pick, others.size()));
    } else {
      out.sampled = true;
      std::mt19937_64 rng(0x5eed);
      std::set<std::vector<std::size_t>> seen;
      while (seen.size() < max_candidates) {
        std::vector<std::size_t> all(others.size());
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<std::size_t> pick(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(pick.begin(), pick.end());
        if (seen.insert(pick).second) test(pick);
      }
    }
    if (!out.bases.empty()) {
      out.minimal_size = size;
      std::sort(out.bases.begin(), out.bases.end());
      break;
    }
  }
  return out;
}

}  // namespace origami
