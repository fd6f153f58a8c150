#include "origami/hnf.hpp"

#include <string>

#include "origami/error.hpp"

namespace origami {

namespace {

void combine_columns(IntMatrix& a, std::size_t row, std::size_t p, std::size_t j) {
  // [col_p col_j] ← [col_p col_j]·[[x, b/g], [y, −a/g]], determinant −1.
  const Integer ap = a[row][p], aj = a[row][j];
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), ap.get_mpz_t(), aj.get_mpz_t());
  const Integer u = aj / g, v = ap / g;
  for (auto& r : a) {
    const Integer cp = r[p], cj = r[j];
    r[p] = x * cp + y * cj;
    r[j] = u * cp - v * cj;
  }
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix a) {
  const std::size_t n = a.size();
  const std::size_t m = n == 0 ? 0 : a.front().size();
  if (m < n) throw Error(Errc::RankDeficient, std::to_string(m) + " generators in dimension " + std::to_string(n));

  // Active columns still free to become pivots; pivot for row i lands in slot i.
  std::vector<std::size_t> active(m);
  for (std::size_t j = 0; j < m; ++j) active[j] = j;
  std::vector<std::size_t> pivot_of(n);

  for (std::size_t ii = n; ii-- > 0;) {
    std::size_t p = m;
    for (std::size_t idx = 0; idx < active.size(); ++idx) {
      const std::size_t j = active[idx];
      if (a[ii][j] == 0) continue;
      if (p == m) {
        p = j;
      } else {
        combine_columns(a, ii, p, j);
      }
    }
    if (p == m) throw Error(Errc::RankDeficient, "generators do not span a full lattice");
    if (a[ii][p] < 0) {
      for (auto& r : a) r[p] = -r[p];
    }
    pivot_of[ii] = p;
    std::erase(active, p);
  }

  IntMatrix h(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c) h[i][c] = a[i][pivot_of[c]];
  }
  // Reduce entries right of each diagonal; column i only touches rows ≤ i.
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[i][i].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t r = 0; r <= i; ++r) h[r][j] -= q * h[r][i];
    }
  }
  return h;
}

Integer determinant_of_triangular(const IntMatrix& h) {
  Integer d = 1;
  for (std::size_t i = 0; i < h.size(); ++i) d *= h[i][i];
  return d;
}

}  // namespace origami
