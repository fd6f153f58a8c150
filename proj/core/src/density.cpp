#include "origami/density.hpp"

#include <algorithm>

namespace origami {

CoplanarResult coplanar_quadruple(std::span<const Direction> angles) {
  CoplanarResult out;
  if (angles.empty()) return out;
  std::vector<Point> all;
  for (const auto& a : angles) all.push_back(a.coords());
  out.spans_space = rank<Rational>(all) == angles.front().dimension();
  const std::size_t m = angles.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        // Skip triples already of rank 3.
        if (rank<Rational>({all[a], all[b], all[c]}) > 2) continue;
        for (std::size_t d = c + 1; d < m; ++d) {
          if (rank<Rational>({all[a], all[b], all[c], all[d]}) == 2) {
            out.indices = std::array<std::size_t, 4>{a, b, c, d};
            return out;
          }
        }
      }
    }
  }
  return out;
}

namespace {

std::optional<Rational> segment_parameter(const Point& p, const Point& a, const Point& dir, std::size_t pivot) {
  const Rational t = (p[pivot] - a[pivot]) / dir[pivot];
  if (t < Rational(0) || Rational(1) < t) return std::nullopt;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != a[i] + t * dir[i]) return std::nullopt;
  }
  return t;
}

}  // namespace

DensityProbe density_probe(const GenerationState& state, const Point& a, const Point& b) {
  require_same_dimension<Rational>(a, b);
  if (a.size() != state.dimension()) throw Error(Errc::DimensionMismatch, "segment dimension");
  const Point dir = b - a;
  if (is_zero_vector<Rational>(dir)) throw Error(Errc::ZeroVector, "degenerate segment");
  std::size_t pivot = 0;
  while (dir[pivot].is_zero()) ++pivot;

  DensityProbe probe;
  std::vector<Rational> ts{Rational(0), Rational(1)};
  std::size_t on_segment = 0;
  for (std::size_t k = 0; k <= state.depth(); ++k) {
    SegmentGap g;
    g.depth = k;
    for (const auto& p : state.added_at_depth(k)) {
      if (auto t = segment_parameter(p, a, dir, pivot)) {
        ts.push_back(*t);
        ++on_segment;
      }
    }
    g.on_segment = on_segment;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::size_t i = 1; i < ts.size(); ++i) g.max_gap = std::max(g.max_gap, ts[i] - ts[i - 1]);
    probe.per_depth.push_back(g);
  }
  probe.parameters = ts;

  std::size_t run = 1;
  probe.run_begin = 0;
  probe.run_length = probe.per_depth.empty() ? 0 : 1;
  for (std::size_t k = 1; k < probe.per_depth.size(); ++k) {
    run = probe.per_depth[k].max_gap < probe.per_depth[k - 1].max_gap ? run + 1 : 1;
    if (run > probe.run_length) {
      probe.run_length = run;
      probe.run_begin = k + 1 - run;
    }
  }
  for (std::size_t k = 0; k < probe.per_depth.size(); ++k) {
    if (k == 0 || probe.per_depth[k].max_gap < probe.per_depth[probe.reported_depths.back()].max_gap) {
      probe.reported_depths.push_back(k);
    }
  }
  return probe;
}

}  // namespace origami
