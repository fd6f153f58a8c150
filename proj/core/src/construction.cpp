#include "origami/construction.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace origami {

Box Box::cube(std::size_t n, const Rational& lo, const Rational& hi) {
  Box b{Point(n, lo), Point(n, hi)};
  b.validate();
  return b;
}

void Box::validate() const {
  if (lo.size() != hi.size() || lo.empty()) throw Error(Errc::DimensionMismatch, "box corners differ in dimension");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) throw Error(Errc::Config, "box corners are not ordered componentwise");
  }
}

bool Box::contains(std::span<const Rational> p) const {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < lo[i] || hi[i] < p[i]) return false;
  }
  return true;
}

Box Box::scaled(const Rational& factor) const {
  Box out{lo, hi};
  const Rational half(1, 2);
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const Rational center = (lo[i] + hi[i]) * half;
    const Rational radius = (hi[i] - lo[i]) * half * factor;
    out.lo[i] = center - radius;
    out.hi[i] = center + radius;
  }
  return out;
}

std::optional<Box> GenerationConfig::margin_box() const {
  if (!retention_box) return std::nullopt;
  if (margin_factor < Rational(1)) throw Error(Errc::Config, "margin_factor must be >= 1");
  return retention_box->scaled(margin_factor);
}

GenerationState::GenerationState(std::vector<Direction> angles, GenerationConfig config)
    : angles_(std::move(angles)), config_(std::move(config)) {}

std::span<const Point> GenerationState::points_at_depth(std::size_t k) const {
  if (k > depth()) {
    throw Error(Errc::DepthOutOfRange,
                "depth " + std::to_string(k) + " requested, generated up to " + std::to_string(depth()));
  }
  return std::span<const Point>(points_).first(depth_end_[k]);
}

std::span<const Point> GenerationState::added_at_depth(std::size_t k) const {
  const auto all = points_at_depth(k);
  const std::size_t begin = k == 0 ? 0 : depth_end_[k - 1];
  return all.subspan(begin);
}

std::optional<std::size_t> GenerationState::depth_of(const Point& p) const {
  const auto it = depth_index_.find(p);
  if (it == depth_index_.end()) return std::nullopt;
  return it->second;
}

void GenerationState::append_depth(std::vector<Point> added, DepthStats stats) {
  const std::size_t k = depth_end_.size();
  for (auto& p : added) {
    depth_index_.emplace(p, k);
    points_.push_back(std::move(p));
  }
  depth_end_.push_back(points_.size());
  stats.depth = k;
  stats.total = points_.size();
  stats_.push_back(stats);
}

void validate_angle_set(std::span<const Direction> angles) {
  if (angles.size() < 2) throw Error(Errc::TooFewAngles, "need at least two angles");
  const std::size_t n = angles.front().dimension();
  if (n < 2) throw Error(Errc::DimensionMismatch, "dimension must be at least 2");
  for (const auto& a : angles) {
    if (a.dimension() != n) throw Error(Errc::DimensionMismatch, "angles of different dimensions");
  }
  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      if (angles[i] == angles[j]) throw Error(Errc::DuplicateAngle, "angle " + angles[i].to_string() + " repeated");
    }
  }
  if (std::find(angles.begin(), angles.end(), unit_direction(n)) == angles.end()) {
    throw Error(Errc::MissingUnitDirection, "angle set must contain (1, 0, ..., 0)");
  }
}

namespace {

/// Precomputed data for intersecting α-lines with β-lines.
class AnglePair {
 public:
  AnglePair(const Point& alpha, const Point& beta) : alpha_(alpha), beta_(beta) {
    const std::size_t n = alpha.size();
    // Reduced row echelon form of the 2×n matrix [α; β].
    Point r1 = alpha, r2 = beta;
    c1_ = 0;
    while (r1[c1_].is_zero()) ++c1_;
    {
      const Rational inv = r1[c1_].reciprocal();
      for (auto& v : r1) v *= inv;
      const Rational f = r2[c1_];
      for (std::size_t k = 0; k < n; ++k) r2[k] -= f * r1[k];
    }
    c2_ = 0;
    while (c2_ < n && r2[c2_].is_zero()) ++c2_;
    if (c2_ == n) throw Error(Errc::SameDirection, "parallel directions in an angle pair");
    {
      const Rational inv = r2[c2_].reciprocal();
      for (auto& v : r2) v *= inv;
      const Rational f = r1[c2_];
      for (std::size_t k = 0; k < n; ++k) r1[k] -= f * r2[k];
    }
    rref1_ = std::move(r1);
    rref2_ = std::move(r2);
    alpha_pivot_ = first_nonzero(alpha_);
    beta_pivot_ = first_nonzero(beta_);
    det_ = beta_[c1_] * alpha_[c2_] - alpha_[c1_] * beta_[c2_];
  }

  /// Representative of p modulo span(α, β): zero at both pivot columns.
  Point plane_key(const Point& p) const {
    Point k = p;
    const Rational a = p[c1_], b = p[c2_];
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (!rref1_[i].is_zero()) k[i] -= a * rref1_[i];
      if (!rref2_[i].is_zero()) k[i] -= b * rref2_[i];
    }
    return k;
  }

  static Point line_key(const Point& p, const Point& dir, std::size_t pivot) {
    Point k = p;
    const Rational t = p[pivot] / dir[pivot];
    if (t.is_zero()) return k;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (!dir[i].is_zero()) k[i] -= t * dir[i];
    }
    return k;
  }

  Point alpha_line(const Point& p) const { return line_key(p, alpha_, alpha_pivot_); }
  Point beta_line(const Point& p) const { return line_key(p, beta_, beta_pivot_); }

  /// a + rα = b + sβ for lines known to share a plane.
  Point meet(const Point& a, const Point& b) const {
    const Rational d1 = b[c1_] - a[c1_];
    const Rational d2 = b[c2_] - a[c2_];
    // [α1 −β1; α2 −β2] (r, s)ᵀ = (d1, d2)ᵀ
    const Rational r = (beta_[c1_] * d2 - beta_[c2_] * d1) / det_;
    Point z = a;
    if (!r.is_zero()) {
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (!alpha_[i].is_zero()) z[i] += r * alpha_[i];
      }
    }
    return z;
  }

 private:
  static std::size_t first_nonzero(const Point& v) {
    std::size_t i = 0;
    while (v[i].is_zero()) ++i;
    return i;
  }

  Point alpha_;
  Point beta_;
  Point rref1_;
  Point rref2_;
  std::size_t c1_ = 0;
  std::size_t c2_ = 0;
  std::size_t alpha_pivot_ = 0;
  std::size_t beta_pivot_ = 0;
  Rational det_;
};

struct PlaneLines {
  std::unordered_map<Point, bool, PointHash> alpha;  // line key → meets a new point
  std::unordered_map<Point, bool, PointHash> beta;
  bool any_new = false;
};

}  // namespace

GenerationState generate(std::span<const Direction> angles, const GenerationConfig& cfg) {
  validate_angle_set(angles);
  if (cfg.max_points == 0) throw Error(Errc::Config, "max_points must be positive");
  const std::size_t n = angles.front().dimension();
  const auto margin = cfg.margin_box();
  if (margin && margin->dimension() != n) throw Error(Errc::DimensionMismatch, "retention box dimension");

  GenerationState state(std::vector<Direction>(angles.begin(), angles.end()), cfg);
  {
    std::vector<Point> seeds{Point(n), basis_vector(n, 0)};
    if (cfg.max_points < seeds.size()) {
      seeds.resize(cfg.max_points);
      state.cap_truncated_ = true;
    }
    state.append_depth(std::move(seeds), {});
  }

  std::vector<AnglePair> pairs;
  for (std::size_t a = 0; a < angles.size(); ++a) {
    for (std::size_t b = a + 1; b < angles.size(); ++b) {
      pairs.emplace_back(angles[a].coords(), angles[b].coords());
    }
  }

  for (std::size_t k = 1; k <= cfg.max_depth && !state.cap_truncated_; ++k) {
    const auto previous = state.points_at_depth(k - 1);
    const std::size_t frontier_begin = k == 1 ? 0 : state.depth_end_[k - 2];
    DepthStats stats;
    std::unordered_set<Point, PointHash> fresh;

    if (frontier_begin < previous.size()) {
      for (const auto& pair : pairs) {
        std::unordered_map<Point, PlaneLines, PointHash> planes;
        for (std::size_t i = 0; i < previous.size(); ++i) {
          const bool is_new = i >= frontier_begin;
          PlaneLines& pl = planes[pair.plane_key(previous[i])];
          bool& a = pl.alpha[pair.alpha_line(previous[i])];
          bool& b = pl.beta[pair.beta_line(previous[i])];
          a = a || is_new;
          b = b || is_new;
          pl.any_new = pl.any_new || is_new;
        }
        for (const auto& [key, pl] : planes) {
          if (!pl.any_new) continue;
          for (const auto& [la, na] : pl.alpha) {
            for (const auto& [lb, nb] : pl.beta) {
              if (!na && !nb) continue;
              ++stats.line_pairs;
              Point z = pair.meet(la, lb);
              if (margin && !margin->contains(z)) {
                ++stats.discarded;
                continue;
              }
              if (state.depth_index_.contains(z)) continue;
              fresh.insert(std::move(z));
            }
          }
        }
      }
    }

    if (stats.discarded > 0) state.box_truncated_ = true;
    std::vector<Point> added(fresh.begin(), fresh.end());
    std::sort(added.begin(), added.end(), numeric_order_less);
    const std::size_t room = cfg.max_points - state.points_.size();
    if (added.size() > room) {
      added.resize(room);
      state.cap_truncated_ = true;
    }
    stats.added = added.size();
    state.append_depth(std::move(added), stats);
  }
  return state;
}

std::vector<Point> points_at_depth(const GenerationState& state, std::size_t k) {
  const auto s = state.points_at_depth(k);
  return {s.begin(), s.end()};
}

}  // namespace origami
