#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <span>
#include <vector>

#include "origami/geometry.hpp"

namespace origami {

/// Axis-aligned box with lo ≤ hi componentwise.
struct Box {
  Point lo;
  Point hi;

  static Box cube(std::size_t n, const Rational& lo, const Rational& hi);
  std::size_t dimension() const noexcept { return lo.size(); }
  bool contains(std::span<const Rational> p) const;
  /// Same center, half-widths multiplied by factor.
  Box scaled(const Rational& factor) const;
  void validate() const;

  friend bool operator==(const Box&, const Box&) = default;
};

struct GenerationConfig {
  std::size_t max_depth = 3;
  /// Reporting window. Points are kept only inside the margin box, which is
  /// this box scaled by margin_factor about its center. No box: no clipping.
  std::optional<Box> retention_box;
  Rational margin_factor = Rational(2);
  std::size_t max_points = 1'000'000;

  std::optional<Box> margin_box() const;
};

struct DepthStats {
  std::size_t depth = 0;
  std::size_t total = 0;        // |M_k|
  std::size_t added = 0;        // |M_k \ M_{k-1}|
  std::size_t line_pairs = 0;   // line pairs intersected at this depth
  std::size_t discarded = 0;    // intersections outside the margin box
};

/// M_0 ⊆ M_1 ⊆ … ⊆ M_depth. Points are stored once, in order of the depth at
/// which they first appear (numeric order within a depth), so M_k is a prefix.
class GenerationState {
 public:
  GenerationState(std::vector<Direction> angles, GenerationConfig config);

  std::size_t dimension() const noexcept { return angles_.front().dimension(); }
  const std::vector<Direction>& angles() const noexcept { return angles_; }
  const GenerationConfig& config() const noexcept { return config_; }
  std::size_t depth() const noexcept { return depth_end_.size() - 1; }

  /// All points of M_depth().
  std::span<const Point> points() const noexcept { return points_; }
  /// M_k as a prefix of points(); DepthOutOfRange for k > depth().
  std::span<const Point> points_at_depth(std::size_t k) const;
  /// M_k \ M_{k-1} (M_0 for k = 0).
  std::span<const Point> added_at_depth(std::size_t k) const;
  /// Depth at which p first appeared, if generated.
  std::optional<std::size_t> depth_of(const Point& p) const;
  bool contains(const Point& p) const { return depth_of(p).has_value(); }

  bool box_truncated() const noexcept { return box_truncated_; }
  bool cap_truncated() const noexcept { return cap_truncated_; }
  const std::vector<DepthStats>& stats() const noexcept { return stats_; }

 private:
  friend GenerationState generate(std::span<const Direction>, const GenerationConfig&);
  void append_depth(std::vector<Point> added, DepthStats stats);

  std::vector<Direction> angles_;
  GenerationConfig config_;
  std::vector<Point> points_;
  std::vector<std::size_t> depth_end_;
  std::unordered_map<Point, std::size_t, PointHash> depth_index_;
  std::vector<DepthStats> stats_;
  bool box_truncated_ = false;
  bool cap_truncated_ = false;
};

/// Checks the angle-set preconditions shared by every construction entry
/// point: one dimension ≥ 2, at least two angles, pairwise distinct, and the
/// unit direction present.
void validate_angle_set(std::span<const Direction> angles);

/// Iterates M_k from the seed points {0, 1} up to cfg.max_depth. Only line
/// pairs meeting at least one point new since the previous depth are
/// intersected. Reaching max_points stops early with cap_truncated() set and
/// a deterministic prefix of the last depth.
GenerationState generate(std::span<const Direction> angles, const GenerationConfig& cfg);

/// M_k from a state; same as state.points_at_depth(k) copied.
std::vector<Point> points_at_depth(const GenerationState& state, std::size_t k);

}  // namespace origami
