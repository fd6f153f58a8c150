#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "origami/construction.hpp"

namespace origami {

struct CoplanarResult {
  /// First quadruple (lexicographic in index order) whose representatives
  /// have rank 2.
  std::optional<std::array<std::size_t, 4>> indices;
  bool spans_space = false;  // span of all angles is ℝⁿ
};

CoplanarResult coplanar_quadruple(std::span<const Direction> angles);

struct SegmentGap {
  std::size_t depth = 0;
  std::size_t on_segment = 0;  // generated points on the closed segment
  Rational max_gap;            // in the segment parameter t ∈ [0, 1]
};

/// Gap profile of the generated points lying exactly on the segment
/// a + t(b − a), t ∈ [0, 1]; the endpoints always bound the gaps.
struct DensityProbe {
  std::vector<SegmentGap> per_depth;
  /// Longest run of consecutive depths with strictly decreasing max gap.
  std::size_t run_begin = 0;
  std::size_t run_length = 0;
  /// Depths at which the max gap strictly dropped (depth 0 included);
  /// their gaps form a strictly decreasing sequence.
  std::vector<std::size_t> reported_depths;
  /// ShrinkingGap evidence: ≥ 3 reported depths.
  bool shrinking() const noexcept { return reported_depths.size() >= 3; }
  /// Parameters t of points on the segment at the final depth.
  std::vector<Rational> parameters;
};

DensityProbe density_probe(const GenerationState& state, const Point& a, const Point& b);

}  // namespace origami
