#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "origami/analysis.hpp"
#include "origami/construction.hpp"
#include "origami/density.hpp"
#include "origami/lattice.hpp"
#include "origami/quaternion.hpp"

namespace origami {

/// One JSON document drives every subcommand. Unknown keys are rejected and
/// printing a parsed config reproduces it (parse ∘ print is the identity).
struct RunConfig {
  std::size_t dimension = 2;
  std::vector<Point> angles;            // as written; canonicalized on use
  std::size_t depth = 3;
  std::optional<Box> retention_box;
  Rational margin_factor = Rational(2);
  std::size_t max_points = 1'000'000;
  std::string out;                      // output path prefix; empty = stdout
  std::vector<std::string> formats;     // json, csv, svg, md
  std::optional<std::vector<Point>> lattice;  // generators
  std::optional<std::vector<Point>> basis;    // τ for polynomials
  std::optional<std::array<Point, 2>> segment;
  std::string quaternions;              // "lipschitz", "hurwitz" or empty
  std::size_t coeff_range = 3;
  std::size_t max_candidates = 100'000;

  GenerationConfig generation() const;
  std::vector<Direction> directions() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws Error(Config) on malformed input or unknown keys.
RunConfig parse_run_config(std::string_view json);
std::string print_run_config(const RunConfig& cfg);

/// {dimension, angles, depths, truncated}; depths[k] lists the points first
/// generated at depth k, in string order.
std::string snapshot_json(const GenerationState& state);
/// "depth,x1,…,xn" rows, by depth then string order.
std::string snapshot_csv(const GenerationState& state);
/// Dimension 2 only: points as circles, coloured by depth, in the retention
/// box (or the points' bounding box). Construction lines through the
/// previous depth's points are drawn when depth ≤ 3 and lines is set.
std::string snapshot_svg(const GenerationState& state, bool lines = true);

std::string lattice_json(const LatticeBasis& lattice);
std::string verdict_json(const Verdict& verdict);
/// Verdict plus, when probe is set, its density profile on segment [a, b].
std::string detect_json(const Verdict& verdict, const DensityProbe* probe, const Point& a, const Point& b);
std::string synthesize_json(const LatticeBasis& lattice, std::span<const Direction> angles,
                            const ClosureReport& closure);
std::string closure_json(const ClosureReport& report);
std::string density_json(const DensityProbe& probe, const Point& a, const Point& b);
std::string polynomials_json(const OrigamiPolynomialMatrix& m);
/// Aligned text: one row per angle, then the polynomials and degrees.
std::string polynomials_text(const OrigamiPolynomialMatrix& m);
std::string distinct_degree_json(const DistinctDegreeResult& r);
/// distinct is null when the reduction failed; distinct_error explains why.
std::string polynomials_report_json(const OrigamiPolynomialMatrix& m, const DistinctDegreeResult* distinct,
                                    const std::string& distinct_error);
std::string irrelevant_json(const IrrelevantAngle& beta, const IrrelevantReport& report);
std::string basis_search_json(const BasisSearchResult& r, std::span<const Direction> angles);
std::string order_table_json(std::span<const Quaternion> angles, const OrderTable& table);
std::string angles_json(std::span<const Direction> angles);

}  // namespace origami
