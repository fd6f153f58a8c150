#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "origami/construction.hpp"
#include "origami/hnf.hpp"
#include "origami/lattice.hpp"
#include "origami/polynomial.hpp"

namespace origami {

/// Coordinates of the angle representatives in a basis τ, read as
/// polynomials: row i holds αᵢ = Σⱼ a_{ij} τⱼ and pⱼ(x) = Σᵢ a_{ij} xⁱ
/// (rows are numbered from 1).
struct OrigamiPolynomialMatrix {
  std::vector<std::vector<Rational>> matrix;  // m × n
  std::vector<Point> basis;                   // τ₁ … τₙ
  std::vector<std::size_t> angle_order;       // row i is input angle angle_order[i]
  std::vector<Polynomial> polynomials;
  std::vector<int> degrees;                   // −1 for a zero polynomial
};

/// Rows are the given representatives in the given order. RankDeficientBasis
/// if tau is not a basis of ℚⁿ.
OrigamiPolynomialMatrix origami_polynomials(std::span<const Point> representatives, std::span<const Point> tau);
OrigamiPolynomialMatrix origami_polynomials(std::span<const Direction> angles, std::span<const Point> tau);

struct DistinctDegreeResult {
  OrigamiPolynomialMatrix polynomials;  // over the new basis, rows reordered
  std::vector<Point> basis;             // τ′ = C⁻¹ τ
  std::vector<Point> angles;            // row representatives, reordered
  IntMatrix column_ops;                 // C, unimodular: new rows = old rows · C
  bool changed = false;
};

/// Makes the origami polynomials' degrees pairwise distinct. Inputs whose
/// degrees already differ are returned unchanged. Otherwise rows are scaled to
/// primitive integer vectors, n independent rows (picked greedily from the
/// last row upward) are moved to the bottom, and that block is made upper
/// triangular by unimodular integer column operations, working from its last
/// row upward. The new basis spans the same lattice as τ (checked by HNF
/// equality). CannotTriangularize if fewer than n independent rows exist.
DistinctDegreeResult distinct_degree_basis(std::span<const Point> representatives, std::span<const Point> tau);

struct IrrelevantAngle {
  EtaPoint raw;           // Σᵢ ηⁱ αᵢ, i = 1 … m
  EtaDirection direction;
};

/// β = Σᵢ ηⁱ αᵢ over the representatives in the order given, η a formal
/// indeterminate. The lattice fixes the ambient dimension.
IrrelevantAngle irrelevant_angle(std::span<const Point> representatives, const LatticeBasis& lattice);

struct IrrelevantViolation {
  Point p;
  Point q;
  std::size_t angle = 0;
  bool beta_first = false;  // line through p has direction β
  std::string detail;
};

struct IrrelevantReport {
  std::size_t depth = 0;
  std::size_t points = 0;
  std::size_t checks = 0;
  std::size_t nonexistent = 0;
  std::size_t in_lattice = 0;
  std::size_t violation_count = 0;
  std::vector<IrrelevantViolation> violations;  // first few only
  bool ok() const noexcept { return violation_count == 0; }
};

/// Generates M_depth(U) and intersects, over ℚ(η), the line through p with
/// direction αᵢ and the line through q with direction β (and the reverse
/// assignment) for every ordered pair of points (p, q). Every result must be
/// nonexistent or an η-free point of the lattice.
IrrelevantReport verify_irrelevant(std::span<const Direction> angles, const EtaPoint& beta,
                                   const LatticeBasis& lattice, std::size_t depth,
                                   std::size_t max_reported = 16);

struct BasisSearchResult {
  std::size_t minimal_size = 0;  // 0 when nothing matched
  std::vector<std::vector<std::size_t>> bases;  // index sets, sorted
  std::size_t candidates_tested = 0;
  bool sampled = false;          // candidate count exceeded the cap
};

/// Subsets of the angles that contain the unit direction, smallest first from
/// size 2n − 1, whose bounded generation (cfg) stays inside the lattice and
/// covers every lattice point of the retention box. Desk-scale evidence, not
/// proof. When a size has more than max_candidates subsets, a deterministic
/// sample of that many is tested.
BasisSearchResult origami_basis_search(std::span<const Direction> angles, const GenerationConfig& cfg,
                                       const LatticeBasis& lattice, std::size_t max_candidates = 100'000);

}  // namespace origami
