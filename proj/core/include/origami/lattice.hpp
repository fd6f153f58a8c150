#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "origami/construction.hpp"
#include "origami/geometry.hpp"
#include "origami/hnf.hpp"

namespace origami {

/// Full-rank lattice in ℚⁿ. Keeps the generators it was built from (used for
/// coordinates) and the canonical pair (denominator, HNF), which decides
/// lattice equality: denominator is the lcm of all coordinate denominators
/// and hnf the Hermite normal form of denominator·generators.
class LatticeBasis {
 public:
  /// Exactly n linearly independent rational generators of dimension n.
  /// Throws RankDeficient otherwise.
  static LatticeBasis from_generators(std::vector<Point> generators);
  /// η-valued input is rejected with NonRationalScalar.
  static LatticeBasis from_generators(std::span<const EtaPoint> generators);
  /// Lattice spanned by an arbitrary finite point set of dimension n; the
  /// generators are the HNF columns. Throws RankDeficient if the span is
  /// not full.
  static LatticeBasis span_of(std::span<const Point> points, std::size_t n);

  std::size_t dimension() const noexcept { return generators_.size(); }
  const std::vector<Point>& generators() const noexcept { return generators_; }
  const Integer& denominator() const noexcept { return denominator_; }
  const IntMatrix& hnf() const noexcept { return hnf_; }
  /// Generators taken from the HNF columns (column / denominator).
  std::vector<Point> hnf_generators() const;

  /// Integer coordinates of p in generators(), or nullopt if p ∉ L.
  std::optional<std::vector<Integer>> coordinates(std::span<const Rational> p) const;
  bool contains(std::span<const Rational> p) const;
  /// Covolume |det| of the generator matrix.
  Rational covolume() const;
  bool contains_lattice(const LatticeBasis& sub) const;
  /// [this : sub] for sub ⊆ this; nullopt if sub is not a sublattice.
  std::optional<Integer> index_of(const LatticeBasis& sub) const;
  /// All lattice points in the box, numerically sorted.
  std::vector<Point> points_in_box(const Box& box) const;

  /// A basis 1, τ₁, …, τ_{n−1} of the same lattice; DegenerateTau if 1 is
  /// not a primitive lattice vector.
  std::vector<Point> unit_first_basis() const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.denominator_ == b.denominator_ && a.hnf_ == b.hnf_;
  }

 private:
  LatticeBasis() = default;
  void build_canonical(std::span<const Point> points);
  void build_inverse();

  std::vector<Point> generators_;
  Integer denominator_ = 1;
  IntMatrix hnf_;
  std::vector<Point> inverse_;  // rows of the inverse generator matrix
};

/// hnf_canonicalize: LatticeBasis from exactly n generators.
inline LatticeBasis hnf_canonicalize(std::vector<Point> generators) {
  return LatticeBasis::from_generators(std::move(generators));
}

/// member: integer coordinates of p in L's generators, or nullopt.
std::optional<std::vector<Integer>> member(const LatticeBasis& lattice, std::span<const Rational> p);

/// [[0, 1]]_{α, α′}.
std::optional<Point> tau_from_pair(const Direction& alpha, const Direction& alpha_prime);

/// {1} ∪ {τᵢ, τᵢ − 1 : i = 1 … n−1} for the basis 1, τ₁, …, τ_{n−1} of L, in
/// that order. Throws DegenerateTau or CollidingDirections.
std::vector<Direction> angles_for_lattice(const LatticeBasis& lattice);

struct ClosureViolation {
  Point q;
  std::size_t xi = 0;   // angle indices
  std::size_t phi = 0;
  Point point;          // [[0, q]]_{ξ, φ}, not in L
};

struct ClosureReport {
  std::size_t coeff_range = 0;
  std::size_t checks = 0;
  std::size_t defined = 0;
  std::vector<ClosureViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// For every q = Σ aᵢ gᵢ over L's generators with |aᵢ| ≤ coeff_range and every
/// ordered pair of distinct angles (ξ, φ), checks [[0, q]]_{ξ,φ} ∈ L or ∅.
ClosureReport verify_closure_table(std::span<const Direction> angles, const LatticeBasis& lattice,
                                   std::size_t coeff_range = 3);

struct AnglePairing {
  std::size_t alpha = 0;        // index into the angle set
  std::size_t alpha_prime = 0;
  Point ell;                    // ℓ with ξ = [[0, ℓ]]_{α, α′}
  Point xi;
};

struct PairingReport {
  std::vector<AnglePairing> pairs;
  std::vector<std::size_t> independent_subset;  // 1, α₁, …, α_{n−1}
  std::vector<std::size_t> leftover;
  std::vector<Point> xi_basis;                  // 1, ξ₁, …, ξ_{n−1}
};

struct ScanFailure {
  std::string reason;
  std::size_t stage = 0;
  bool span_deficient = false;
};

/// Builds the flag V₁ ⊂ V₂ ⊂ … of the lower-bound argument: at stage i,
/// looks for angles α, α′ outside V_{i−1} and a small lattice element ℓ
/// (ℓ = 1 first, then combinations of 1, ξ₁, … with coefficients in [−2, 2])
/// with [[0, ℓ]]_{α,α′} ∉ V_{i−1}. Stage indices run over 1 < i ≤ n−1 after
/// the first pair.
std::variant<PairingReport, ScanFailure> structural_scan(std::span<const Direction> angles);

enum class DenseReason { CoplanarQuadruple, GapShrinking };

struct LatticeVerdict {
  LatticeBasis basis;
  std::size_t verified_depth = 0;
  Box box;
  bool refined = false;          // basis differs from the structural candidate
  std::size_t points_checked = 0;
  std::size_t box_points = 0;    // lattice points in the box, all generated
};

struct DenseVerdict {
  DenseReason reason = DenseReason::CoplanarQuadruple;
  std::vector<std::size_t> indices;
  std::string data;
};

struct UnknownVerdict {
  std::string diagnostics;
};

using Verdict = std::variant<LatticeVerdict, DenseVerdict, UnknownVerdict>;

/// Bounded-evidence classification of M(U): coplanar quadruple → dense
/// evidence; otherwise structural candidate lattice, generation to
/// cfg.max_depth, refinement to the span of the generated points when the
/// candidate misses some of them, and a coverage check of every lattice point
/// in the retention box (default [−2, 2]ⁿ). Lattice verdicts are evidence up
/// to the recorded depth and box, not proof.
Verdict lattice_hypothesis_test(std::span<const Direction> angles, const GenerationConfig& cfg);

const char* dense_reason_code(DenseReason r) noexcept;

}  // namespace origami
