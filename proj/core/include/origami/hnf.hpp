#pragma once

#include <vector>

#include "origami/rational.hpp"

namespace origami {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<Integer>>;

/// Column-style Hermite normal form of an n×m integer matrix whose columns
/// span a rank-n lattice. The result H (n×n) generates the same lattice by
/// unimodular column operations and is the unique matrix with
///   H[i][j] = 0 for i > j (upper triangular),
///   H[i][i] > 0,
///   0 ≤ H[i][j] < H[i][i] for j > i.
/// Column 0 therefore spans the lattice's intersection with the first axis.
/// Throws RankDeficient if the columns have rank < n.
IntMatrix hermite_normal_form(IntMatrix columns);

Integer determinant_of_triangular(const IntMatrix& h);

}  // namespace origami
