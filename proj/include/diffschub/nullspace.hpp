#pragma once
#include <cstddef>
#include <vector>

#include "diffschub/rational.hpp"

namespace diffschub {

using Matrix = std::vector<std::vector<Rational>>;

// Exact basis of the right nullspace {v : M v = 0} via rational Gaussian
// elimination.  Pivot order is deterministic: columns left to right, and for
// each column the smallest-index row not yet used as a pivot.  Basis vectors
// come out one per free column, in column order.
std::vector<std::vector<Rational>> solve_nullspace(Matrix m, std::size_t ncols);

// Rank by the same elimination; with reverse_pivot_order the columns are
// scanned right to left and the largest-index available row wins, giving an
// independent cross-check for rank/nullity computations.
std::size_t matrix_rank(Matrix m, bool reverse_pivot_order = false);

}  // namespace diffschub
