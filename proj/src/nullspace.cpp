#include "diffschub/nullspace.hpp"

#include <algorithm>

namespace diffschub {

namespace {

struct Pivot {
    std::size_t row, col;
};

// Forward elimination into (unordered) row echelon form; returns the pivots in
// the order they were chosen.  `cols` lists the column scan order.
std::vector<Pivot> eliminate(Matrix& m, const std::vector<std::size_t>& cols,
                             bool prefer_last_row) {
    std::vector<Pivot> pivots;
    std::vector<bool> used(m.size(), false);
    for (std::size_t c : cols) {
        std::size_t pr = m.size();
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (used[r] || m[r][c].is_zero()) continue;
            pr = r;
            if (!prefer_last_row) break;
        }
        if (pr == m.size()) continue;
        used[pr] = true;
        Rational inv = Rational(1) / m[pr][c];
        for (auto& x : m[pr]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == pr || m[r][c].is_zero()) continue;
            Rational f = m[r][c];
            for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[pr][j];
        }
        pivots.push_back({pr, c});
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> solve_nullspace(Matrix m, std::size_t ncols) {
    for (auto& row : m) row.resize(ncols, Rational(0));
    std::vector<std::size_t> order(ncols);
    for (std::size_t i = 0; i < ncols; ++i) order[i] = i;
    auto pivots = eliminate(m, order, /*prefer_last_row=*/false);

    std::vector<bool> is_pivot_col(ncols, false);
    for (const auto& p : pivots) is_pivot_col[p.col] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[f] = Rational(1);
        for (const auto& p : pivots) v[p.col] = -m[p.row][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t matrix_rank(Matrix m, bool reverse_pivot_order) {
    if (m.empty()) return 0;
    std::size_t ncols = 0;
    for (const auto& row : m) ncols = std::max(ncols, row.size());
    for (auto& row : m) row.resize(ncols, Rational(0));
    std::vector<std::size_t> order(ncols);
    for (std::size_t i = 0; i < ncols; ++i)
        order[i] = reverse_pivot_order ? ncols - 1 - i : i;
    return eliminate(m, order, reverse_pivot_order).size();
}

}  // namespace diffschub
