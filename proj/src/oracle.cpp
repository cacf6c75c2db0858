#include "diffschub/oracle.hpp"

#include <algorithm>
#include <functional>

namespace diffschub::oracle {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw InternalInconsistency("integer overflow in oracle coefficient");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw InternalInconsistency("integer overflow in oracle coefficient");
    return r;
}

void MonomialMap::add(const std::vector<int>& exp, long long c) {
    if (static_cast<int>(exp.size()) != width())
        throw InternalInconsistency("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exp, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

long long MonomialMap::coeff(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

/******** Schur polynomials and expansions ********/

namespace {

// Walk all SSYT of shape lam, entries 1..m, cell by cell in row order.
// entry(i,j) >= entry(i,j-1) and > entry(i-1,j).
void ssyt_walk(const Partition& lam, int m, std::vector<std::vector<int>>& t, int i,
               int j, std::vector<int>& weight, MonomialMap& out) {
    if (i == lam.rows()) {
        out.add(weight, 1);
        return;
    }
    if (j == lam.part(i + 1)) {
        ssyt_walk(lam, m, t, i + 1, 0, weight, out);
        return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= m; ++v) {
        t[i][j] = v;
        ++weight[v - 1];
        ssyt_walk(lam, m, t, i, j + 1, weight, out);
        --weight[v - 1];
    }
}

}  // namespace

MonomialMap schur_poly(const Partition& lam, int m) {
    MonomialMap out(1, m);
    if (lam.rows() > m) return out;
    std::vector<std::vector<int>> t(lam.rows());
    for (int i = 0; i < lam.rows(); ++i) t[i].resize(lam.part(i + 1), 0);
    std::vector<int> weight(m, 0);
    ssyt_walk(lam, m, t, 0, 0, weight, out);
    return out;
}

MonomialMap poly_multiply(const MonomialMap& a, const MonomialMap& b) {
    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::max(a.hi(), b.hi());
    MonomialMap out(lo, hi);
    std::vector<int> exp(hi - lo + 1, 0);
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::fill(exp.begin(), exp.end(), 0);
            for (int i = 0; i < a.width(); ++i) exp[a.lo() - lo + i] = ea[i];
            for (int i = 0; i < b.width(); ++i) exp[b.lo() - lo + i] += eb[i];
            out.add(exp, checked_mul(ca, cb));
        }
    }
    return out;
}

FormalSum<Partition> ssyt_expand(const MonomialMap& p) {
    // Symmetry check: invariance under every adjacent variable swap.
    for (const auto& [exp, c] : p) {
        for (int i = 0; i + 1 < p.width(); ++i) {
            if (exp[i] == exp[i + 1]) continue;
            std::vector<int> sw = exp;
            std::swap(sw[i], sw[i + 1]);
            if (p.coeff(sw) != c)
                throw NotSymmetric("not symmetric in x_" + std::to_string(p.lo() + i) +
                                   ", x_" + std::to_string(p.lo() + i + 1));
        }
    }
    MonomialMap rest = p;
    FormalSum<Partition> out;
    for (int guard = 0; !rest.is_zero(); ++guard) {
        if (guard > 200000)
            throw NotSchurPositiveDecomposable("peeling did not terminate");
        const auto& [exp, c] = *std::prev(rest.end());  // lex-leading monomial
        std::vector<int> parts = exp;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1])
                throw InternalInconsistency("leading exponent of a symmetric polynomial "
                                            "is not a partition");
        Partition lam{parts};
        long long cc = c;
        out.add(lam, Rational(cc));
        MonomialMap s = schur_poly(lam, p.width());
        for (const auto& [es, cs] : s) rest.add(es, checked_mul(-cc, cs));
    }
    return out;
}

/******** Littlewood-Richardson counting ********/

namespace {

struct LrState {
    const Partition* lam;
    const Partition* nu;
    int nrows = 0;
    std::vector<int> remaining;          // boxes of each value still to place
    std::vector<std::vector<int>> fill;  // 0 = empty; row-indexed over nu
    std::vector<int> placed;             // count of each value placed so far
};

// Cells in reverse reading order: rows top to bottom, each row right to left.
// This makes the lattice condition checkable prefix by prefix.
long long lr_walk(LrState& st, int cell) {
    // find cell-th skew cell in reverse reading order
    int i = 0, j = -1, seen = 0;
    for (i = 0; i < st.nrows; ++i) {
        int lo = st.lam->part(i + 1), hi = st.nu->part(i + 1);
        if (cell - seen < hi - lo) {
            j = hi - 1 - (cell - seen);
            break;
        }
        seen += hi - lo;
    }
    if (j < 0) return 1;  // all cells placed
    long long total = 0;
    const int nvals = static_cast<int>(st.remaining.size());
    for (int v = 1; v <= nvals; ++v) {
        if (st.remaining[v - 1] == 0) continue;
        if (v > 1 && st.placed[v - 1] >= st.placed[v - 2]) continue;  // lattice
        if (j + 1 < st.nu->part(i + 1) && st.fill[i][j + 1] < v) continue;  // row weak
        if (i > 0 && j < st.nu->part(i) && st.lam->part(i) <= j && st.fill[i - 1][j] >= v)
            continue;  // column strict vs filled cell above
        // column strictness against a cell above that is still empty cannot
        // happen: the cell above is earlier in reading order.
        if (i > 0 && j >= st.lam->part(i) && j < st.nu->part(i) && st.fill[i - 1][j] == 0)
            throw InternalInconsistency("reading order violated");
        st.fill[i][j] = v;
        --st.remaining[v - 1];
        ++st.placed[v - 1];
        total = checked_add(total, lr_walk(st, cell + 1));
        st.fill[i][j] = 0;
        ++st.remaining[v - 1];
        --st.placed[v - 1];
    }
    return total;
}

}  // namespace

long long lr_count(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lam)) return 0;
    LrState st;
    st.lam = &lam;
    st.nu = &nu;
    st.nrows = nu.rows();
    st.remaining.assign(mu.rows(), 0);
    for (int i = 1; i <= mu.rows(); ++i) st.remaining[i - 1] = mu.part(i);
    st.placed.assign(mu.rows(), 0);
    st.fill.resize(nu.rows());
    for (int i = 0; i < nu.rows(); ++i) st.fill[i].assign(nu.part(i + 1), 0);
    return lr_walk(st, 0);
}

/******** Schubert polynomials ********/

namespace {

void compatible_walk(const std::vector<int>& h, std::size_t j, int prev, int m,
                     std::vector<int>& exp, MonomialMap& out) {
    if (j == h.size()) {
        out.add(exp, 1);
        return;
    }
    int lo = prev;
    if (j > 0 && h[j - 1] < h[j]) ++lo;  // strict at ascents
    int hi = std::min(h[j], m);
    for (int a = lo; a <= hi; ++a) {
        ++exp[a - 1];
        compatible_walk(h, j + 1, a, m, exp, out);
        --exp[a - 1];
    }
}

}  // namespace

MonomialMap schubert_poly(const PermutationZ& w, int m) {
    if (w.window_start() < 1)
        throw MalformedWord("schubert_poly needs a positive-window permutation");
    MonomialMap out(1, m);
    std::vector<int> exp(m, 0);
    for (const auto& h : reduced_words(w)) compatible_walk(h, 0, 1, m, exp, out);
    return out;
}

namespace {

// Trace the wire entering row r from the west; returns the exit column.
// Cells carry either a cross (both strands pass through) or an elbow
// (west->north, south->east); cells outside the cross-set are elbows.
int trace_wire(int r, int ncols, const std::vector<std::vector<bool>>& cross) {
    int i = r, j = 1;
    bool from_west = true;
    while (i >= 1) {
        bool is_cross = i <= static_cast<int>(cross.size()) &&
                        j <= static_cast<int>(cross[i - 1].size()) && cross[i - 1][j - 1];
        bool go_north = is_cross ? !from_west : from_west;
        if (go_north) {
            --i;          // continue upward: enter (i-1, j) from the south
            from_west = false;
        } else {
            ++j;          // continue east: enter (i, j+1) from the west
            from_west = true;
        }
        if (j > ncols) throw InternalInconsistency("wire escaped the grid");
    }
    return j;
}

}  // namespace

MonomialMap schubert_poly_pipe_dreams(const PermutationZ& w, int m) {
    if (w.window_start() < 1)
        throw MalformedWord("pipe dreams need a positive-window permutation");
    const int N = std::max(w.window_end(), 1);
    const int L = w.length();
    MonomialMap out(1, m);
    std::vector<std::pair<int, int>> cells;  // staircase i+j <= N
    for (int i = 1; i <= N; ++i)
        for (int j = 1; i + j <= N; ++j) cells.emplace_back(i, j);
    const int C = static_cast<int>(cells.size());
    if (L > C) return out;
    std::vector<int> pick(L);
    std::function<void(int, int)> choose = [&](int from, int depth) {
        if (depth == L) {
            std::vector<std::vector<bool>> cross(N);
            for (int i = 0; i < N; ++i) cross[i].assign(std::max(0, N - 1 - i), false);
            std::vector<int> rowcount(N, 0);
            for (int t = 0; t < L; ++t) {
                auto [ci, cj] = cells[pick[t]];
                cross[ci - 1][cj - 1] = true;
                ++rowcount[ci - 1];
            }
            for (int r = 1; r <= N; ++r)
                if (trace_wire(r, 2 * N + 2, cross) != w.apply(r)) return;
            std::vector<int> exp(m, 0);
            for (int i = 1; i <= N; ++i) {
                if (rowcount[i - 1] == 0) continue;
                if (i > m) return;  // would use a variable beyond the range
                exp[i - 1] = rowcount[i - 1];
            }
            out.add(exp, 1);
            return;
        }
        for (int c = from; c <= C - (L - depth); ++c) {
            pick[depth] = c;
            choose(c + 1, depth + 1);
        }
    };
    choose(0, 0);
    return out;
}

FormalSum<PermutationZ> schubert_basis_expand(const MonomialMap& p) {
    if (p.lo() < 1) throw NotInSpan("polynomial uses non-positive variables");
    MonomialMap rest = p;
    FormalSum<PermutationZ> out;
    // Leading = largest exponent at the highest variable index, then next one
    // down; under this order x^{code(w)} is the unique leading monomial of S_w.
    auto precedes = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    for (int guard = 0; !rest.is_zero(); ++guard) {
        if (guard > 100000) throw NotInSpan("expansion did not terminate");
        auto lead = rest.begin();
        for (auto it = rest.begin(); it != rest.end(); ++it)
            if (precedes(lead->first, it->first)) lead = it;
        std::vector<int> code(p.lo() - 1, 0);  // pad positions 1..lo-1
        code.insert(code.end(), lead->first.begin(), lead->first.end());
        PermutationZ w = from_lehmer_code(code);
        long long c = lead->second;
        out.add(w, Rational(c));
        // Subtract the FULL Schubert polynomial (letters reach window_end-1);
        // it may still fit inside [lo..hi] even when the window does not.
        MonomialMap s = schubert_poly(w, std::max(p.hi(), w.window_end() - 1));
        std::vector<int> exp(p.width(), 0);
        for (const auto& [es, cs] : s) {
            // re-base [1..m_full] onto [lo..hi]; entries outside must be zero
            for (int i = 0; i < static_cast<int>(es.size()); ++i)
                if (es[i] != 0 && (i < p.lo() - 1 || i >= p.hi()))
                    throw NotInSpan("Schubert summand escapes the variable range");
            for (int i = 0; i < p.width(); ++i) exp[i] = es[p.lo() - 1 + i];
            rest.add(exp, checked_mul(-c, cs));
        }
    }
    return out;
}

/******** Monk's rule and Stanley symmetric functions ********/

FormalSum<PermutationZ> monk_rule(int k, const PermutationZ& w) {
    // Contributing t_{ab} necessarily live in this extended window: anything
    // farther out is blocked by an intermediate fixed point.
    const int lo = std::min(w.window_start(), k) - 1;
    const int hi = std::max(w.window_end(), k + 1) + 1;
    FormalSum<PermutationZ> out;
    const int lw = w.length();
    for (int a = lo; a <= k; ++a) {
        for (int b = k + 1; b <= hi; ++b) {
            PermutationZ v = right_transposition(w, a, b);
            if (v.length() == lw + 1) out.add(v, Rational(1));
        }
    }
    return out;
}

FormalSum<Partition> stanley_schur_expand(const PermutationZ& w) {
    if (w.is_identity()) return FormalSum<Partition>::unit(Partition());
    const int m = w.length();
    // F_w is shift-invariant; with the shift n = l(w) the word bound
    // a_j <= h_j + n is vacuous for a_j <= m, so enumerate the unshifted
    // words with entries capped at m directly.
    MonomialMap poly(1, m);
    std::vector<int> exp(m, 0);
    std::function<void(const std::vector<int>&, std::size_t, int)> walk =
        [&](const std::vector<int>& h, std::size_t j, int prev) {
            if (j == h.size()) {
                poly.add(exp, 1);
                return;
            }
            int lo = prev;
            if (j > 0 && h[j - 1] < h[j]) ++lo;
            for (int a = lo; a <= m; ++a) {
                ++exp[a - 1];
                walk(h, j + 1, a);
                --exp[a - 1];
            }
        };
    for (const auto& h : reduced_words(w)) walk(h, 0, 1);
    return ssyt_expand(poly);
}

}  // namespace diffschub::oracle
