#include "diffschub/yops.hpp"

#include <map>
#include <mutex>

#include "diffschub/nullspace.hpp"

namespace diffschub {

DiagElement xi(const DiagElement& x) {
    return x.map([](const Partition& lam) {
        DiagElement out;
        for (const auto& [box, rest] : removable_corners(lam)) out.add(rest, Rational(1));
        return out;
    });
}

DiagElement nabla(const DiagElement& x) {
    return x.map([](const Partition& lam) {
        DiagElement out;
        for (const auto& [box, rest] : removable_corners(lam))
            out.add(rest, Rational(box.content()));
        return out;
    });
}

/******** recovery ********/

DiagElement recover(const DiagElement& D_in, const DiagElement& N_in) {
    DiagElement D = D_in, N = N_in, X;
    // Map order is degree-ascending, lex-greatest first within a degree, and
    // each step only disturbs lex-smaller diagrams of the same degree, so
    // begin() always points at the next diagram to resolve.
    int guard = 0;
    while (!D.is_zero()) {
        if (++guard > 2000000) throw NonRecoverable("resolution does not terminate");
        const auto& [mu, d_mu] = *D.begin();
        const Rational n_mu = N.coeff(mu);
        const int k = mu.rows();

        std::vector<int> up = mu.parts();
        up.push_back(1);
        const Partition mu_row(std::move(up));  // new row below, content -k
        Rational a_row, a_ext;
        bool have_ext = k > 0 && (k == 1 || mu.part(k - 1) > mu.part(k));
        if (have_ext) {
            std::vector<int> ex = mu.parts();
            ++ex[k - 1];  // extend the last row, content (mu_k + 1) - k
            const Partition mu_ext{std::move(ex)};
            const Rational c_row(-k), c_ext(mu.part(k) + 1 - k);
            // a_row + a_ext = d_mu;  c_row a_row + c_ext a_ext = n_mu
            a_ext = (n_mu - c_row * d_mu) / (c_ext - c_row);
            a_row = d_mu - a_ext;
            if (a_row.sign() < 0 || a_ext.sign() < 0)
                throw NonRecoverable("negative coefficient at " + mu.str());
            DiagElement step;
            step.add(mu_row, a_row);
            step.add(mu_ext, a_ext);
            D -= xi(step);
            N -= nabla(step);
            X += step;
        } else {
            // only the new-row preimage exists; the N equation must agree
            a_row = d_mu;
            if (a_row.sign() < 0)
                throw NonRecoverable("negative coefficient at " + mu.str());
            if (Rational(-k) * a_row != n_mu)
                throw NonRecoverable("inconsistent derivative pair at " + mu.str());
            DiagElement step = DiagElement::unit(mu_row, a_row);
            D -= xi(step);
            N -= nabla(step);
            X += step;
        }
    }
    if (!N.is_zero()) throw NonRecoverable("leftover content-weighted part");
    return X;
}

/******** multiplication ********/

namespace {

std::mutex g_mul_mutex;
std::map<std::pair<Partition, Partition>, DiagElement> g_mul_memo;

}  // namespace

DiagElement multiply(const Partition& lam, const Partition& mu) {
    if (lam.size() == 0) return DiagElement::unit(mu);
    if (mu.size() == 0) return DiagElement::unit(lam);
    const auto key = lam < mu ? std::make_pair(lam, mu) : std::make_pair(mu, lam);
    {
        std::lock_guard<std::mutex> lk(g_mul_mutex);
        auto it = g_mul_memo.find(key);
        if (it != g_mul_memo.end()) return it->second;
    }
    // Leibniz in both operators, then recover the product from its
    // derivative pair; recursion strictly lowers total degree.
    const DiagElement el = DiagElement::unit(lam), em = DiagElement::unit(mu);
    const DiagElement D = multiply(xi(el), em) + multiply(el, xi(em));
    const DiagElement N = multiply(nabla(el), em) + multiply(el, nabla(em));
    DiagElement X = recover(D, N);
    assert_integral(X, "product expansion");
    std::lock_guard<std::mutex> lk(g_mul_mutex);
    return g_mul_memo.emplace(key, std::move(X)).first->second;
}

DiagElement multiply(const DiagElement& x, const DiagElement& y) {
    DiagElement out;
    for (const auto& [lam, cx] : x)
        for (const auto& [mu, cy] : y) out += (cx * cy) * multiply(lam, mu);
    return out;
}

/******** the rho family ********/

DiagElement rho(int k, const DiagElement& x) {
    if (k < 1) throw InternalInconsistency("rho needs k >= 1");
    if (k == 1) return xi(x);
    const Rational inv(1, k - 1);
    return inv * (rho(k - 1, nabla(x)) - nabla(rho(k - 1, x)));
}

DiagElement rho_strip(int k, const DiagElement& x) {
    if (k < 1) throw InternalInconsistency("rho needs k >= 1");
    return x.map([k](const Partition& lam) {
        DiagElement out;
        for (const auto& s : border_strips_removable(lam, k))
            out.add(s.rest, Rational(s.height % 2 == 1 ? 1 : -1));
        return out;
    });
}

DiagElement power_sum(int k) {
    if (k < 1) throw InternalInconsistency("power_sum needs k >= 1");
    DiagElement out;
    for (int a = 0; a < k; ++a) {
        std::vector<int> parts{k - a};
        parts.insert(parts.end(), a, 1);
        out.add(Partition(std::move(parts)), Rational(a % 2 == 0 ? 1 : -1));
    }
    return out;
}

/******** characters ********/

namespace {

long long mn_chi(const Partition& lam, const std::vector<int>& cycle, std::size_t i) {
    if (i == cycle.size()) return lam.size() == 0 ? 1 : 0;
    long long total = 0;
    for (const auto& s : border_strips_removable(lam, cycle[i])) {
        long long sub = mn_chi(s.rest, cycle, i + 1);
        total += (s.height % 2 == 1) ? sub : -sub;
    }
    return total;
}

}  // namespace

CharValue character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw SizeMismatch("character needs |lambda| = |mu|, got " + lam.str() + " / " +
                           mu.str());
    CharValue cv{lam, mu, 0, 1};
    cv.chi = mn_chi(lam, mu.parts(), 0);
    for (int i = 1, run = 0; i <= mu.size(); ++i) {
        run = 0;
        for (int p : mu.parts())
            if (p == i) ++run;
        for (int j = 1; j <= run; ++j) cv.z *= i * static_cast<long long>(j);
    }
    // z = prod_i i^(m_i) m_i! accumulated as (i*1)(i*2)...(i*m_i) per part size
    return cv;
}

DiagElement xi_lambda(const Partition& nu, const DiagElement& x) {
    if (nu.size() == 0) return x;
    DiagElement out;
    for (const Partition& mu : partitions_of(nu.size())) {
        const CharValue cv = character(nu, mu);
        if (cv.chi == 0) continue;
        DiagElement y = x;
        // right-to-left over the decreasing parts: smallest factor acts first
        for (int i = mu.rows(); i >= 1; --i) y = rho_strip(mu.part(i), y);
        out += Rational(cv.chi, cv.z) * y;
    }
    return out;
}

/******** determinantal identities ********/

namespace {

// Determinant of a matrix of diagram-ring entries, expanded along rows with
// a memo per surviving-column mask.  Entries are (partition, is_zero) pairs.
struct DetEntry {
    Partition p;
    bool zero = false;
};

DiagElement det_expand(const std::vector<std::vector<DetEntry>>& m, unsigned mask,
                       std::map<unsigned, DiagElement>& memo) {
    const int n = static_cast<int>(m.size());
    const int row = n - __builtin_popcount(mask);
    if (row == n) return DiagElement::unit(Partition());
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    DiagElement out;
    int pos = 0;  // parity of the column's index among surviving columns
    for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        const int sign = pos++ % 2 == 0 ? 1 : -1;
        if (m[row][j].zero) continue;
        DiagElement minor = det_expand(m, mask & ~(1u << j), memo);
        DiagElement cell = multiply(DiagElement::unit(m[row][j].p), minor);
        out += Rational(sign) * cell;
    }
    return memo.emplace(mask, std::move(out)).first->second;
}

DiagElement det_eval(const std::vector<std::vector<DetEntry>>& m) {
    if (m.empty()) return DiagElement::unit(Partition());
    std::map<unsigned, DiagElement> memo;
    return det_expand(m, (1u << m.size()) - 1, memo);
}

DetEntry h_entry(int r) {  // h_r = (r), h_0 = empty, h_{<0} = 0
    if (r < 0) return {Partition(), true};
    if (r == 0) return {Partition(), false};
    return {Partition({r}), false};
}

DetEntry e_entry(int r) {  // e_r = (1^r)
    if (r < 0) return {Partition(), true};
    return {Partition(std::vector<int>(r, 1)), false};
}

}  // namespace

DiagElement jacobi_trudi_h(const Partition& lam) {
    const int n = lam.rows();
    std::vector<std::vector<DetEntry>> m(n, std::vector<DetEntry>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = h_entry(lam.part(i) - i + j);
    return det_eval(m);
}

DiagElement jacobi_trudi_e(const Partition& lam) {
    const Partition c = lam.conjugate();
    const int n = c.rows();
    std::vector<std::vector<DetEntry>> m(n, std::vector<DetEntry>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = e_entry(c.part(i) - i + j);
    return det_eval(m);
}

DiagElement giambelli(const Partition& lam) {
    const Partition c = lam.conjugate();
    int d = 0;  // Durfee square: diagonal boxes with arms a_i and legs b_i
    while (lam.part(d + 1) > d) ++d;
    std::vector<std::vector<DetEntry>> m(d, std::vector<DetEntry>(d));
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            const int arm = lam.part(i) - i, leg = c.part(j) - j;
            std::vector<int> hook{arm + 1};
            hook.insert(hook.end(), leg, 1);
            m[i - 1][j - 1] = {Partition(std::move(hook)), false};
        }
    }
    return det_eval(m);
}

/******** the Leibniz nullspace ********/

LeibnizSpace leibniz_operator_space(int d) {
    if (d < 2) throw InternalInconsistency("leibniz_operator_space needs d >= 2");
    LeibnizSpace sp;
    std::map<std::pair<Partition, std::pair<int, int>>, int> col;
    for (int n = 1; n <= d; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (const auto& [box, rest] : removable_corners(lam)) {
                col[{lam, {box.row, box.col}}] = static_cast<int>(sp.unknowns.size());
                sp.unknowns.push_back({lam, box, rest});
            }
        }
    }
    const int ncols = static_cast<int>(sp.unknowns.size());

    // zeta(lam * mu) = zeta(lam) * mu + lam * zeta(mu), one equation per
    // target diagram kappa of each unordered pair.
    Matrix rows;
    auto add_pair = [&](const Partition& lam, const Partition& mu) {
        std::map<Partition, std::vector<Rational>> eq;
        auto row_of = [&](const Partition& kappa) -> std::vector<Rational>& {
            auto it = eq.find(kappa);
            if (it == eq.end())
                it = eq.emplace(kappa, std::vector<Rational>(ncols)).first;
            return it->second;
        };
        for (const auto& [nu, c] : multiply(lam, mu))
            for (const auto& [box, rest] : removable_corners(nu))
                row_of(rest)[col.at({nu, {box.row, box.col}})] += c;
        for (const auto& [box, rest] : removable_corners(lam))
            for (const auto& [kappa, c] : multiply(rest, mu))
                row_of(kappa)[col.at({lam, {box.row, box.col}})] -= c;
        for (const auto& [box, rest] : removable_corners(mu))
            for (const auto& [kappa, c] : multiply(lam, rest))
                row_of(kappa)[col.at({mu, {box.row, box.col}})] -= c;
        for (auto& [kappa, row] : eq) rows.push_back(std::move(row));
    };
    for (int a = 1; a + 1 <= d; ++a) {
        for (int b = a; a + b <= d; ++b) {
            for (const Partition& lam : partitions_of(a)) {
                for (const Partition& mu : partitions_of(b)) {
                    if (a == b && mu < lam) continue;
                    add_pair(lam, mu);
                }
            }
        }
    }
    sp.basis = solve_nullspace(rows, ncols);
    return sp;
}

int key_lemma_kernel_dim(int degree) {
    if (degree < 1) throw InternalInconsistency("key lemma degrees are positive");
    const std::vector<Partition> cols = partitions_of(degree);
    const std::vector<Partition> tgt = partitions_of(degree - 1);
    std::map<Partition, int> tgt_row;
    for (std::size_t i = 0; i < tgt.size(); ++i) tgt_row[tgt[i]] = static_cast<int>(i);
    Matrix m(2 * tgt.size(), std::vector<Rational>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const DiagElement e = DiagElement::unit(cols[j]);
        for (const auto& [kappa, c] : xi(e)) m[tgt_row.at(kappa)][j] = c;
        for (const auto& [kappa, c] : nabla(e))
            m[tgt.size() + tgt_row.at(kappa)][j] = c;
    }
    return static_cast<int>(solve_nullspace(m, static_cast<int>(cols.size())).size());
}

}  // namespace diffschub
