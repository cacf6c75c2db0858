#include "diffschub/bsops.hpp"

#include <algorithm>
#include <map>

namespace diffschub {

SchubElement xi_perm(const SchubElement& x) {
    return x.map([](const PermutationZ& w) {
        SchubElement out;
        for (int k : left_descents(w)) out.add(left_s(k, w).first, Rational(1));
        return out;
    });
}

SchubElement nabla_perm(const SchubElement& x) {
    return x.map([](const PermutationZ& w) {
        SchubElement out;
        for (int k : left_descents(w)) out.add(left_s(k, w).first, Rational(k));
        return out;
    });
}

SchubElement rho_perm(int k, const SchubElement& x) {
    if (k < 1) throw InternalInconsistency("rho needs k >= 1");
    if (k == 1) return xi_perm(x);
    const Rational inv(1, k - 1);
    return inv * (rho_perm(k - 1, nabla_perm(x)) - nabla_perm(rho_perm(k - 1, x)));
}

/******** direct bosonic action ********/

namespace {

// Valley test: strictly decreasing to a unique minimum, then strictly
// increasing.  Returns the 1-based minimum position, or 0 if not unimodal.
int valley_index(const std::vector<int>& b) {
    std::size_t i = 0;
    while (i + 1 < b.size() && b[i] > b[i + 1]) ++i;
    for (std::size_t j = i; j + 1 < b.size(); ++j)
        if (b[j] >= b[j + 1]) return 0;
    return static_cast<int>(i) + 1;
}

bool covers_interval(const std::vector<int>& b, int lo, int hi_excl) {
    for (int v = lo; v < hi_excl; ++v)
        if (std::find(b.begin(), b.end(), v) == b.end()) return false;
    return true;
}

// All ways to strip k left descents off w; the letters in strip order form a
// reduced word of the stripped-off u, and every reduced word of every
// admissible u arises this way.
void strip_chains(const PermutationZ& w, int k, std::vector<int>& word,
                  std::map<PermutationZ, std::vector<std::vector<int>>>& words_by_rest) {
    if (k == 0) {
        words_by_rest[w].push_back(word);
        return;
    }
    for (int a : left_descents(w)) {
        word.push_back(a);
        strip_chains(left_s(a, w).first, k - 1, word, words_by_rest);
        word.pop_back();
    }
}

}  // namespace

SchubElement rho_perm_direct(int k, const PermutationZ& w) {
    if (k < 1) throw InternalInconsistency("rho needs k >= 1");
    SchubElement out;
    if (w.length() < k) return out;
    std::map<PermutationZ, std::vector<std::vector<int>>> words_by_rest;
    std::vector<int> word;
    strip_chains(w, k, word, words_by_rest);
    for (const auto& [rest, words] : words_by_rest) {
        int sign = 0;
        for (const auto& b : words) {
            const int i = valley_index(b);
            if (i == 0) continue;
            if (!covers_interval(b, b[i - 1], std::max(b.front(), b.back()))) continue;
            const int s = (k - i) % 2 == 0 ? 1 : -1;
            if (sign != 0 && sign != s)
                throw InternalInconsistency(
                    "conflicting valley-word signs stripping from " + w.str());
            sign = s;
        }
        if (sign != 0) out.add(rest, Rational(sign));
    }
    return out;
}

SchubElement xi_lambda_perm(const Partition& nu, const SchubElement& x) {
    if (nu.size() == 0) return x;
    SchubElement out;
    for (const Partition& mu : partitions_of(nu.size())) {
        const CharValue cv = character(nu, mu);
        if (cv.chi == 0) continue;
        SchubElement y = x;
        for (int i = mu.rows(); i >= 1; --i) y = rho_perm(mu.part(i), y);
        out += Rational(cv.chi, cv.z) * y;
    }
    return out;
}

FormalSum<Partition> stanley_coeffs(const PermutationZ& w) {
    const int n = w.length();
    if (n == 0) return FormalSum<Partition>::unit(Partition());
    // t_mu = [S_id] rho^(mu_1) rho^(mu_2) ... S_w, shared across all lambda
    const std::vector<Partition> types = partitions_of(n);
    std::map<Partition, Rational> t;
    for (const Partition& mu : types) {
        SchubElement y = SchubElement::unit(w);
        for (int i = mu.rows(); i >= 1 && !y.is_zero(); --i) y = rho_perm(mu.part(i), y);
        t[mu] = y.coeff(PermutationZ::identity());
    }
    FormalSum<Partition> out;
    for (const Partition& lam : types) {
        Rational a;
        for (const Partition& mu : types) {
            const CharValue cv = character(lam, mu);
            if (cv.chi != 0) a += Rational(cv.chi, cv.z) * t.at(mu);
        }
        out.add(lam, a);
    }
    assert_integral(out, "Stanley coefficients");
    for (const auto& [lam, a] : out)
        if (a.sign() < 0)
            throw InternalInconsistency("negative Stanley coefficient at " + lam.str() +
                                        " for " + w.str());
    return out;
}

bool reduced_word_identity_check(const PermutationZ& u, const PermutationZ& v,
                                 const SchubElement& product) {
    const unsigned long lu = u.length(), lv = v.length();
    mpz_class lhs;
    mpz_bin_uiui(lhs.get_mpz_t(), lu + lv, lv);
    lhs *= reduced_word_count(u) * reduced_word_count(v);
    mpz_class rhs = 0;
    for (const auto& [w, c] : product) {
        if (!c.is_integer())
            throw InternalInconsistency("non-integer coefficient in word-count check");
        rhs += c.numerator() * reduced_word_count(w);
    }
    return lhs == rhs;
}

}  // namespace diffschub
