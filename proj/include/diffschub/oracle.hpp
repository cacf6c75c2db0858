#pragma once
#include <map>
#include <string>
#include <vector>

#include "diffschub/errors.hpp"
#include "diffschub/formal_sum.hpp"
#include "diffschub/partition.hpp"
#include "diffschub/permutation.hpp"

// Brute-force combinatorial ground truth: tableau enumerations, lattice-word
// LR counting, compatible-sequence and wire-traced pipe-dream Schubert
// polynomials, leading-monomial basis expansion, Monk's rule, Stanley
// symmetric functions.  Nothing in here may touch the operator modules
// (yops/bsops/product) -- that independence is what makes agreement tests
// meaningful.
namespace diffschub::oracle {

// Polynomial with integer coefficients in variables x_lo .. x_hi, stored as a
// map from exponent vectors (length hi-lo+1) to nonzero coefficients.
class MonomialMap {
public:
    MonomialMap(int lo, int hi) : lo_(lo), hi_(hi) {
        if (hi < lo - 1) throw InternalInconsistency("bad variable range");
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int width() const { return hi_ - lo_ + 1; }

    void add(const std::vector<int>& exp, long long c);
    long long coeff(const std::vector<int>& exp) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MonomialMap& a, const MonomialMap& b) {
        return !(a == b);
    }

private:
    int lo_, hi_;
    std::map<std::vector<int>, long long> terms_;
};

// Overflow-checked 64-bit helpers; all coefficient arithmetic in this module
// goes through them.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

// Schur polynomial s_lambda(x_1..x_m) by summing x^weight over semistandard
// tableaux with entries <= m.  Zero when lambda has more than m rows.
MonomialMap schur_poly(const Partition& lam, int m);

// Product over the union of the variable ranges.
MonomialMap poly_multiply(const MonomialMap& a, const MonomialMap& b);

// Schur expansion of a symmetric polynomial by peeling lex-leading monomials.
// Coefficients may be any integers; errors: NotSymmetric, and
// NotSchurPositiveDecomposable if the peeling fails to terminate.
FormalSum<Partition> ssyt_expand(const MonomialMap& p);

// Littlewood-Richardson coefficient c^nu_{lam,mu}: skew tableaux of shape
// nu/lam, content mu, reverse reading word a lattice word.
long long lr_count(const Partition& lam, const Partition& mu, const Partition& nu);

// Schubert polynomial of a positive-window permutation restricted to
// x_1..x_m: sum over reduced words h and compatible sequences a with
// a_1 <= ... <= a_l, a_j <= h_j, strict at ascents (h_j < h_{j+1}).
// Monomials that would use a variable beyond x_m are dropped, so pass
// m >= window_end - 1 for the full polynomial.
MonomialMap schubert_poly(const PermutationZ& w, int m);

// Independent second implementation: enumerate all cross-subsets of the
// staircase {i+j <= N}, trace the wires, and keep those whose wire
// permutation is w (|D| = l(w) then forces reducedness).
MonomialMap schubert_poly_pipe_dreams(const PermutationZ& w, int m);

// Expand an integer combination of Schubert polynomials (positive variables)
// by repeatedly reading the leading monomial as a Lehmer code.  Leading means:
// largest exponent at the highest variable index, ties broken at the next
// index down -- the order in which x^{code(w)} leads S_w.
FormalSum<PermutationZ> schubert_basis_expand(const MonomialMap& p);

// Monk's rule: sum of S_{w t_{ab}} over a <= k < b with l(w t_{ab}) = l(w)+1.
FormalSum<PermutationZ> monk_rule(int k, const PermutationZ& w);

// Schur expansion of the Stanley symmetric function F_w: enumerate compatible
// sequences of the reduced words with entries capped at m = l(w) (the shifted
// Schubert polynomial truncation), then ssyt_expand.
FormalSum<Partition> stanley_schur_expand(const PermutationZ& w);

}  // namespace diffschub::oracle
