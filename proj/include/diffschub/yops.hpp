#pragma once
#include <utility>
#include <vector>

#include "diffschub/formal_sum.hpp"
#include "diffschub/partition.hpp"

namespace diffschub {

// Formal Q-linear combinations of Young diagrams; the module implements the
// operator calculus on them: box-deletion operators, the two-operator
// recovery algorithm, and the multiplication it determines (whose structure
// constants are the Littlewood-Richardson coefficients).
using DiagElement = FormalSum<Partition>;

// Corner-deletion operator: lambda -> sum of lambda-minus-a-corner.
DiagElement xi(const DiagElement& x);

// Content-weighted corner deletion: each deleted box (i,j) is weighted j-i.
DiagElement nabla(const DiagElement& x);

// Given D = xi(X) and N = nabla(X) for some X with nonnegative coefficients
// and no empty-partition term, reconstruct X.  Works one homogeneous degree
// at a time, repeatedly resolving the lexicographically greatest remaining
// diagram of D: only two preimage diagrams can feed it (extend the last row,
// or start a new one), and their distinct contents make the 2x2 system
// solvable.  Throws NonRecoverable when the input is not such a pair.
DiagElement recover(const DiagElement& D, const DiagElement& N);

// The multiplication determined by the operator calculus: both factors obey
// the Leibniz rule under xi and nabla, so the product is recovered from the
// derivative pair of lower-degree products.  Coefficients are the LR numbers.
// Memoized process-wide on the unordered pair; safe for concurrent callers.
DiagElement multiply(const Partition& lam, const Partition& mu);
DiagElement multiply(const DiagElement& x, const DiagElement& y);

// Degree-lowering operator family rho^(k).
//   rho        : normative definition, the commutator ladder
//                rho^(1) = xi,  rho^(k+1) = (rho^(k) nabla - nabla rho^(k)) / k
//   rho_strip  : fast form, signed border-strip removal
//                lambda -> sum over k-box strips of (-1)^(height-1) * rest
// Their equality is a test surface, not an assumption.
DiagElement rho(int k, const DiagElement& x);
DiagElement rho_strip(int k, const DiagElement& x);

// p_k as a diagram element: alternating sum of hooks (k-a, 1^a), a = 0..k-1.
DiagElement power_sum(int k);

// Symmetric-group character chi^lambda_mu together with the centralizer
// order z_mu = prod_i i^(m_i) m_i!.  Murnaghan-Nakayama recursion on the
// largest part of mu.  Throws SizeMismatch when |lambda| != |mu|.
struct CharValue {
    Partition lambda, mu;
    long long chi = 0;
    long long z = 1;
};
CharValue character(const Partition& lam, const Partition& mu);

// The operator xi^nu = sum_mu (chi^nu_mu / z_mu) rho^(mu_1) rho^(mu_2) ...;
// on a single diagram lambda it produces the skew expansion sum_mu c^lambda_{mu nu} mu.
// Factors are applied right-to-left in decreasing part order (they commute,
// the fixed order just keeps runs reproducible).
DiagElement xi_lambda(const Partition& nu, const DiagElement& x);

// Determinantal identities, evaluated inside the diagram ring itself using
// `multiply`; each is expected to collapse back to 1*lambda.
//   jacobi_trudi_h : det[ h_{lambda_i - i + j} ],  h_r = (r)
//   jacobi_trudi_e : det[ e_{lambda'_i - i + j} ], e_r = (1^r)
//   giambelli      : det[ s_{(a_i | b_j)} ] over the Frobenius hooks
DiagElement jacobi_trudi_h(const Partition& lam);
DiagElement jacobi_trudi_e(const Partition& lam);
DiagElement giambelli(const Partition& lam);

// The space of degree-(-1) corner-weight operators satisfying the Leibniz
// rule against `multiply` up to total degree d.  One unknown per (diagram,
// removable corner) pair with |diagram| <= d; the nullspace of the Leibniz
// constraints is returned as coefficient vectors over `unknowns`.
// Expected: dimension 2, spanned by the weight patterns of xi and nabla.
struct CornerUnknown {
    Partition lam;
    Box box;            // the corner being deleted
    Partition result;   // lam minus that corner
};
struct LeibnizSpace {
    std::vector<CornerUnknown> unknowns;
    std::vector<std::vector<Rational>> basis;  // nullspace, one vector per dim
    int dimension() const { return static_cast<int>(basis.size()); }
};
LeibnizSpace leibniz_operator_space(int d);

// Dimension of { x homogeneous of the given degree : xi(x) = nabla(x) = 0 },
// by exact nullspace of the stacked coefficient matrix.  Expected 0 for
// every positive degree.
int key_lemma_kernel_dim(int degree);

}  // namespace diffschub
