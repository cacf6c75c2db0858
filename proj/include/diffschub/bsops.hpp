#pragma once
#include "diffschub/formal_sum.hpp"
#include "diffschub/partition.hpp"
#include "diffschub/permutation.hpp"
#include "diffschub/yops.hpp"

namespace diffschub {

// Formal sums over the back-stable Schubert basis, indexed by finite-support
// permutations of Z.  The operators below mirror the partition-level calculus
// in yops; through the Grassmannian codec (descent-0 window <-> partition)
// the two agree, which the tests exercise rather than assume.
using SchubElement = FormalSum<PermutationZ>;

// S_w -> sum of S_{s_k w} over the length-decreasing left multiplications;
// nabla weights each term by its k (which may be any integer).
SchubElement xi_perm(const SchubElement& x);
SchubElement nabla_perm(const SchubElement& x);

// Commutator ladder rho^(1) = xi, rho^(k+1) = (rho^(k) nabla - nabla rho^(k))/k;
// this is the normative definition on this basis.
SchubElement rho_perm(int k, const SchubElement& x);

// Direct one-shot form of rho^(k) S_w: sum of +-S_{u^-1 w} over u with
// l(u) = k, l(u^-1 w) = l(w) - k, such that u admits a reduced word
// b_1 > ... > b_i < ... < b_k (strictly unimodal with its minimum at
// position i) whose letters cover every integer in [b_i, max(b_1, b_k));
// the sign is (-1)^(k-i).  Each qualifying u contributes once; if two of its
// words derive different signs the function throws rather than guess.
// Secondary implementation: rho_perm is normative, agreement is tested.
SchubElement rho_perm_direct(int k, const PermutationZ& w);

// xi^nu = sum_mu (chi^nu_mu / z_mu) rho^(mu_1) rho^(mu_2) ... on this basis.
SchubElement xi_lambda_perm(const Partition& nu, const SchubElement& x);

// Schur expansion of the Stanley symmetric function F_w: the coefficient of
// lambda is the S_id-coefficient of xi^lambda S_w, extracted for all lambda
// of size l(w) at once by tabulating t_mu = [S_id] rho_mu S_w and applying
// the character change of basis.  Coefficients are nonnegative integers;
// violations throw InternalInconsistency.
FormalSum<Partition> stanley_coeffs(const PermutationZ& w);

// Reduced-word counting identity for a product expansion S_u * S_v =
// sum_w c^w S_w:  C(l(u)+l(v), l(v)) * |R(u)| * |R(v)| = sum_w c^w |R(w)|.
bool reduced_word_identity_check(const PermutationZ& u, const PermutationZ& v,
                                 const SchubElement& product);

}  // namespace diffschub
