#pragma once

#include <cstddef>
#include <vector>

#include "epscoh/rational.hpp"

namespace epscoh::glmn {

// A weight of the standard Cartan subalgebra of gl(m|n): L[i] = Lambda(X_ii), 0-based.
struct GlWeight {
  std::size_t m = 0, n = 0;
  std::vector<Rational> L;
  bool operator==(const GlWeight&) const = default;
};
GlWeight zero_weight(std::size_t m, std::size_t n);

// Indices are 1-based as in the usual matrix notation.
int sigma(std::size_t m, std::size_t n, std::size_t i);
// r_i = sigma_i rho(X_ii), rho = 1/2 sum_{i<j} sigma_i sigma_j (eps_i - eps_j).
std::vector<Rational> rho_values(std::size_t m, std::size_t n);
// l_i = sigma_i (Lambda + rho)(X_ii).
std::vector<Rational> ell_values(const GlWeight& w);
// Q_s = sum_i sigma_i (l_i^s - r_i^s).
Rational q_s(const GlWeight& w, unsigned s);

// {l_1..l_m, r_{m+1}..r_{m+n}} == {r_1..r_m, l_{m+1}..l_{m+n}} as multisets.
bool all_casimirs_vanish(const GlWeight& w);
// L_i - L_{i+1} in N inside each block.
bool is_dominant(const GlWeight& w);
// Number of disjoint pairs (i <= m < j) with l_i = l_j (atypicality conditions).
std::size_t matched_pairs(const GlWeight& w);

// Maximally atypical weights: m = n (branch 0, free = L_1..L_m), m > n (branch
// k in 0..n, free = L_1..L_m with the plateau L_{n+1-k} = .. = L_{m-k} = n-k),
// m < n (branch h in 0..m, free = L_{m+1}..L_{m+n} with the plateau
// L_{m+1+h} = .. = L_{n+h} = -(m-h)). Throws PreconditionError on bad input.
GlWeight enumerate_family(std::size_t m, std::size_t n, std::size_t branch, const std::vector<Rational>& free);
// All family members with integral entries in [lo, hi], sorted and deduplicated.
std::vector<GlWeight> family_in_box(std::size_t m, std::size_t n, long lo, long hi);
// All dominant integral weights with entries in [lo, hi].
std::vector<GlWeight> dominant_weights_in_box(std::size_t m, std::size_t n, long lo, long hi);

// sl(m|n), m != n: X_ij = E_ij - (1/d) sigma_i delta_ij I, d = m - n.
// Diagonal of X_ii as a gl(m|n) matrix (1-based i).
std::vector<Rational> sl_generator_diagonal(std::size_t m, std::size_t n, std::size_t i);
// Restriction of a gl weight to sl(m|n), in the X_ii coordinates.
GlWeight sl_variant(const GlWeight& w);
// The sl(1|2) weight (b,q) (eigenvalues of B and Q3 on the highest weight vector
// for the simple root vectors V+, W+), moved to the distinguished Borel of
// gl(1|2) by the odd reflection in eps_2 - eps_1.
GlWeight sl12_weight(const Rational& b, const Rational& q);

}  // namespace epscoh::glmn
