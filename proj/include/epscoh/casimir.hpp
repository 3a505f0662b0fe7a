#pragma once

#include <optional>
#include <vector>

#include "epscoh/complex.hpp"
#include "epscoh/forms.hpp"

namespace epscoh {

enum class FormSymmetry { none, eps_symmetric, eps_skew };

// Basis of the L-invariant r-linear forms on M (each homogeneous), optionally
// restricted to eps-symmetric or eps-skew-symmetric forms. Solved on the full
// space of r-tuples, independently of the exterior-basis machinery.
std::vector<InvariantForm> invariant_multilinear_forms(const ModulePtr& M, std::size_t r,
                                                       FormSymmetry sym = FormSymmetry::none);

// Invariant eps-symmetric bilinear forms on the coadjoint module.
std::vector<InvariantForm> quadratic_casimir_forms(const AlgebraPtr& L);

struct CasimirOperator {
  InvariantForm phi;  // on coadjoint(L)
  ModulePtr V;
  Degree eta;
  RationalSparseMatrix CV;               // sum phi(E'_i1..E'_ir) rho(E_ir)...rho(E_i1)
  std::vector<RationalSparseMatrix> Ci;  // sum phi(E'_i,E'_i2..) rho(E_ir)...rho(E_i2)
};

CasimirOperator casimir_operator(const InvariantForm& phi, const ModulePtr& V);
// C_V rho(A) = eps(eta, alpha) rho(A) C_V for every basis element A, and
// C_V = sum_i C_i rho(E_i).
Report check_graded_central(const CasimirOperator& C);
bool is_invertible(const CasimirOperator& C);
// First candidate whose Casimir operator on V is invertible.
std::optional<CasimirOperator> prop22_applies(const ModulePtr& V, const std::vector<InvariantForm>& candidates);

// d_n : C^n -> C^{n-1} on global cochain indices, n >= 1.
RationalSparseMatrix homotopy_matrix(const CasimirOperator& C, std::size_t n);
// d_{n+1} delta^n + delta^{n-1} d_n == (C_V)_c on C^n, exactly.
bool verify_homotopy_identity(const CasimirOperator& C, std::size_t n);

}  // namespace epscoh
