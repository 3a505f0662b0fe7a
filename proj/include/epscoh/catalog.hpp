#pragma once

#include <string>
#include <vector>

#include "epscoh/complex.hpp"

namespace epscoh::catalog {

using Matrix = std::vector<Vec>;  // dense, row-major

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);  // 0-based
Matrix matrix_combination(const std::vector<Matrix>& basis, const Vec& coeffs);

// A matrix realization: algebra basis element k is mats[k]; brackets are
// super/colour commutators XY - eps(x,y) YX.
struct MatrixAlgebra {
  AlgebraPtr algebra;
  std::vector<Matrix> mats;
  Matrix matrix_of(const Vec& x) const { return matrix_combination(mats, x); }
};
MatrixAlgebra algebra_from_matrices(const CommutationFactor& f, std::vector<std::string> labels,
                                    std::vector<Degree> degrees, std::vector<Matrix> mats);

// gl(m|n), sl(m|n) with the fine root-lattice grading (E_ij of degree e_i - e_j in
// Z^{m+n}; indices m+1..m+n odd). n = 0 gives the ordinary Lie algebras.
MatrixAlgebra gl(std::size_t m, std::size_t n);
MatrixAlgebra sl(std::size_t m, std::size_t n);

// psl(n|n) = sl(n|n)/K.I with matrix representatives of the quotient basis.
struct Psl {
  MatrixAlgebra sl;
  Subquotient quotient;
  AlgebraPtr algebra() const { return quotient.algebra; }
  Matrix representative(std::size_t k) const { return sl.matrix_of(quotient.representatives[k]); }
};
Psl psl_nn(std::size_t n);
// g(pi(A), pi(B)) = Tr <A,B> on representatives (ordinary trace).
Cochain trace_cocycle(const Psl& p);

// sl(1|2) with basis Q+,Q-,Q3,B,V+,V-,W+,W- and its 3x3 matrix realization.
enum class Sl12Grading { fine, z, z2 };
MatrixAlgebra sl12(Sl12Grading g = Sl12Grading::fine);
// omega: Q fixed, B -> -B, V <-> W (images of the basis).
std::vector<Vec> sl12_omega();
// G = span{Q+,Q-,Q3,U+,U-}, U = (V+W)/2, as vectors in sl(1|2).
std::vector<Vec> osp12_in_sl12();
// span{Q+,Q-,Q3,X+,X-}, X = (V-W)/2.
std::vector<Vec> sl12_x_span();
MatrixAlgebra osp12();
MatrixAlgebra sl2();
MatrixAlgebra sl3();

// V(1/2) with basis e+, e0, e-.
ModulePtr v_half(const AlgebraPtr& sl12);
// W(k): eps-skew tensors in V(1/2)^{(x)k}, isomorphic to V(k/2); W(0) = K.
ModulePtr w_module(const AlgebraPtr& sl12, std::size_t k);
// 4-dim module V(b,1/2,1): the induced module with singlet of B-weight b+1/2;
// simple (typical) unless b = +-1/2.
ModulePtr kac_half(const AlgebraPtr& sl12, const Rational& b);

struct V8Family {
  ModulePtr v8;
  Submodule v1, v4, v4bar, v7;
  std::size_t t, s, v, w, vp, vm, wp, wm;  // basis indices in v8
};
V8Family v8_family(const AlgebraPtr& sl12);
// Symmetric square of the adjoint sl(1|2)-module.
Submodule ts2(const AlgebraPtr& sl12);
// t = Q+ Q- + Q- Q+ + 2 Q3 Q3 + 2 B B in L (x) L coordinates.
Vec ts2_t(const AlgebraPtr& sl12);

// Cocycles on sl(1|2) with values in V(1/2).
Cochain cocycle_g0(const ModulePtr& vhalf);
Cochain cocycle_g2(const ModulePtr& vhalf);
Cochain cocycle_g(const ModulePtr& vhalf);
// The two 1-cocycles with values in V8.
Cochain cocycle_v8_g(const V8Family& f);
Cochain cocycle_v8_gbar(const V8Family& f);
// Re-express a cochain whose values lie in a submodule in the submodule's basis.
Cochain restrict_values(const Cochain& g, const Submodule& sub);
// Inverse: values of a submodule cochain in the parent module.
Cochain extend_values(const Cochain& g, const Submodule& sub, const ModulePtr& parent);

struct Typicality {
  bool typical;
  std::optional<Rational> dim;  // for q in N/2, q > 0
};
Typicality typicality_sl12(const Rational& b, const Rational& q);

// Lookup by name, used by the CLI.
std::vector<std::string> algebra_names();
std::vector<std::string> module_names();
AlgebraPtr algebra_by_name(const std::string& name);
// Module names: trivial, adjoint, coadjoint, v_half, w:k, kac:b, v8, v7, v4, v4bar, v1, ts2.
ModulePtr module_by_name(const AlgebraPtr& L, const std::string& name);

}  // namespace epscoh::catalog
