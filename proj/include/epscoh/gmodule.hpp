#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "epscoh/algebra.hpp"

namespace epscoh {

class GradedModule {
 public:
  GradedModule(AlgebraPtr L, std::vector<std::string> labels, std::vector<Degree> degrees,
               std::vector<RationalSparseMatrix> action);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Degree& degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  const RationalSparseMatrix& action(std::size_t a) const { return rho_[a]; }
  const std::vector<RationalSparseMatrix>& actions() const { return rho_; }
  std::size_t index_of(const std::string& label) const;

  Vec act(std::size_t a, const Vec& x) const { return rho_[a].apply(x); }
  Vec act(const Vec& A, const Vec& x) const;
  RationalSparseMatrix action_of(const Vec& A) const;

  Report validate() const;

 private:
  AlgebraPtr alg_;
  std::vector<std::string> labels_;
  std::vector<Degree> degrees_;
  std::vector<RationalSparseMatrix> rho_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

ModulePtr make_module(GradedModule V);
void require_same_algebra(const GradedModule& V, const GradedModule& W);

ModulePtr trivial(const AlgebraPtr& L, const Degree& sigma);
// Several trivial copies with the given degrees (an abelian coefficient space).
ModulePtr trivial_space(const AlgebraPtr& L, const std::vector<Degree>& degrees,
                        std::vector<std::string> labels = {});
ModulePtr adjoint(const AlgebraPtr& L);
ModulePtr dual(const ModulePtr& V);
ModulePtr coadjoint(const AlgebraPtr& L);
ModulePtr tensor(const ModulePtr& V, const ModulePtr& W);
ModulePtr direct_sum(const ModulePtr& V, const ModulePtr& W);
// V^sigma_gamma = V_{gamma+sigma}: degrees drop by sigma.
ModulePtr shift(const ModulePtr& V, const Degree& sigma);
// Pull back along a degree-0 homomorphism omega: L' -> L given by images of L' basis.
ModulePtr pullback_module(const ModulePtr& V, const AlgebraPtr& Lp, const std::vector<Vec>& omega);

// Coordinates of a submodule in its parent.
struct Submodule {
  ModulePtr module;
  std::vector<Vec> basis;  // parent coordinates, homogeneous, reduced echelon
};

// x (x) y -> eps(xi, eta) y (x) x on V (x) V.
RationalSparseMatrix tensor_swap(const GradedModule& V);
Submodule sym_square(const ModulePtr& V);
Submodule skew_square(const ModulePtr& V);
// eps-skew tensors in V^{(x)k}: the kernel of (swap_i + 1) for adjacent i.
Submodule skew_power(const ModulePtr& V, std::size_t k);

std::vector<Vec> invariants_subspace(const GradedModule& V);
// Requires an invariant graded subspace.
Submodule submodule(const ModulePtr& V, const std::vector<Vec>& subspace, std::vector<std::string> labels = {});
Submodule submodule_generated(const ModulePtr& V, const std::vector<Vec>& vectors);
struct Quotient {
  ModulePtr module;
  std::vector<Vec> lifts;  // parent coordinates of the chosen complement
};
Quotient quotient(const ModulePtr& V, const std::vector<Vec>& sub);

// Simultaneous eigenspaces of commuting diagonalizable degree-0 elements with
// rational eigenvalues; throws PreconditionError otherwise.
std::map<std::vector<Rational>, std::vector<Vec>> weight_spaces(const GradedModule& V,
                                                                const std::vector<Vec>& cartan);
std::vector<Rational> rational_eigenvalues(const std::vector<Vec>& M);

// Build a module from the actions of a generating set of L (e.g. the odd
// elements); the remaining actions follow from the bracket relations. Degrees
// of the basis are propagated from the seeds.
ModulePtr module_from_generators(const AlgebraPtr& L, std::vector<std::string> labels,
                                 const std::map<std::size_t, RationalSparseMatrix>& given,
                                 const std::map<std::size_t, Degree>& seeds);

// Check that f: V -> W (matrix dim W x dim V) is homogeneous of degree phi and
// invariant: f(A x) = eps(phi, alpha) A f(x).
Report check_invariant_map(const GradedModule& V, const GradedModule& W, const RationalSparseMatrix& f,
                           const Degree& phi);

}  // namespace epscoh
