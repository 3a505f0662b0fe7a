#pragma once

#include <map>
#include <vector>

#include "epscoh/complex.hpp"

namespace epscoh {

// E = L(g) on L (+) H: basis of L first, then H; <(A,X),(B,Y)> = (<A,B>, g(A,B)).
struct CentralExtension {
  AlgebraPtr base;
  ModulePtr H;  // trivial coefficient space
  Cochain g;
  AlgebraPtr E;
  std::size_t base_dim() const { return base->dim(); }
  std::vector<Vec> projection() const;  // images in L of the E basis
  std::vector<Vec> injection() const;   // images in E of the H basis
  std::vector<Vec> section() const;     // A -> (A, 0)
};

// g must be a degree-0 2-cocycle with values in a trivial module.
CentralExtension extension_from_cocycle(const Cochain& g);

// For pi: E -> L (images of the E basis) and a degree-0 linear section sigma
// (images of the L basis in E): iota(g(A,B)) = <sA,sB> - s<A,B>, with
// iota the inclusion of the given kernel basis (default: basis of ker pi).
Cochain cocycle_from_section(const AlgebraPtr& E, const AlgebraPtr& L, const std::vector<Vec>& pi,
                             const std::vector<Vec>& sigma, std::vector<Vec> kernel = {});

// g' = g + delta b: the map (A,X) -> (A, X + b(A)) from L(g') to L(g).
std::vector<Vec> equivalence_from_primitive(const CentralExtension& from, const CentralExtension& to,
                                            const Cochain& b);
// A bijective homomorphism source -> target given by basis images.
Report check_isomorphism(const EpsLieAlgebra& source, const EpsLieAlgebra& target, const std::vector<Vec>& images);

// d2(A^B) = -<A,B>; d3(A^B^C) = -<A,B>^C + eps(beta,gamma) <A,C>^B + A^<B,C>.
RationalSparseMatrix boundary2(const EpsLieAlgebra& L);
RationalSparseMatrix boundary3(const EpsLieAlgebra& L);

struct H2Homology {
  std::map<Degree, std::size_t> dims;  // by degree of the monomials
  std::vector<std::pair<Degree, SparseVec>> cycles;  // representatives over the Lambda^2 basis
  std::size_t total() const;
};
H2Homology homology_h2(const EpsLieAlgebra& L);

struct CoveringResult {
  CentralExtension ext;             // L(f), f(A,B) = class of A^B in Lambda^2 / im d3
  std::vector<Monomial> w_basis;    // monomials representing the basis of Lambda^2 / im d3
  AlgebraPtr cover;                 // derived algebra of L(f)
  std::vector<Vec> embedding;       // cover basis in L(f) coordinates
  std::vector<Vec> projection;      // cover basis -> L
  std::vector<std::size_t> center;  // indices of the central part (H-hat)
  std::map<Degree, std::size_t> center_dims;
  bool perfect = false;
};
// Throws PreconditionError if L is not perfect.
CoveringResult universal_covering(const AlgebraPtr& L);
// The morphism from the covering to L(g), g a degree-0 2-cocycle (images of the cover basis).
std::vector<Vec> covering_morphism(const CoveringResult& cov, const CentralExtension& target);

// L(g) with g = sum_r g_r e_r, e_r of degree -gamma_r. Throws if the classes are dependent.
CentralExtension covering_from_h2_basis(const AlgebraPtr& L, const std::vector<Cochain>& basis);

// dim H_2(L)_gamma = dim H^2(L,K)_{-gamma} for every gamma.
bool h2_pairing_check(const AlgebraPtr& L);

}  // namespace epscoh
