#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epscoh/exterior.hpp"
#include "epscoh/forms.hpp"
#include "epscoh/gmodule.hpp"

namespace epscoh {

// An eps-skew-symmetric n-linear map L^n -> V, stored by its values on
// canonical monomials. Level -1 is the (always zero) cochain below C^0.
class Cochain {
 public:
  Cochain(ModulePtr V, int n);

  int level() const { return n_; }
  const ModulePtr& module() const { return V_; }
  const EpsLieAlgebra& algebra() const { return *V_->algebra(); }
  const std::map<Monomial, Vec>& values() const { return values_; }

  // `tuple` in any order; it is canonicalized and the value stored with the sign.
  void set(const Monomial& tuple, const Vec& value);
  void add(const Monomial& canonical, const Vec& value);

  Vec evaluate(const Monomial& tuple) const;
  Vec evaluate_vectors(const std::vector<Vec>& args) const;

  bool is_zero() const { return values_.empty(); }
  std::map<Degree, Cochain> components() const;
  // Degree of a nonzero homogeneous cochain; throws if inhomogeneous.
  std::optional<Degree> degree() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& s, Cochain a);
  bool operator==(const Cochain& o) const;

  std::string to_string() const;

 private:
  ModulePtr V_;
  int n_;
  std::map<Monomial, Vec> values_;
};

// Basis of C^n(L,V): pairs (canonical monomial, module basis vector), grouped
// by the degree deg(v) - deg(m).
class CochainSpace {
 public:
  CochainSpace(ModulePtr V, std::size_t n);

  std::size_t level() const { return basis_.level(); }
  const ModulePtr& module() const { return V_; }
  const ExteriorBasis& monomials() const { return basis_; }
  const Degree& monomial_degree(std::size_t m) const { return mdeg_[m]; }
  std::size_t dim() const { return basis_.size() * V_->dim(); }
  std::size_t dim(const Degree& gamma) const;
  std::vector<Degree> sector_degrees() const;

  // Global index = m * dimV + v.
  const Degree& degree_of(std::size_t global) const { return sectors_[sector_of_[global]].gamma; }
  std::optional<std::size_t> sector_id(const Degree& gamma) const;
  std::size_t sector_of(std::size_t global) const { return sector_of_[global]; }
  std::size_t local_index(std::size_t global) const { return local_[global]; }
  const std::vector<std::uint32_t>& sector_elements(std::size_t sid) const { return sectors_[sid].elems; }
  const Degree& sector_degree(std::size_t sid) const { return sectors_[sid].gamma; }
  std::size_t sector_count() const { return sectors_.size(); }

  SparseVec coords(const Cochain& g, const Degree& gamma) const;
  SparseVec global_coords(const Cochain& g) const;
  Cochain cochain(const Degree& gamma, const SparseVec& x) const;
  Cochain global_cochain(const SparseVec& x) const;
  Cochain basis_cochain(std::size_t global) const;

 private:
  struct Sector {
    Degree gamma;
    std::vector<std::uint32_t> elems;
  };
  ModulePtr V_;
  ExteriorBasis basis_;
  std::vector<Degree> mdeg_;
  std::vector<Sector> sectors_;
  std::map<Degree, std::size_t> sector_index_;
  std::vector<std::uint32_t> sector_of_, local_;
};

// delta^n restricted to the gamma sector: rows C^{n+1}_gamma, cols C^n_gamma.
RationalSparseMatrix coboundary_matrix(const CochainSpace& Cn, const CochainSpace& Cn1, const Degree& gamma);
// All sectors of C^n (empty sectors of C^{n+1} give zero-row matrices).
std::map<Degree, RationalSparseMatrix> coboundary_matrices(const CochainSpace& Cn, const CochainSpace& Cn1);
// Unsplit matrix on global indices.
RationalSparseMatrix coboundary_matrix_global(const CochainSpace& Cn, const CochainSpace& Cn1);
RationalSparseMatrix coboundary_matrix(const ModulePtr& V, std::size_t n, const Degree& gamma);

// Cochain-level operators (inhomogeneous input is split into components).
Cochain coboundary(const Cochain& g);            // by direct evaluation of the explicit formula
Cochain coboundary_inductive(const Cochain& g);  // (delta g)_A = eps(gamma,alpha) A.g - delta(g_A)
Cochain act(const Vec& A, const Cochain& g);
Cochain insertion(const Cochain& g, const Vec& A);
// Right-hand side of the "2 delta g" identity, divided by nothing (returns 2 delta g).
Cochain twice_coboundary_alt(const Cochain& g);

Cochain cup_product(const Cochain& g, const Cochain& h, const ModulePtr& VW);
Cochain cup_product(const Cochain& g, const Cochain& h);
// f: V -> W invariant of degree phi (matrix dim W x dim V).
Cochain push_forward(const RationalSparseMatrix& f, const Degree& phi, const Cochain& g, const ModulePtr& W);
// omega: L' -> L (images of the L' basis); Vp = pullback_module(V, L', omega).
Cochain pull_back(const std::vector<Vec>& omega, const Cochain& g, const ModulePtr& Vp);

bool is_cocycle(const Cochain& g);
std::optional<Cochain> coboundary_witness(const Cochain& g);

// {g in C^n : A.g = 0 for all A in sub} (sub given by algebra vectors).
std::vector<Cochain> invariant_cochains(const std::vector<Vec>& sub, const ModulePtr& V, std::size_t n);

enum class FormMode { general, symmetric };
// phi: an invariant (m+1)-form on the adjoint module, m >= 1. Result: level 2m+1, trivial coefficients.
Cochain invariant_form_to_cocycle(const InvariantForm& phi, FormMode mode, const ModulePtr& K);
// eps-skew-symmetrization of (A_0..A_{2m+1}) -> phi(<A0,A1>,...,<A2m,A2m+1>); vanishes for invariant phi.
Cochain bracket_pairs_form(const InvariantForm& phi, const ModulePtr& K);

struct SectorCohomology {
  Degree gamma;
  std::size_t dim_C = 0, dim_Z = 0, dim_B = 0, dim_H = 0;
  std::vector<Cochain> representatives;
};
struct LevelCohomology {
  std::size_t n = 0;
  std::vector<SectorCohomology> sectors;
  std::size_t dim_H() const;
  std::size_t dim_C() const;
};
struct CohomologyResult {
  std::vector<LevelCohomology> levels;
  std::size_t dim(std::size_t n) const { return levels.at(n).dim_H(); }
};

struct CohomologyOptions {
  bool representatives = false;
  std::size_t n_min = 0;
  std::optional<Degree> sector;  // restrict to one degree sector
};
CohomologyResult cohomology(const ModulePtr& V, std::size_t n_max, const CohomologyOptions& opt = {});

}  // namespace epscoh
