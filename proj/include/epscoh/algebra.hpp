#pragma once

#include <memory>
#include <string>
#include <vector>

#include "epscoh/exactlin.hpp"
#include "epscoh/grading.hpp"

namespace epscoh {

struct Report {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
  std::string summary() const;
};

struct BracketSpec {
  std::size_t i, j;
  SparseVec terms;  // <e_i, e_j> = sum terms
};

// Precomputed eps between basis elements and parities; shared by exterior code.
struct SignTable {
  std::size_t dim = 0;
  std::vector<signed char> eps;     // dim x dim
  std::vector<signed char> parity;  // eps(e_i, e_i)
  int operator()(std::size_t i, std::size_t j) const { return eps[i * dim + j]; }
};

class EpsLieAlgebra {
 public:
  // Brackets may be given for either or both orders; a missing order is
  // derived by eps-skew-symmetry. Call validate() before trusting the result.
  EpsLieAlgebra(CommutationFactor f, std::vector<std::string> labels, std::vector<Degree> degrees,
                const std::vector<BracketSpec>& brackets);

  std::size_t dim() const { return labels_.size(); }
  const CommutationFactor& factor() const { return factor_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Degree& degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  const SignTable& signs() const { return signs_; }
  int eps(std::size_t i, std::size_t j) const { return signs_(i, j); }
  std::size_t index_of(const std::string& label) const;

  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;

  Report validate() const;
  // Degree of a vector if homogeneous (zero vector: nullopt).
  std::optional<Degree> degree_of(const Vec& x) const;

 private:
  CommutationFactor factor_;
  std::vector<std::string> labels_;
  std::vector<Degree> degrees_;
  std::vector<SparseVec> table_;
  SignTable signs_;
  std::vector<std::string> construction_errors_;
};

using AlgebraPtr = std::shared_ptr<const EpsLieAlgebra>;

// Throws ValidationError with the report if invalid.
AlgebraPtr make_algebra(EpsLieAlgebra L);

bool same_algebra(const EpsLieAlgebra& a, const EpsLieAlgebra& b);

// Graded subspaces are returned as reduced-echelon homogeneous bases.
std::vector<Vec> homogeneous_basis(const std::vector<Vec>& vectors, const std::vector<Degree>& degrees);
std::vector<Vec> derived_subalgebra(const EpsLieAlgebra& L);
bool is_perfect(const EpsLieAlgebra& L);
std::vector<Vec> center(const EpsLieAlgebra& L);

struct Subquotient {
  AlgebraPtr algebra;
  std::vector<Vec> representatives;  // in coordinates of the parent
};
// sub / ideal with homogeneous representatives; labels inherited where possible.
Subquotient subquotient(const EpsLieAlgebra& L, const std::vector<Vec>& sub, const std::vector<Vec>& ideal);

// Checks that the linear map M (columns = images of source basis vectors,
// dim target x dim source) is a degree-0 homomorphism.
Report check_homomorphism(const EpsLieAlgebra& source, const EpsLieAlgebra& target,
                          const std::vector<Vec>& images);

}  // namespace epscoh
