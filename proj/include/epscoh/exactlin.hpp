#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "epscoh/rational.hpp"

namespace epscoh {

struct Entry {
  std::uint32_t i;
  Rational v;
};
// Sorted by index, no zero values.
using SparseVec = std::vector<Entry>;

SparseVec sparse_from_dense(const Vec& v);
// Sort, merge duplicate indices, drop zeros.
SparseVec sparse_normalize(SparseVec r);
Vec dense_from_sparse(const SparseVec& v, std::size_t n);
// y + a x
SparseVec sparse_axpy(const SparseVec& y, const Rational& a, const SparseVec& x);
const Rational* sparse_find(const SparseVec& v, std::uint32_t i);

class RationalSparseMatrix {
 public:
  RationalSparseMatrix() = default;
  RationalSparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}
  // Rows need not be sorted or merged; duplicates are summed and zeros dropped.
  static RationalSparseMatrix from_rows(std::size_t cols, std::vector<SparseVec> rows);
  static RationalSparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                            const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& t);
  static RationalSparseMatrix from_dense(const std::vector<Vec>& rows, std::size_t cols);
  static RationalSparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& row(std::size_t i) const { return data_[i]; }
  Rational at(std::size_t i, std::size_t j) const;
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  void set_row(std::size_t i, SparseVec r);
  void add_to(std::size_t i, std::size_t j, const Rational& v);

  Vec apply(const Vec& x) const;
  SparseVec apply(const SparseVec& x) const;
  std::vector<Vec> to_dense() const;

  bool operator==(const RationalSparseMatrix& o) const;
  // "row col p/q" lines
  std::string dump() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

RationalSparseMatrix multiply(const RationalSparseMatrix& a, const RationalSparseMatrix& b);
RationalSparseMatrix add(const RationalSparseMatrix& a, const RationalSparseMatrix& b);
RationalSparseMatrix scale(const Rational& s, const RationalSparseMatrix& a);
RationalSparseMatrix transpose(const RationalSparseMatrix& a);
RationalSparseMatrix block_diag(const std::vector<RationalSparseMatrix>& blocks);
RationalSparseMatrix vstack(const std::vector<RationalSparseMatrix>& blocks);

// Incremental reduced row echelon form over the first `ncols` columns. Extra
// columns (ncols..ncols+nrhs) ride along as right-hand sides and are never
// pivots. Pivot choice: the entry of least bit size among free columns.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols, std::size_t nrhs = 0);

  // True iff the row was independent of the existing rows (on the main columns).
  // A row that reduces to a nonzero pure-rhs residue marks the system inconsistent.
  bool insert(SparseVec row);
  SparseVec reduce(SparseVec row) const;
  bool in_span(const SparseVec& row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return ncols_; }
  bool inconsistent() const { return inconsistent_; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  std::vector<bool> pivot_mask() const;

  std::vector<SparseVec> kernel_basis() const;
  // x with A x = rhs column `k` (requires consistency); free variables 0.
  SparseVec particular_solution(std::size_t k = 0) const;
  // Rows sorted by pivot column (deterministic presentation).
  std::vector<SparseVec> sorted_rows() const;

 private:
  std::size_t ncols_, nrhs_;
  std::vector<SparseVec> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> row index or -1
  bool inconsistent_ = false;
};

std::size_t rank(const RationalSparseMatrix& m);
std::vector<SparseVec> kernel_basis(const RationalSparseMatrix& m);
// x with m x = b, or nullopt; the returned x is verified by substitution.
std::optional<SparseVec> image_membership(const RationalSparseMatrix& m, const SparseVec& b);
// RREF basis of the row space.
std::vector<SparseVec> row_space_basis(const std::vector<SparseVec>& rows, std::size_t ncols);

// Coordinates of vectors with respect to a fixed (independent) family.
class SpanCoordinates {
 public:
  SpanCoordinates(const std::vector<Vec>& basis, std::size_t n);
  std::size_t size() const { return k_; }
  std::optional<Vec> coords(const Vec& w) const;

 private:
  std::size_t n_, k_;
  std::vector<Vec> rref_;        // rows in ambient coordinates, pivot 1
  std::vector<std::size_t> piv_;
  std::vector<Vec> trans_;       // rref_[p] = sum_k trans_[p][k] basis[k]
};

}  // namespace epscoh
