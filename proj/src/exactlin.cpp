#include "epscoh/exactlin.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "epscoh/errors.hpp"

namespace epscoh {

SparseVec sparse_from_dense(const Vec& v) {
  SparseVec r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) r.push_back({static_cast<std::uint32_t>(i), v[i]});
  return r;
}

Vec dense_from_sparse(const SparseVec& v, std::size_t n) {
  Vec r(n);
  for (const auto& e : v) {
    if (e.i >= n) throw ShapeError("sparse index out of range");
    r[e.i] = e.v;
  }
  return r;
}

SparseVec sparse_axpy(const SparseVec& y, const Rational& a, const SparseVec& x) {
  if (sgn(a) == 0) return y;
  SparseVec r;
  r.reserve(y.size() + x.size());
  std::size_t p = 0, q = 0;
  while (p < y.size() || q < x.size()) {
    if (q == x.size() || (p < y.size() && y[p].i < x[q].i)) {
      r.push_back(y[p++]);
    } else if (p == y.size() || x[q].i < y[p].i) {
      r.push_back({x[q].i, a * x[q].v});
      ++q;
    } else {
      Rational s = y[p].v + a * x[q].v;
      if (sgn(s) != 0) r.push_back({y[p].i, std::move(s)});
      ++p;
      ++q;
    }
  }
  return r;
}

const Rational* sparse_find(const SparseVec& v, std::uint32_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const Entry& e, std::uint32_t k) { return e.i < k; });
  if (it == v.end() || it->i != i) return nullptr;
  return &it->v;
}

SparseVec sparse_normalize(SparseVec r) {
  std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
  SparseVec out;
  for (auto& e : r) {
    if (!out.empty() && out.back().i == e.i)
      out.back().v += e.v;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const Entry& e) { return sgn(e.v) == 0; });
  return out;
}

RationalSparseMatrix RationalSparseMatrix::from_rows(std::size_t cols, std::vector<SparseVec> rows) {
  RationalSparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, std::move(rows[i]));
  return m;
}

RationalSparseMatrix RationalSparseMatrix::from_triplets(
    std::size_t rows, std::size_t cols, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& t) {
  std::vector<SparseVec> r(rows);
  for (const auto& [i, j, v] : t) {
    if (i >= rows || j >= cols) throw ShapeError("triplet out of range");
    r[i].push_back({static_cast<std::uint32_t>(j), v});
  }
  RationalSparseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.set_row(i, std::move(r[i]));
  return m;
}

RationalSparseMatrix RationalSparseMatrix::from_dense(const std::vector<Vec>& rows, std::size_t cols) {
  RationalSparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged dense matrix");
    m.data_[i] = sparse_from_dense(rows[i]);
  }
  return m;
}

RationalSparseMatrix RationalSparseMatrix::identity(std::size_t n) {
  RationalSparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = {{static_cast<std::uint32_t>(i), Rational(1)}};
  return m;
}

Rational RationalSparseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
  const Rational* p = sparse_find(data_[i], static_cast<std::uint32_t>(j));
  return p ? *p : Rational(0);
}

std::size_t RationalSparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void RationalSparseMatrix::set_row(std::size_t i, SparseVec r) {
  if (i >= rows_) throw ShapeError("row index out of range");
  r = sparse_normalize(std::move(r));
  if (!r.empty() && r.back().i >= cols_) throw ShapeError("column index out of range");
  data_[i] = std::move(r);
}

void RationalSparseMatrix::add_to(std::size_t i, std::size_t j, const Rational& v) {
  if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
  data_[i] = sparse_axpy(data_[i], 1, SparseVec{{static_cast<std::uint32_t>(j), v}});
}

Vec RationalSparseMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw ShapeError("apply: vector length mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i])
      if (sgn(x[e.i]) != 0) y[i] += e.v * x[e.i];
  return y;
}

SparseVec RationalSparseMatrix::apply(const SparseVec& x) const {
  return sparse_from_dense(apply(dense_from_sparse(x, cols_)));
}

std::vector<Vec> RationalSparseMatrix::to_dense() const {
  std::vector<Vec> d(rows_, Vec(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) d[i][e.i] = e.v;
  return d;
}

bool RationalSparseMatrix::operator==(const RationalSparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto& a = data_[i];
    const auto& b = o.data_[i];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].i != b[k].i || a[k].v != b[k].v) return false;
  }
  return true;
}

std::string RationalSparseMatrix::dump() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) os << i << ' ' << e.i << ' ' << to_string(e.v) << '\n';
  return os.str();
}

RationalSparseMatrix multiply(const RationalSparseMatrix& a, const RationalSparseMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("multiply: inner dimensions differ");
  RationalSparseMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::map<std::uint32_t, Rational> acc;
    for (const auto& e : a.row(i))
      for (const auto& f : b.row(e.i)) acc[f.i] += e.v * f.v;
    SparseVec row;
    for (auto& [j, v] : acc)
      if (sgn(v) != 0) row.push_back({j, v});
    r.set_row(i, std::move(row));
  }
  return r;
}

RationalSparseMatrix add(const RationalSparseMatrix& a, const RationalSparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("add: shape mismatch");
  RationalSparseMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) r.set_row(i, sparse_axpy(a.row(i), 1, b.row(i)));
  return r;
}

RationalSparseMatrix scale(const Rational& s, const RationalSparseMatrix& a) {
  RationalSparseMatrix r(a.rows(), a.cols());
  if (sgn(s) == 0) return r;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseVec row = a.row(i);
    for (auto& e : row) e.v *= s;
    r.set_row(i, std::move(row));
  }
  return r;
}

RationalSparseMatrix transpose(const RationalSparseMatrix& a) {
  std::vector<SparseVec> rows(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : a.row(i)) rows[e.i].push_back({static_cast<std::uint32_t>(i), e.v});
  RationalSparseMatrix r(a.cols(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) r.set_row(j, std::move(rows[j]));
  return r;
}

RationalSparseMatrix block_diag(const std::vector<RationalSparseMatrix>& blocks) {
  std::size_t R = 0, C = 0;
  for (const auto& b : blocks) {
    R += b.rows();
    C += b.cols();
  }
  RationalSparseMatrix r(R, C);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      SparseVec row = b.row(i);
      for (auto& e : row) e.i += static_cast<std::uint32_t>(c0);
      r.set_row(r0 + i, std::move(row));
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

RationalSparseMatrix vstack(const std::vector<RationalSparseMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t R = 0, C = blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != C) throw ShapeError("vstack: column counts differ");
    R += b.rows();
  }
  RationalSparseMatrix r(R, C);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) r.set_row(r0 + i, b.row(i));
    r0 += b.rows();
  }
  return r;
}

// ---------------------------------------------------------------- Echelon

Echelon::Echelon(std::size_t ncols, std::size_t nrhs)
    : ncols_(ncols), nrhs_(nrhs), pivot_row_(ncols + nrhs, -1) {}

SparseVec Echelon::reduce(SparseVec row) const {
  SparseVec out = row;
  for (const auto& e : row) {
    if (e.i >= ncols_) break;
    auto p = pivot_row_[e.i];
    if (p >= 0) out = sparse_axpy(out, -e.v, rows_[p]);
  }
  return out;
}

bool Echelon::in_span(const SparseVec& row) const {
  for (const auto& e : reduce(row))
    if (e.i < ncols_) return false;
  return true;
}

bool Echelon::insert(SparseVec row) {
  if (!row.empty() && row.back().i >= ncols_ + nrhs_) throw ShapeError("echelon row too long");
  row = reduce(std::move(row));
  std::size_t best = row.size();
  std::size_t best_bits = 0;
  for (std::size_t k = 0; k < row.size() && row[k].i < ncols_; ++k) {
    std::size_t b = bit_size(row[k].v);
    if (best == row.size() || b < best_bits) {
      best = k;
      best_bits = b;
    }
  }
  if (best == row.size()) {
    if (!row.empty()) inconsistent_ = true;
    return false;
  }
  const std::uint32_t c = row[best].i;
  Rational inv = 1 / row[best].v;
  for (auto& e : row) e.v *= inv;
  for (auto& P : rows_) {
    const Rational* x = sparse_find(P, c);
    if (x) {
      Rational f = -*x;
      P = sparse_axpy(P, f, row);
    }
  }
  pivot_row_[c] = static_cast<std::int64_t>(rows_.size());
  pivots_.push_back(c);
  rows_.push_back(std::move(row));
  return true;
}

std::vector<bool> Echelon::pivot_mask() const {
  std::vector<bool> m(ncols_, false);
  for (auto c : pivots_) m[c] = true;
  return m;
}

std::vector<SparseVec> Echelon::kernel_basis() const {
  std::vector<bool> piv = pivot_mask();
  std::vector<std::int64_t> slot(ncols_, -1);
  std::vector<SparseVec> ker;
  for (std::uint32_t j = 0; j < ncols_; ++j)
    if (!piv[j]) {
      slot[j] = static_cast<std::int64_t>(ker.size());
      ker.push_back({{j, Rational(1)}});
    }
  for (std::size_t p = 0; p < rows_.size(); ++p)
    for (const auto& e : rows_[p]) {
      if (e.i >= ncols_) break;
      if (!piv[e.i]) ker[slot[e.i]].push_back({pivots_[p], -e.v});
    }
  for (auto& v : ker) v = sparse_normalize(std::move(v));
  return ker;
}

SparseVec Echelon::particular_solution(std::size_t k) const {
  if (k >= nrhs_) throw ShapeError("no such right-hand side");
  SparseVec x;
  for (std::size_t p = 0; p < rows_.size(); ++p) {
    const Rational* v = sparse_find(rows_[p], static_cast<std::uint32_t>(ncols_ + k));
    if (v) x.push_back({pivots_[p], *v});
  }
  return sparse_normalize(std::move(x));
}

std::vector<SparseVec> Echelon::sorted_rows() const {
  std::vector<std::size_t> ord(rows_.size());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
  std::vector<SparseVec> r;
  for (auto i : ord) r.push_back(rows_[i]);
  return r;
}

std::size_t rank(const RationalSparseMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    e.insert(m.row(i));
    if (e.rank() == m.cols()) break;
  }
  return e.rank();
}

std::vector<SparseVec> kernel_basis(const RationalSparseMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    e.insert(m.row(i));
    if (e.rank() == m.cols()) break;
  }
  return e.kernel_basis();
}

std::optional<SparseVec> image_membership(const RationalSparseMatrix& m, const SparseVec& b) {
  if (!b.empty() && b.back().i >= m.rows()) throw ShapeError("rhs longer than matrix rows");
  Echelon e(m.cols(), 1);
  std::size_t q = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVec row = m.row(i);
    while (q < b.size() && b[q].i < i) ++q;
    if (q < b.size() && b[q].i == i) row.push_back({static_cast<std::uint32_t>(m.cols()), b[q].v});
    e.insert(std::move(row));
    if (e.inconsistent()) return std::nullopt;
  }
  SparseVec x = e.particular_solution(0);
  SparseVec mx = m.apply(x);
  if (mx.size() != b.size()) return std::nullopt;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (mx[k].i != b[k].i || mx[k].v != b[k].v) return std::nullopt;
  return x;
}

std::vector<SparseVec> row_space_basis(const std::vector<SparseVec>& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.sorted_rows();
}

// ---------------------------------------------------------------- SpanCoordinates

SpanCoordinates::SpanCoordinates(const std::vector<Vec>& basis, std::size_t n) : n_(n), k_(basis.size()) {
  for (std::size_t k = 0; k < k_; ++k) {
    if (basis[k].size() != n) throw ShapeError("SpanCoordinates: vector length mismatch");
    Vec v = basis[k];
    Vec t = unit_vec(k_, k);
    for (std::size_t p = 0; p < rref_.size(); ++p) {
      if (sgn(v[piv_[p]]) == 0) continue;
      Rational f = -v[piv_[p]];
      axpy(v, f, rref_[p]);
      axpy(t, f, trans_[p]);
    }
    std::size_t c = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(v[j]) != 0) {
        c = j;
        break;
      }
    if (c == n) throw ShapeError("SpanCoordinates: family is linearly dependent");
    Rational inv = 1 / v[c];
    v = inv * v;
    t = inv * t;
    for (std::size_t p = 0; p < rref_.size(); ++p) {
      if (sgn(rref_[p][c]) == 0) continue;
      Rational f = -rref_[p][c];
      axpy(rref_[p], f, v);
      axpy(trans_[p], f, t);
    }
    rref_.push_back(std::move(v));
    trans_.push_back(std::move(t));
    piv_.push_back(c);
  }
}

std::optional<Vec> SpanCoordinates::coords(const Vec& w) const {
  if (w.size() != n_) throw ShapeError("SpanCoordinates: vector length mismatch");
  Vec r = w;
  Vec x(k_);
  for (std::size_t p = 0; p < rref_.size(); ++p) {
    Rational c = w[piv_[p]];
    if (sgn(c) == 0) continue;
    axpy(r, -c, rref_[p]);
    axpy(x, c, trans_[p]);
  }
  if (!is_zero(r)) return std::nullopt;
  return x;
}

}  // namespace epscoh
