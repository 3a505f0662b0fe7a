#include "epscoh/algebra.hpp"

#include <map>
#include <set>

#include "epscoh/errors.hpp"

namespace epscoh {

std::string Report::summary() const {
  if (ok) return "ok";
  std::string s;
  for (const auto& v : violations) s += v + "\n";
  return s;
}

EpsLieAlgebra::EpsLieAlgebra(CommutationFactor f, std::vector<std::string> labels, std::vector<Degree> degrees,
                             const std::vector<BracketSpec>& brackets)
    : factor_(std::move(f)), labels_(std::move(labels)), degrees_(std::move(degrees)) {
  const std::size_t d = labels_.size();
  if (degrees_.size() != d) throw ShapeError("algebra: one degree per basis element required");
  for (auto& g : degrees_) g = factor_.group().reduce(g);
  table_.assign(d * d, {});
  signs_.dim = d;
  signs_.eps.resize(d * d);
  signs_.parity.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) signs_.eps[i * d + j] = static_cast<signed char>(factor_.eps(degrees_[i], degrees_[j]));
    signs_.parity[i] = signs_.eps[i * d + i];
  }
  std::vector<bool> given(d * d, false);
  for (const auto& b : brackets) {
    if (b.i >= d || b.j >= d) throw ShapeError("bracket index out of range");
    if (!b.terms.empty() && b.terms.back().i >= d) throw ShapeError("bracket term index out of range");
    if (given[b.i * d + b.j])
      construction_errors_.push_back("bracket <" + labels_[b.i] + "," + labels_[b.j] + "> given twice");
    given[b.i * d + b.j] = true;
    table_[b.i * d + b.j] = RationalSparseMatrix::from_rows(d, {b.terms}).row(0);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!given[i * d + j] && given[j * d + i]) {
        SparseVec t = table_[j * d + i];
        for (auto& e : t) e.v *= -eps(i, j);
        table_[i * d + j] = std::move(t);
      }
}

std::size_t EpsLieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (labels_[i] == label) return i;
  throw ShapeError("no basis element labelled '" + label + "'");
}

Vec EpsLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw ShapeError("bracket: dimension mismatch");
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational c = x[i] * y[j];
      for (const auto& e : bracket_basis(i, j)) r[e.i] += c * e.v;
    }
  }
  return r;
}

std::optional<Degree> EpsLieAlgebra::degree_of(const Vec& x) const {
  std::optional<Degree> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    if (!d)
      d = degrees_[i];
    else if (*d != degrees_[i])
      throw ShapeError("vector is not homogeneous");
  }
  return d;
}

Report EpsLieAlgebra::validate() const {
  Report rep;
  for (const auto& e : construction_errors_) rep.fail(e);
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    if (!factor_.group().valid(degrees_[i])) rep.fail("basis element " + labels_[i] + " has invalid degree");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Degree s = factor_.add(degrees_[i], degrees_[j]);
      for (const auto& e : bracket_basis(i, j))
        if (degrees_[e.i] != s) {
          rep.fail("homogeneity: <" + labels_[i] + "," + labels_[j] + "> has component " + labels_[e.i] +
                   " of wrong degree");
          break;
        }
      if (j < i) continue;
      SparseVec t = sparse_axpy(bracket_basis(i, j), eps(i, j), bracket_basis(j, i));
      if (!t.empty()) rep.fail("skew-symmetry: <" + labels_[i] + "," + labels_[j] + ">");
    }
  // eps(c,a)<A,<B,C>> + eps(a,b)<B,<C,A>> + eps(b,c)<C,<A,B>> = 0
  auto br = [&](std::size_t a, const SparseVec& v) {
    SparseVec r;
    for (const auto& e : v) r = sparse_axpy(r, e.v, bracket_basis(a, e.i));
    return r;
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        SparseVec s = br(a, bracket_basis(b, c));
        for (auto& e : s) e.v *= eps(c, a);
        s = sparse_axpy(s, eps(a, b), br(b, bracket_basis(c, a)));
        s = sparse_axpy(s, eps(b, c), br(c, bracket_basis(a, b)));
        if (!s.empty())
          rep.fail("Jacobi: (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");
      }
  return rep;
}

AlgebraPtr make_algebra(EpsLieAlgebra L) {
  Report r = L.validate();
  if (!r.ok) throw ValidationError("invalid eps Lie algebra:\n" + r.summary());
  return std::make_shared<const EpsLieAlgebra>(std::move(L));
}

bool same_algebra(const EpsLieAlgebra& a, const EpsLieAlgebra& b) {
  if (&a == &b) return true;
  if (a.dim() != b.dim() || !(a.factor() == b.factor()) || a.degrees() != b.degrees()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto& x = a.bracket_basis(i, j);
      const auto& y = b.bracket_basis(i, j);
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k].i != y[k].i || x[k].v != y[k].v) return false;
    }
  return true;
}

std::vector<Vec> homogeneous_basis(const std::vector<Vec>& vectors, const std::vector<Degree>& degrees) {
  const std::size_t n = degrees.size();
  std::vector<SparseVec> parts;
  for (const auto& v : vectors) {
    if (v.size() != n) throw ShapeError("homogeneous_basis: length mismatch");
    std::map<Degree, SparseVec> split;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(v[i]) != 0) split[degrees[i]].push_back({static_cast<std::uint32_t>(i), v[i]});
    for (auto& [g, p] : split) parts.push_back(std::move(p));
  }
  std::vector<Vec> out;
  for (const auto& r : row_space_basis(parts, n)) out.push_back(dense_from_sparse(r, n));
  return out;
}

std::vector<Vec> derived_subalgebra(const EpsLieAlgebra& L) {
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i; j < L.dim(); ++j)
      if (!L.bracket_basis(i, j).empty()) rows.push_back(L.bracket_basis(i, j));
  std::vector<Vec> out;
  for (const auto& r : row_space_basis(rows, L.dim())) out.push_back(dense_from_sparse(r, L.dim()));
  return out;
}

bool is_perfect(const EpsLieAlgebra& L) { return derived_subalgebra(L).size() == L.dim(); }

std::vector<Vec> center(const EpsLieAlgebra& L) {
  // x in center iff sum_i x_i <e_i, e_j> = 0 for all j.
  const std::size_t d = L.dim();
  std::vector<SparseVec> rows;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::map<std::uint32_t, Rational>> acc(d);
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& e : L.bracket_basis(i, j)) acc[e.i][static_cast<std::uint32_t>(i)] += e.v;
    for (auto& m : acc) {
      SparseVec r;
      for (auto& [k, v] : m)
        if (sgn(v) != 0) r.push_back({k, v});
      if (!r.empty()) rows.push_back(std::move(r));
    }
  }
  Echelon e(d);
  for (auto& r : rows) e.insert(r);
  std::vector<Vec> ker;
  for (const auto& k : e.kernel_basis()) ker.push_back(dense_from_sparse(k, d));
  return homogeneous_basis(ker, L.degrees());
}

Subquotient subquotient(const EpsLieAlgebra& L, const std::vector<Vec>& sub, const std::vector<Vec>& ideal) {
  const std::size_t d = L.dim();
  std::vector<Vec> I = homogeneous_basis(ideal, L.degrees());
  std::vector<Vec> S = homogeneous_basis(sub, L.degrees());
  Echelon sub_ech(d);
  for (const auto& v : S) sub_ech.insert(sparse_from_dense(v));
  for (const auto& v : I)
    if (!sub_ech.in_span(sparse_from_dense(v))) throw ValidationError("subquotient: ideal not contained in subalgebra");
  // Complement of I in S: prefer parent basis vectors lying in S, then S itself.
  Echelon ech(d);
  for (const auto& v : I) ech.insert(sparse_from_dense(v));
  std::vector<Vec> reps;
  std::vector<std::string> labels;
  std::vector<Degree> degs;
  auto consider = [&](const Vec& v, const std::string& label) {
    SparseVec s = sparse_from_dense(v);
    if (!sub_ech.in_span(s)) return;
    if (ech.insert(s)) {
      reps.push_back(v);
      labels.push_back(label);
      degs.push_back(*L.degree_of(v));
    }
  };
  for (std::size_t i = 0; i < d; ++i) consider(unit_vec(d, i), L.label(i));
  for (std::size_t k = 0; k < S.size(); ++k) consider(S[k], "s" + std::to_string(k));
  const std::size_t q = reps.size();
  std::vector<Vec> all = reps;
  all.insert(all.end(), I.begin(), I.end());
  SpanCoordinates coords(all, d);
  std::vector<BracketSpec> br;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      auto c = coords.coords(L.bracket(reps[a], reps[b]));
      if (!c) throw ValidationError("subquotient: subspace not closed under the bracket");
      SparseVec t;
      for (std::size_t k = 0; k < q; ++k)
        if (sgn((*c)[k]) != 0) t.push_back({static_cast<std::uint32_t>(k), (*c)[k]});
      if (!t.empty()) br.push_back({a, b, t});
    }
  // ideal property: <S, I> in I
  for (const auto& s : S)
    for (const auto& x : I) {
      auto c = coords.coords(L.bracket(s, x));
      if (!c) throw ValidationError("subquotient: bracket leaves the subalgebra");
      for (std::size_t k = 0; k < q; ++k)
        if (sgn((*c)[k]) != 0) throw ValidationError("subquotient: not an ideal of the subalgebra");
    }
  return {make_algebra(EpsLieAlgebra(L.factor(), labels, degs, br)), reps};
}

Report check_homomorphism(const EpsLieAlgebra& source, const EpsLieAlgebra& target, const std::vector<Vec>& images) {
  Report rep;
  if (images.size() != source.dim()) {
    rep.fail("homomorphism: wrong number of images");
    return rep;
  }
  for (std::size_t i = 0; i < source.dim(); ++i) {
    if (images[i].size() != target.dim()) {
      rep.fail("homomorphism: image has wrong length");
      return rep;
    }
    for (std::size_t k = 0; k < target.dim(); ++k)
      if (sgn(images[i][k]) != 0 && target.degree(k) != source.degree(i))
        rep.fail("homomorphism: image of " + source.label(i) + " not of degree " + to_string(source.degree(i)));
  }
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      Vec lhs(target.dim());
      for (const auto& e : source.bracket_basis(i, j)) axpy(lhs, e.v, images[e.i]);
      Vec rhs = target.bracket(images[i], images[j]);
      if (lhs != rhs) rep.fail("homomorphism: fails on (" + source.label(i) + "," + source.label(j) + ")");
    }
  return rep;
}

}  // namespace epscoh
