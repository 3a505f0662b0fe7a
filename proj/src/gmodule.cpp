#include "epscoh/gmodule.hpp"

#include <deque>
#include <set>

#include "epscoh/errors.hpp"

namespace epscoh {

GradedModule::GradedModule(AlgebraPtr L, std::vector<std::string> labels, std::vector<Degree> degrees,
                           std::vector<RationalSparseMatrix> action)
    : alg_(std::move(L)), labels_(std::move(labels)), degrees_(std::move(degrees)), rho_(std::move(action)) {
  if (!alg_) throw ShapeError("module without algebra");
  if (degrees_.size() != labels_.size()) throw ShapeError("module: one degree per basis vector required");
  if (rho_.size() != alg_->dim()) throw ShapeError("module: one action matrix per algebra basis element required");
  for (auto& d : degrees_) d = alg_->factor().group().reduce(d);
  for (const auto& m : rho_)
    if (m.rows() != dim() || m.cols() != dim()) throw ShapeError("module: action matrix has wrong shape");
}

std::size_t GradedModule::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (labels_[i] == label) return i;
  throw ShapeError("no module basis vector labelled '" + label + "'");
}

RationalSparseMatrix GradedModule::action_of(const Vec& A) const {
  if (A.size() != alg_->dim()) throw ShapeError("action_of: algebra vector has wrong length");
  RationalSparseMatrix m(dim(), dim());
  for (std::size_t a = 0; a < A.size(); ++a)
    if (sgn(A[a]) != 0) m = add(m, scale(A[a], rho_[a]));
  return m;
}

Vec GradedModule::act(const Vec& A, const Vec& x) const {
  Vec r(dim());
  for (std::size_t a = 0; a < A.size(); ++a)
    if (sgn(A[a]) != 0) axpy(r, A[a], rho_[a].apply(x));
  return r;
}

Report GradedModule::validate() const {
  Report rep;
  const auto& L = *alg_;
  const auto& f = L.factor();
  for (std::size_t i = 0; i < dim(); ++i)
    if (!f.group().valid(degrees_[i])) rep.fail("basis vector " + labels_[i] + " has invalid degree");
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t i = 0; i < dim(); ++i)
      for (const auto& e : rho_[a].row(i))
        if (degrees_[i] != f.add(L.degree(a), degrees_[e.i])) {
          rep.fail("homogeneity: " + L.label(a) + " maps " + labels_[e.i] + " to " + labels_[i]);
        }
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = 0; b < L.dim(); ++b) {
      RationalSparseMatrix lhs(dim(), dim());
      for (const auto& e : L.bracket_basis(a, b)) lhs = add(lhs, scale(e.v, rho_[e.i]));
      RationalSparseMatrix rhs =
          add(multiply(rho_[a], rho_[b]), scale(-L.eps(a, b), multiply(rho_[b], rho_[a])));
      if (!(lhs == rhs)) rep.fail("bracket compatibility: (" + L.label(a) + "," + L.label(b) + ")");
    }
  return rep;
}

ModulePtr make_module(GradedModule V) {
  Report r = V.validate();
  if (!r.ok) throw ValidationError("invalid graded module:\n" + r.summary());
  return std::make_shared<const GradedModule>(std::move(V));
}

void require_same_algebra(const GradedModule& V, const GradedModule& W) {
  if (!same_algebra(*V.algebra(), *W.algebra())) throw ShapeError("modules over different algebras");
}

ModulePtr trivial(const AlgebraPtr& L, const Degree& sigma) { return trivial_space(L, {sigma}, {"1"}); }

ModulePtr trivial_space(const AlgebraPtr& L, const std::vector<Degree>& degrees, std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t i = 0; i < degrees.size(); ++i) labels.push_back("z" + std::to_string(i));
  std::vector<RationalSparseMatrix> rho(L->dim(), RationalSparseMatrix(degrees.size(), degrees.size()));
  return make_module(GradedModule(L, labels, degrees, rho));
}

ModulePtr adjoint(const AlgebraPtr& L) {
  const std::size_t d = L->dim();
  std::vector<RationalSparseMatrix> rho;
  for (std::size_t a = 0; a < d; ++a) {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& e : L->bracket_basis(a, j)) t.emplace_back(e.i, j, e.v);
    rho.push_back(RationalSparseMatrix::from_triplets(d, d, t));
  }
  return make_module(GradedModule(L, L->labels(), L->degrees(), rho));
}

ModulePtr dual(const ModulePtr& V) {
  const auto& L = *V->algebra();
  const std::size_t n = V->dim();
  std::vector<std::string> labels;
  std::vector<Degree> degs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(V->label(i) + "'");
    degs.push_back(L.factor().neg(V->degree(i)));
  }
  // (A.f_j)(x_i) = -eps(alpha, -xi_j) f_j(A x_i)
  std::vector<RationalSparseMatrix> rho;
  for (std::size_t a = 0; a < L.dim(); ++a) {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    for (std::size_t j = 0; j < n; ++j) {
      int s = -L.factor().eps(L.degree(a), degs[j]);
      for (const auto& e : V->action(a).row(j)) t.emplace_back(e.i, j, Rational(s) * e.v);
    }
    rho.push_back(RationalSparseMatrix::from_triplets(n, n, t));
  }
  return make_module(GradedModule(V->algebra(), labels, degs, rho));
}

ModulePtr coadjoint(const AlgebraPtr& L) { return dual(adjoint(L)); }

ModulePtr tensor(const ModulePtr& V, const ModulePtr& W) {
  require_same_algebra(*V, *W);
  const auto& L = *V->algebra();
  const std::size_t n = V->dim(), m = W->dim();
  std::vector<std::string> labels;
  std::vector<Degree> degs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      labels.push_back(V->label(i) + "*" + W->label(j));
      degs.push_back(L.factor().add(V->degree(i), W->degree(j)));
    }
  std::vector<RationalSparseMatrix> rho;
  for (std::size_t a = 0; a < L.dim(); ++a) {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    const auto& A = V->action(a);
    const auto& B = W->action(a);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& e : A.row(i))
        for (std::size_t j = 0; j < m; ++j) t.emplace_back(i * m + j, e.i * m + j, e.v);
    for (std::size_t i = 0; i < n; ++i) {
      int s = L.factor().eps(L.degree(a), V->degree(i));
      for (std::size_t j = 0; j < m; ++j)
        for (const auto& e : B.row(j)) t.emplace_back(i * m + j, i * m + e.i, Rational(s) * e.v);
    }
    rho.push_back(RationalSparseMatrix::from_triplets(n * m, n * m, t));
  }
  return make_module(GradedModule(V->algebra(), labels, degs, rho));
}

ModulePtr direct_sum(const ModulePtr& V, const ModulePtr& W) {
  require_same_algebra(*V, *W);
  std::vector<std::string> labels = V->labels();
  labels.insert(labels.end(), W->labels().begin(), W->labels().end());
  std::vector<Degree> degs = V->degrees();
  degs.insert(degs.end(), W->degrees().begin(), W->degrees().end());
  std::vector<RationalSparseMatrix> rho;
  for (std::size_t a = 0; a < V->algebra()->dim(); ++a) rho.push_back(block_diag({V->action(a), W->action(a)}));
  return make_module(GradedModule(V->algebra(), labels, degs, rho));
}

ModulePtr shift(const ModulePtr& V, const Degree& sigma) {
  const auto& f = V->algebra()->factor();
  f.check(sigma);
  std::vector<Degree> degs;
  for (const auto& d : V->degrees()) degs.push_back(f.sub(d, sigma));
  return make_module(GradedModule(V->algebra(), V->labels(), degs, V->actions()));
}

ModulePtr pullback_module(const ModulePtr& V, const AlgebraPtr& Lp, const std::vector<Vec>& omega) {
  Report r = check_homomorphism(*Lp, *V->algebra(), omega);
  if (!r.ok) throw ValidationError("pullback: not a homomorphism:\n" + r.summary());
  std::vector<RationalSparseMatrix> rho;
  for (std::size_t a = 0; a < Lp->dim(); ++a) rho.push_back(V->action_of(omega[a]));
  return make_module(GradedModule(Lp, V->labels(), V->degrees(), rho));
}

// ---------------------------------------------------------------- subspaces

namespace {

std::vector<Vec> kernel_dense(const RationalSparseMatrix& m) {
  std::vector<Vec> out;
  for (const auto& k : kernel_basis(m)) out.push_back(dense_from_sparse(k, m.cols()));
  return out;
}

std::string coord_label(const GradedModule& V, const Vec& v, std::size_t k) {
  std::size_t nz = 0, at = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) {
      ++nz;
      at = i;
    }
  if (nz == 1 && v[at] == 1) return V.label(at);
  return "u" + std::to_string(k);
}

}  // namespace

RationalSparseMatrix tensor_swap(const GradedModule& V) {
  const auto& f = V.algebra()->factor();
  const std::size_t n = V.dim();
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.emplace_back(j * n + i, i * n + j, Rational(f.eps(V.degree(i), V.degree(j))));
  return RationalSparseMatrix::from_triplets(n * n, n * n, t);
}

Submodule sym_square(const ModulePtr& V) {
  auto VV = tensor(V, V);
  auto T = tensor_swap(*V);
  return submodule(VV, kernel_dense(add(T, scale(-1, RationalSparseMatrix::identity(T.rows())))));
}

Submodule skew_square(const ModulePtr& V) {
  auto VV = tensor(V, V);
  auto T = tensor_swap(*V);
  return submodule(VV, kernel_dense(add(T, RationalSparseMatrix::identity(T.rows()))));
}

Submodule skew_power(const ModulePtr& V, std::size_t k) {
  if (k == 0) throw ShapeError("skew_power: k >= 1 required");
  ModulePtr P = V;
  for (std::size_t r = 1; r < k; ++r) P = tensor(P, V);
  if (k == 1) return submodule(P, [&] {
      std::vector<Vec> b;
      for (std::size_t i = 0; i < V->dim(); ++i) b.push_back(unit_vec(V->dim(), i));
      return b;
    }());
  const auto& f = V->algebra()->factor();
  const std::size_t n = V->dim();
  const std::size_t N = P->dim();
  std::vector<RationalSparseMatrix> blocks;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    // factor p is the digit with weight n^(k-1-p)
    std::size_t w = 1;
    for (std::size_t r = p + 2; r < k; ++r) w *= n;
    std::size_t wp = w * n;
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    for (std::size_t idx = 0; idx < N; ++idx) {
      std::size_t x = (idx / wp) % n, y = (idx / w) % n;
      std::size_t img = idx - x * wp - y * w + y * wp + x * w;
      t.emplace_back(img, idx, Rational(f.eps(V->degree(x), V->degree(y))));
      t.emplace_back(idx, idx, Rational(1));
    }
    blocks.push_back(RationalSparseMatrix::from_triplets(N, N, t));
  }
  return submodule(P, kernel_dense(vstack(blocks)));
}

std::vector<Vec> invariants_subspace(const GradedModule& V) {
  if (V.algebra()->dim() == 0) {
    std::vector<Vec> b;
    for (std::size_t i = 0; i < V.dim(); ++i) b.push_back(unit_vec(V.dim(), i));
    return b;
  }
  return homogeneous_basis(kernel_dense(vstack(V.actions())), V.degrees());
}

Submodule submodule(const ModulePtr& V, const std::vector<Vec>& subspace, std::vector<std::string> labels) {
  std::vector<Vec> B = homogeneous_basis(subspace, V->degrees());
  const std::size_t k = B.size();
  const auto& L = *V->algebra();
  std::vector<Degree> degs;
  for (std::size_t q = 0; q < k; ++q) {
    for (std::size_t i = 0; i < V->dim(); ++i)
      if (sgn(B[q][i]) != 0) {
        degs.push_back(V->degree(i));
        break;
      }
  }
  if (labels.size() != k) {
    labels.clear();
    for (std::size_t q = 0; q < k; ++q) labels.push_back(coord_label(*V, B[q], q));
  }
  SpanCoordinates sc(B, V->dim());
  std::vector<RationalSparseMatrix> rho;
  for (std::size_t a = 0; a < L.dim(); ++a) {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    for (std::size_t q = 0; q < k; ++q) {
      auto c = sc.coords(V->act(a, B[q]));
      if (!c) throw ValidationError("submodule: subspace is not invariant under " + L.label(a));
      for (std::size_t p = 0; p < k; ++p)
        if (sgn((*c)[p]) != 0) t.emplace_back(p, q, (*c)[p]);
    }
    rho.push_back(RationalSparseMatrix::from_triplets(k, k, t));
  }
  return {make_module(GradedModule(V->algebra(), labels, degs, rho)), B};
}

Submodule submodule_generated(const ModulePtr& V, const std::vector<Vec>& vectors) {
  const std::size_t n = V->dim();
  Echelon ech(n);
  std::deque<Vec> todo;
  for (const auto& v : homogeneous_basis(vectors, V->degrees())) todo.push_back(v);
  std::vector<Vec> span;
  while (!todo.empty()) {
    Vec v = std::move(todo.front());
    todo.pop_front();
    if (!ech.insert(sparse_from_dense(v))) continue;
    span.push_back(v);
    for (std::size_t a = 0; a < V->algebra()->dim(); ++a) {
      Vec w = V->act(a, v);
      if (!is_zero(w)) todo.push_back(std::move(w));
    }
  }
  return submodule(V, span);
}

Quotient quotient(const ModulePtr& V, const std::vector<Vec>& sub) {
  const std::size_t n = V->dim();
  std::vector<Vec> S = homogeneous_basis(sub, V->degrees());
  const auto& L = *V->algebra();
  for (const auto& s : S)
    for (std::size_t a = 0; a < L.dim(); ++a) {
      Echelon e(n);
      for (const auto& x : S) e.insert(sparse_from_dense(x));
      if (!e.in_span(sparse_from_dense(V->act(a, s))))
        throw ValidationError("quotient: subspace is not invariant under " + L.label(a));
    }
  Echelon e(n);
  for (const auto& x : S) e.insert(sparse_from_dense(x));
  std::vector<Vec> lifts;
  std::vector<std::string> labels;
  std::vector<Degree> degs;
  for (std::size_t i = 0; i < n; ++i)
    if (e.insert(sparse_from_dense(unit_vec(n, i)))) {
      lifts.push_back(unit_vec(n, i));
      labels.push_back(V->label(i));
      degs.push_back(V->degree(i));
    }
  const std::size_t k = lifts.size();
  std::vector<Vec> all = lifts;
  all.insert(all.end(), S.begin(), S.end());
  SpanCoordinates sc(all, n);
  std::vector<RationalSparseMatrix> rho;
  for (std::size_t a = 0; a < L.dim(); ++a) {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    for (std::size_t q = 0; q < k; ++q) {
      auto c = sc.coords(V->act(a, lifts[q]));
      for (std::size_t p = 0; p < k; ++p)
        if (sgn((*c)[p]) != 0) t.emplace_back(p, q, (*c)[p]);
    }
    rho.push_back(RationalSparseMatrix::from_triplets(k, k, t));
  }
  return {make_module(GradedModule(V->algebra(), labels, degs, rho)), lifts};
}

// ---------------------------------------------------------------- weights

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t s = a.size() - b.size();
    q[s] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
    trim(a);
  }
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// Faddeev-LeVerrier
Poly charpoly(const std::vector<Vec>& A) {
  const std::size_t n = A.size();
  Poly c(n + 1);
  c[n] = 1;
  std::vector<Vec> M(n, Vec(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<Vec> AM(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (sgn(A[i][l]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(M[l][j]) != 0) AM[i][j] += A[i][l] * M[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = std::move(AM);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (sgn(A[i][l]) != 0 && sgn(M[l][i]) != 0) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

std::vector<mpz_class> divisors(mpz_class x) {
  if (x < 0) x = -x;
  if (x == 0) throw PreconditionError("eigenvalue search: zero coefficient");
  if (mpz_sizeinbase(x.get_mpz_t(), 2) > 62) throw PreconditionError("eigenvalue search: coefficients too large");
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class m = x;
  for (mpz_class p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) fac.push_back({p, e});
  }
  if (m > 1) fac.push_back({m, 1});
  std::vector<mpz_class> d{1};
  for (auto& [p, e] : fac) {
    std::size_t s = d.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < s; ++i) d.push_back(d[i] * pk);
    }
  }
  return d;
}

}  // namespace

std::vector<Rational> rational_eigenvalues(const std::vector<Vec>& M) {
  Poly p = charpoly(M);
  Poly dp(p.size() > 1 ? p.size() - 1 : 0);
  for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * static_cast<long>(i);
  Poly sq = dp.empty() ? p : poly_div(p, poly_gcd(p, dp));
  trim(sq);
  std::vector<Rational> roots;
  if (sq.size() <= 1) return roots;
  if (sgn(sq[0]) == 0) {
    roots.push_back(0);
    sq.erase(sq.begin());
  }
  mpz_class l = 1;
  for (const auto& c : sq) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : sq) ic.push_back(mpz_class(c * l));
  if (sq.size() > 1) {
    for (const auto& q : divisors(ic.back()))
      for (const auto& p : divisors(ic.front()))
        for (int s : {1, -1}) {
          Rational r(s * p, q);
          r.canonicalize();
          if (sgn(poly_eval(sq, r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
            roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::map<std::vector<Rational>, std::vector<Vec>> weight_spaces(const GradedModule& V, const std::vector<Vec>& cartan) {
  const std::size_t n = V.dim();
  std::map<std::vector<Rational>, std::vector<Vec>> blocks;
  std::vector<Vec> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vec(n, i));
  blocks[{}] = all;
  for (const auto& h : cartan) {
    RationalSparseMatrix H = V.action_of(h);
    std::vector<Rational> ev = rational_eigenvalues(H.to_dense());
    std::map<std::vector<Rational>, std::vector<Vec>> next;
    for (auto& [w, B] : blocks) {
      std::size_t found = 0;
      for (const auto& lam : ev) {
        // x = sum c_k B_k with (H - lam) x = 0
        std::vector<Vec> cols;
        for (const auto& b : B) cols.push_back(H.apply(b) - lam * b);
        std::vector<Vec> rowsT(n, Vec(B.size()));
        for (std::size_t k = 0; k < B.size(); ++k)
          for (std::size_t i = 0; i < n; ++i) rowsT[i][k] = cols[k][i];
        auto ker = kernel_basis(RationalSparseMatrix::from_dense(rowsT, B.size()));
        if (ker.empty()) continue;
        std::vector<Vec> space;
        for (const auto& c : ker) {
          Vec x(n);
          for (const auto& e : c) axpy(x, e.v, B[e.i]);
          space.push_back(std::move(x));
        }
        found += space.size();
        auto key = w;
        key.push_back(lam);
        next[key] = homogeneous_basis(space, V.degrees());
      }
      if (found != B.size()) throw PreconditionError("weight_spaces: element not diagonalizable over Q");
    }
    blocks = std::move(next);
  }
  return blocks;
}

// ---------------------------------------------------------------- builders

ModulePtr module_from_generators(const AlgebraPtr& L, std::vector<std::string> labels,
                                 const std::map<std::size_t, RationalSparseMatrix>& given,
                                 const std::map<std::size_t, Degree>& seeds) {
  const std::size_t d = L->dim(), n = labels.size();
  std::map<std::size_t, RationalSparseMatrix> known = given;
  for (auto& [a, m] : known)
    if (m.rows() != n || m.cols() != n) throw ShapeError("module_from_generators: action has wrong shape");
  while (known.size() < d) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Vec> cols;
    for (auto& [a, ma] : known)
      for (auto& [b, mb] : known) {
        pairs.push_back({a, b});
        cols.push_back(dense_from_sparse(L->bracket_basis(a, b), d));
      }
    std::vector<Vec> rows(d, Vec(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (std::size_t i = 0; i < d; ++i) rows[i][k] = cols[k][i];
    auto M = RationalSparseMatrix::from_dense(rows, cols.size());
    std::map<std::size_t, RationalSparseMatrix> added;
    for (std::size_t k = 0; k < d; ++k) {
      if (known.count(k)) continue;
      auto c = image_membership(M, {{static_cast<std::uint32_t>(k), Rational(1)}});
      if (!c) continue;
      RationalSparseMatrix r(n, n);
      for (const auto& e : *c) {
        auto [a, b] = pairs[e.i];
        const auto& ma = known.at(a);
        const auto& mb = known.at(b);
        r = add(r, scale(e.v, add(multiply(ma, mb), scale(-L->eps(a, b), multiply(mb, ma)))));
      }
      added.emplace(k, std::move(r));
    }
    if (added.empty()) throw ShapeError("module_from_generators: given elements do not generate the algebra");
    for (auto& [k, m] : added) known.emplace(k, std::move(m));
  }
  std::vector<RationalSparseMatrix> rho;
  for (std::size_t a = 0; a < d; ++a) rho.push_back(known.at(a));

  std::vector<std::optional<Degree>> deg(n);
  std::deque<std::size_t> q;
  for (auto& [i, g] : seeds) {
    deg[i] = L->factor().group().reduce(g);
    q.push_back(i);
  }
  while (!q.empty()) {
    std::size_t j = q.front();
    q.pop_front();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t i = 0; i < n; ++i) {
        if (!sparse_find(rho[a].row(i), static_cast<std::uint32_t>(j))) continue;
        if (!deg[i]) {
          deg[i] = L->factor().add(L->degree(a), *deg[j]);
          q.push_back(i);
        }
      }
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& e : rho[a].row(j))
        if (!deg[e.i]) {
          deg[e.i] = L->factor().sub(*deg[j], L->degree(a));
          q.push_back(e.i);
        }
  }
  std::vector<Degree> degs;
  for (std::size_t i = 0; i < n; ++i) {
    if (!deg[i]) throw ShapeError("module_from_generators: cannot infer degree of " + labels[i]);
    degs.push_back(*deg[i]);
  }
  return make_module(GradedModule(L, std::move(labels), std::move(degs), std::move(rho)));
}

Report check_invariant_map(const GradedModule& V, const GradedModule& W, const RationalSparseMatrix& f,
                           const Degree& phi) {
  Report rep;
  require_same_algebra(V, W);
  const auto& L = *V.algebra();
  if (f.rows() != W.dim() || f.cols() != V.dim()) {
    rep.fail("map has wrong shape");
    return rep;
  }
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (const auto& e : f.row(i))
      if (W.degree(i) != L.factor().add(V.degree(e.i), phi)) rep.fail("map is not homogeneous of degree " + to_string(phi));
  for (std::size_t a = 0; a < L.dim(); ++a) {
    auto lhs = multiply(f, V.action(a));
    auto rhs = scale(L.factor().eps(phi, L.degree(a)), multiply(W.action(a), f));
    if (!(lhs == rhs)) rep.fail("map does not commute with " + L.label(a));
  }
  return rep;
}

}  // namespace epscoh
