#include "epscoh/catalog.hpp"

#include <sstream>

#include "epscoh/errors.hpp"

namespace epscoh::catalog {

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, Vec(n));
  m[i][j] = 1;
  return m;
}

Matrix matrix_combination(const std::vector<Matrix>& basis, const Vec& coeffs) {
  if (basis.empty()) return {};
  const std::size_t n = basis[0].size();
  Matrix m(n, Vec(n));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) axpy(m[i], coeffs[k], basis[k][i]);
  }
  return m;
}

namespace {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Vec flatten(const Matrix& m) {
  Vec v;
  for (const auto& r : m) v.insert(v.end(), r.begin(), r.end());
  return v;
}

Matrix scaled(const Rational& s, Matrix m) {
  for (auto& r : m) r = s * r;
  return m;
}

Matrix plus(Matrix a, const Matrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i) axpy(a[i], 1, b[i]);
  return a;
}

std::string index_label(std::size_t i, std::size_t j) {
  if (i < 9 && j < 9) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
  return "E" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

Degree root(std::size_t N, std::size_t i, std::size_t j) {
  std::vector<std::int64_t> c(N, 0);
  c[i] += 1;
  c[j] -= 1;
  return Degree(c);
}

CommutationFactor lattice_factor(std::size_t m, std::size_t n) {
  std::vector<int> mask(m + n, 0);
  for (std::size_t i = m; i < m + n; ++i) mask[i] = 1;
  return CommutationFactor::lattice(mask);
}

Vec basis_vec(const EpsLieAlgebra& L, const std::vector<std::pair<std::string, Rational>>& terms) {
  Vec v(L.dim());
  for (const auto& [l, c] : terms) v[L.index_of(l)] += c;
  return v;
}

}  // namespace

MatrixAlgebra algebra_from_matrices(const CommutationFactor& f, std::vector<std::string> labels,
                                    std::vector<Degree> degrees, std::vector<Matrix> mats) {
  const std::size_t d = mats.size();
  if (labels.size() != d || degrees.size() != d) throw ShapeError("algebra_from_matrices: size mismatch");
  std::vector<Vec> flat;
  for (const auto& m : mats) flat.push_back(flatten(m));
  const std::size_t N = d ? flat[0].size() : 0;
  SpanCoordinates sc(flat, N);
  std::vector<BracketSpec> br;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      int e = f.eps(degrees[a], degrees[b]);
      Matrix c = plus(mat_mul(mats[a], mats[b]), scaled(Rational(-e), mat_mul(mats[b], mats[a])));
      auto x = sc.coords(flatten(c));
      if (!x) throw ValidationError("algebra_from_matrices: span not closed under the bracket");
      SparseVec t = sparse_from_dense(*x);
      if (!t.empty()) br.push_back({a, b, t});
    }
  return {make_algebra(EpsLieAlgebra(f, std::move(labels), std::move(degrees), std::move(br))), std::move(mats)};
}

MatrixAlgebra gl(std::size_t m, std::size_t n) {
  const std::size_t N = m + n;
  if (N == 0) throw ShapeError("gl: empty");
  std::vector<std::string> labels;
  std::vector<Degree> degs;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      labels.push_back(index_label(i, j));
      degs.push_back(root(N, i, j));
      mats.push_back(matrix_unit(N, i, j));
    }
  return algebra_from_matrices(lattice_factor(m, n), labels, degs, mats);
}

MatrixAlgebra sl(std::size_t m, std::size_t n) {
  const std::size_t N = m + n;
  if (N < 2) throw ShapeError("sl: m + n >= 2 required");
  std::vector<std::string> labels;
  std::vector<Degree> degs;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      labels.push_back(index_label(i, j));
      degs.push_back(root(N, i, j));
      mats.push_back(matrix_unit(N, i, j));
    }
  auto sigma = [&](std::size_t i) { return i < m ? 1 : -1; };
  for (std::size_t i = 0; i + 1 < N; ++i) {
    labels.push_back("H" + std::to_string(i + 1));
    degs.push_back(Degree(std::vector<std::int64_t>(N, 0)));
    Matrix h = matrix_unit(N, i, i);
    h[i + 1][i + 1] = -sigma(i) * sigma(i + 1);
    mats.push_back(h);
  }
  return algebra_from_matrices(lattice_factor(m, n), labels, degs, mats);
}

Psl psl_nn(std::size_t n) {
  if (n < 2) throw ShapeError("psl: n >= 2 required");
  Psl p{sl(n, n), {}};
  const auto& L = *p.sl.algebra;
  std::vector<Vec> all;
  for (std::size_t i = 0; i < L.dim(); ++i) all.push_back(unit_vec(L.dim(), i));
  p.quotient = subquotient(L, all, center(L));
  return p;
}

Cochain trace_cocycle(const Psl& p) {
  const auto& P = p.algebra();
  const auto& S = *p.sl.algebra;
  Cochain g(trivial(P, P->factor().zero()), 2);
  ExteriorBasis B(*P, 2);
  for (const auto& m : B.monomials()) {
    Vec br = S.bracket(p.quotient.representatives[m[0]], p.quotient.representatives[m[1]]);
    Matrix M = p.sl.matrix_of(br);
    Rational tr = 0;
    for (std::size_t i = 0; i < M.size(); ++i) tr += M[i][i];
    g.add(m, Vec{tr});
  }
  return g;
}

MatrixAlgebra sl12(Sl12Grading grading) {
  auto E = [](std::size_t i, std::size_t j) { return matrix_unit(3, i - 1, j - 1); };
  const Rational h(1, 2);
  std::vector<std::string> labels{"Q+", "Q-", "Q3", "B", "V+", "V-", "W+", "W-"};
  std::vector<Matrix> mats{E(2, 3),
                           E(3, 2),
                           scaled(h, plus(E(2, 2), scaled(-1, E(3, 3)))),
                           scaled(-h, plus(plus(scaled(2, E(1, 1)), E(2, 2)), E(3, 3))),
                           E(2, 1),
                           E(3, 1),
                           E(1, 3),
                           scaled(-1, E(1, 2))};
  // root-lattice degrees of the matrix units
  std::vector<Degree> fine{root(3, 1, 2), root(3, 2, 1), {0, 0, 0}, {0, 0, 0},
                           root(3, 1, 0), root(3, 2, 0), root(3, 0, 2), root(3, 0, 1)};
  std::vector<Degree> degs;
  switch (grading) {
    case Sl12Grading::fine:
      return algebra_from_matrices(CommutationFactor::lattice({0, 1, 1}), labels, fine, mats);
    case Sl12Grading::z: {
      const std::int64_t d[3] = {-2, -1, -1};
      for (const auto& x : fine) degs.push_back({d[0] * x.c[0] + d[1] * x.c[1] + d[2] * x.c[2]});
      return algebra_from_matrices(CommutationFactor::super_z(), labels, degs, mats);
    }
    case Sl12Grading::z2:
      for (const auto& x : fine) degs.push_back({((x.c[1] + x.c[2]) % 2 + 2) % 2});
      return algebra_from_matrices(CommutationFactor::super_z2(), labels, degs, mats);
  }
  throw ShapeError("sl12: unknown grading");
}

std::vector<Vec> sl12_omega() {
  // basis order Q+,Q-,Q3,B,V+,V-,W+,W-
  std::vector<Vec> w(8, Vec(8));
  w[0][0] = w[1][1] = w[2][2] = 1;
  w[3][3] = -1;
  w[4][6] = w[5][7] = w[6][4] = w[7][5] = 1;
  return w;
}

std::vector<Vec> osp12_in_sl12() {
  std::vector<Vec> g;
  for (std::size_t i = 0; i < 3; ++i) g.push_back(unit_vec(8, i));
  for (std::size_t k = 0; k < 2; ++k) {
    Vec u(8);
    u[4 + k] = Rational(1, 2);
    u[6 + k] = Rational(1, 2);
    g.push_back(u);
  }
  return g;
}

std::vector<Vec> sl12_x_span() {
  std::vector<Vec> g;
  for (std::size_t i = 0; i < 3; ++i) g.push_back(unit_vec(8, i));
  for (std::size_t k = 0; k < 2; ++k) {
    Vec u(8);
    u[4 + k] = Rational(1, 2);
    u[6 + k] = Rational(-1, 2);
    g.push_back(u);
  }
  return g;
}

MatrixAlgebra osp12() {
  auto S = sl12(Sl12Grading::z2);
  std::vector<Matrix> mats;
  for (const auto& v : osp12_in_sl12()) mats.push_back(S.matrix_of(v));
  return algebra_from_matrices(CommutationFactor::super_z2(), {"Q+", "Q-", "Q3", "U+", "U-"},
                               {{0}, {0}, {0}, {1}, {1}}, mats);
}

MatrixAlgebra sl2() { return sl(2, 0); }
MatrixAlgebra sl3() { return sl(3, 0); }

// ------------------------------------------------------------ modules

namespace {

Degree sl12_seed(const EpsLieAlgebra& L, std::int64_t zdeg, const Degree& fine) {
  const auto& g = L.factor().group();
  if (g.free_rank == 3) return fine;
  if (g.free_rank == 1) return {zdeg};
  return {((zdeg % 2) + 2) % 2};
}

void require_sl12(const EpsLieAlgebra& L) {
  for (const char* l : {"Q+", "Q-", "Q3", "B", "V+", "V-", "W+", "W-"}) L.index_of(l);
  if (L.dim() != 8) throw ShapeError("expected sl(1|2)");
}

using Triplets = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

}  // namespace

ModulePtr v_half(const AlgebraPtr& L) {
  require_sl12(*L);
  // basis e+, e0, e-
  const std::size_t ep = 0, e0 = 1, em = 2;
  std::map<std::size_t, RationalSparseMatrix> given;
  given.emplace(L->index_of("V+"), RationalSparseMatrix::from_triplets(3, 3, Triplets{{e0, em, -1}}));
  given.emplace(L->index_of("V-"), RationalSparseMatrix::from_triplets(3, 3, Triplets{{e0, ep, 1}}));
  given.emplace(L->index_of("W+"), RationalSparseMatrix::from_triplets(3, 3, Triplets{{ep, e0, -1}}));
  given.emplace(L->index_of("W-"), RationalSparseMatrix::from_triplets(3, 3, Triplets{{em, e0, -1}}));
  return module_from_generators(L, {"e+", "e0", "e-"}, given, {{e0, sl12_seed(*L, 2, {-1, 0, 0})}});
}

ModulePtr w_module(const AlgebraPtr& L, std::size_t k) {
  if (k == 0) return trivial(L, L->factor().zero());
  auto V = v_half(L);
  if (k == 1) return V;
  return skew_power(V, k).module;
}

ModulePtr kac_half(const AlgebraPtr& L, const Rational& b) {
  require_sl12(*L);
  const Rational b0 = b + Rational(1, 2);
  const std::size_t u = 0, up = 1, um = 2, u2 = 3;
  std::map<std::size_t, RationalSparseMatrix> given;
  given.emplace(L->index_of("W+"), RationalSparseMatrix::from_triplets(4, 4, Triplets{{up, u, 1}, {u2, um, 1}}));
  given.emplace(L->index_of("W-"), RationalSparseMatrix::from_triplets(4, 4, Triplets{{um, u, 1}, {u2, up, -1}}));
  given.emplace(L->index_of("V+"),
                RationalSparseMatrix::from_triplets(4, 4, Triplets{{u, um, b0}, {up, u2, 1 - b0}}));
  given.emplace(L->index_of("V-"),
                RationalSparseMatrix::from_triplets(4, 4, Triplets{{u, up, -b0}, {um, u2, 1 - b0}}));
  return module_from_generators(L, {"u", "u+", "u-", "u2"}, given, {{u, sl12_seed(*L, 0, {0, 0, 0})}});
}

V8Family v8_family(const AlgebraPtr& L) {
  require_sl12(*L);
  V8Family f;
  f.t = 0, f.s = 1, f.v = 2, f.w = 3, f.vp = 4, f.vm = 5, f.wp = 6, f.wm = 7;
  std::map<std::size_t, RationalSparseMatrix> given;
  given.emplace(L->index_of("V+"), RationalSparseMatrix::from_triplets(
                                       8, 8, Triplets{{f.vp, f.t, 1}, {f.v, f.vm, 1}, {f.wp, f.w, 1}, {f.s, f.wm, 1}}));
  given.emplace(L->index_of("V-"), RationalSparseMatrix::from_triplets(
                                       8, 8, Triplets{{f.vm, f.t, 1}, {f.v, f.vp, -1}, {f.wm, f.w, 1}, {f.s, f.wp, -1}}));
  given.emplace(L->index_of("W+"), RationalSparseMatrix::from_triplets(
                                       8, 8, Triplets{{f.wp, f.t, 1}, {f.w, f.wm, 1}, {f.vp, f.v, 1}, {f.s, f.vm, 1}}));
  given.emplace(L->index_of("W-"), RationalSparseMatrix::from_triplets(
                                       8, 8, Triplets{{f.wm, f.t, 1}, {f.w, f.wp, -1}, {f.vm, f.v, 1}, {f.s, f.vp, -1}}));
  f.v8 = module_from_generators(L, {"t", "s", "v", "w", "v+", "v-", "w+", "w-"}, given,
                                {{f.t, sl12_seed(*L, 0, {0, 0, 0})}});
  auto e = [&](std::size_t i) { return unit_vec(8, i); };
  f.v1 = submodule(f.v8, {e(f.s)}, {"s"});
  f.v4 = submodule(f.v8, {e(f.vp), e(f.vm), e(f.v), e(f.s)}, {"v+", "v-", "v", "s"});
  f.v4bar = submodule(f.v8, {e(f.wp), e(f.wm), e(f.w), e(f.s)}, {"w+", "w-", "w", "s"});
  f.v7 = submodule(f.v8, {e(f.vp), e(f.vm), e(f.v), e(f.wp), e(f.wm), e(f.w), e(f.s)},
                   {"v+", "v-", "v", "w+", "w-", "w", "s"});
  return f;
}

Submodule ts2(const AlgebraPtr& L) { return sym_square(adjoint(L)); }

Vec ts2_t(const AlgebraPtr& L) {
  require_sl12(*L);
  const std::size_t d = L->dim();
  Vec t(d * d);
  auto at = [&](const char* a, const char* b) -> Rational& { return t[L->index_of(a) * d + L->index_of(b)]; };
  at("Q+", "Q-") += 1;
  at("Q-", "Q+") += 1;
  at("Q3", "Q3") += 2;
  at("B", "B") += 2;
  return t;
}

// ------------------------------------------------------------ cocycles

namespace {

Cochain one_cochain(const ModulePtr& V, const std::vector<std::tuple<const char*, std::size_t, Rational>>& vals) {
  Cochain g(V, 1);
  const auto& L = *V->algebra();
  for (const auto& [a, i, c] : vals) {
    Vec x(V->dim());
    x[i] = c;
    g.set({static_cast<std::uint32_t>(L.index_of(a))}, g.evaluate({static_cast<std::uint32_t>(L.index_of(a))}) + x);
  }
  return g;
}

}  // namespace

Cochain cocycle_g0(const ModulePtr& V) {
  return one_cochain(V, {{"V+", V->index_of("e+"), 1}, {"V-", V->index_of("e-"), 1}});
}

Cochain cocycle_g2(const ModulePtr& V) {
  return one_cochain(V, {{"B", V->index_of("e0"), 1}, {"W+", V->index_of("e+"), -1}, {"W-", V->index_of("e-"), -1}});
}

Cochain cocycle_g(const ModulePtr& V) { return cocycle_g0(V) + cocycle_g2(V); }

Cochain cocycle_v8_g(const V8Family& f) {
  return one_cochain(f.v8, {{"V+", f.vp, 1}, {"V-", f.vm, 1}, {"B", f.s, -1}});
}

Cochain cocycle_v8_gbar(const V8Family& f) {
  return one_cochain(f.v8, {{"W+", f.wp, 1}, {"W-", f.wm, 1}, {"B", f.s, 1}});
}

Cochain restrict_values(const Cochain& g, const Submodule& sub) {
  SpanCoordinates sc(sub.basis, g.module()->dim());
  Cochain out(sub.module, g.level());
  for (const auto& [m, v] : g.values()) {
    auto c = sc.coords(v);
    if (!c) throw ShapeError("restrict_values: value outside the submodule");
    out.add(m, *c);
  }
  return out;
}

Cochain extend_values(const Cochain& g, const Submodule& sub, const ModulePtr& parent) {
  Cochain out(parent, g.level());
  for (const auto& [m, v] : g.values()) {
    Vec x(parent->dim());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) axpy(x, v[k], sub.basis[k]);
    out.add(m, x);
  }
  return out;
}

Typicality typicality_sl12(const Rational& b, const Rational& q) {
  Typicality t{!(b == q || b == -q), std::nullopt};
  Rational twice = 2 * q;
  twice.canonicalize();
  if (sgn(q) > 0 && twice.get_den() == 1) t.dim = t.typical ? Rational(8 * q) : Rational(4 * q + 1);
  if (sgn(q) == 0 && sgn(b) == 0) t.dim = Rational(1);
  return t;
}

// ------------------------------------------------------------ names

std::vector<std::string> algebra_names() {
  return {"sl2", "sl3", "osp12", "sl12", "sl12z", "sl12z2", "gl11", "sl22", "sl33", "psl22", "psl33",
          "gl:M,N", "sl:M,N", "psl:N"};
}

std::vector<std::string> module_names() {
  return {"trivial", "adjoint", "coadjoint", "v_half", "w:K", "kac:B", "v8", "v7", "v4", "v4bar", "v1", "ts2"};
}

namespace {

std::pair<std::size_t, std::size_t> parse_pair(const std::string& s) {
  auto c = s.find(',');
  if (c == std::string::npos) throw ParseError("expected M,N in '" + s + "'");
  try {
    return {std::stoul(s.substr(0, c)), std::stoul(s.substr(c + 1))};
  } catch (const std::exception&) {
    throw ParseError("expected M,N in '" + s + "'");
  }
}

std::size_t parse_count(const std::string& s) {
  try {
    std::size_t pos = 0;
    auto v = std::stoul(s, &pos);
    if (pos != s.size()) throw ParseError("bad count '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad count '" + s + "'");
  }
}

}  // namespace

AlgebraPtr algebra_by_name(const std::string& name) {
  if (name == "sl2") return sl2().algebra;
  if (name == "sl3") return sl3().algebra;
  if (name == "osp12") return osp12().algebra;
  if (name == "sl12") return sl12(Sl12Grading::fine).algebra;
  if (name == "sl12z") return sl12(Sl12Grading::z).algebra;
  if (name == "sl12z2") return sl12(Sl12Grading::z2).algebra;
  if (name == "gl11") return gl(1, 1).algebra;
  if (name == "sl22") return sl(2, 2).algebra;
  if (name == "sl33") return sl(3, 3).algebra;
  if (name == "psl22") return psl_nn(2).algebra();
  if (name == "psl33") return psl_nn(3).algebra();
  if (name.rfind("gl:", 0) == 0) {
    auto [m, n] = parse_pair(name.substr(3));
    return gl(m, n).algebra;
  }
  if (name.rfind("sl:", 0) == 0) {
    auto [m, n] = parse_pair(name.substr(3));
    return sl(m, n).algebra;
  }
  if (name.rfind("psl:", 0) == 0) return psl_nn(parse_count(name.substr(4))).algebra();
  throw ParseError("unknown catalog algebra '" + name + "'");
}

ModulePtr module_by_name(const AlgebraPtr& L, const std::string& name) {
  if (name == "trivial") return trivial(L, L->factor().zero());
  if (name == "adjoint") return adjoint(L);
  if (name == "coadjoint") return coadjoint(L);
  if (name == "v_half") return v_half(L);
  if (name == "ts2") return ts2(L).module;
  if (name.rfind("w:", 0) == 0) return w_module(L, parse_count(name.substr(2)));
  if (name.rfind("kac:", 0) == 0) return kac_half(L, parse_rational(name.substr(4)));
  if (name == "v8" || name == "v7" || name == "v4" || name == "v4bar" || name == "v1") {
    auto f = v8_family(L);
    if (name == "v8") return f.v8;
    if (name == "v7") return f.v7.module;
    if (name == "v4") return f.v4.module;
    if (name == "v4bar") return f.v4bar.module;
    return f.v1.module;
  }
  throw ParseError("unknown catalog module '" + name + "'");
}

}  // namespace epscoh::catalog
