#include "epscoh/extensions.hpp"

#include "epscoh/errors.hpp"

namespace epscoh {

namespace {

AlgebraPtr algebra_on_basis(const EpsLieAlgebra& E, const std::vector<Vec>& basis, std::vector<std::string> labels) {
  SpanCoordinates sc(basis, E.dim());
  std::vector<Degree> degs;
  for (const auto& v : basis) {
    auto d = E.degree_of(v);
    if (!d) throw ValidationError("basis vector is not homogeneous");
    degs.push_back(*d);
  }
  std::vector<BracketSpec> br;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      auto c = sc.coords(E.bracket(basis[a], basis[b]));
      if (!c) throw ValidationError("span is not closed under the bracket");
      SparseVec t = sparse_from_dense(*c);
      if (!t.empty()) br.push_back({a, b, t});
    }
  return make_algebra(EpsLieAlgebra(E.factor(), std::move(labels), std::move(degs), std::move(br)));
}

bool is_trivial_module(const GradedModule& H) {
  for (const auto& m : H.actions())
    if (!m.is_zero()) return false;
  return true;
}

void require_degree_zero(const Cochain& g) {
  for (const auto& [gamma, c] : g.components())
    if (gamma != g.algebra().factor().zero()) throw ValidationError("cocycle is not of degree 0");
}

}  // namespace

std::vector<Vec> CentralExtension::projection() const {
  std::vector<Vec> p;
  for (std::size_t i = 0; i < E->dim(); ++i) p.push_back(i < base_dim() ? unit_vec(base_dim(), i) : Vec(base_dim()));
  return p;
}

std::vector<Vec> CentralExtension::injection() const {
  std::vector<Vec> p;
  for (std::size_t k = 0; k < H->dim(); ++k) p.push_back(unit_vec(E->dim(), base_dim() + k));
  return p;
}

std::vector<Vec> CentralExtension::section() const {
  std::vector<Vec> p;
  for (std::size_t i = 0; i < base_dim(); ++i) p.push_back(unit_vec(E->dim(), i));
  return p;
}

CentralExtension extension_from_cocycle(const Cochain& g) {
  if (g.level() != 2) throw ValidationError("extension: a 2-cochain is required");
  const auto& H = g.module();
  if (!is_trivial_module(*H)) throw ValidationError("extension: coefficients must be a trivial module");
  require_degree_zero(g);
  if (!is_cocycle(g)) throw ValidationError("extension: g is not a cocycle");
  const auto& L = g.algebra();
  const std::size_t d = L.dim(), h = H->dim();
  std::vector<std::string> labels = L.labels();
  std::vector<Degree> degs = L.degrees();
  for (std::size_t k = 0; k < h; ++k) {
    labels.push_back(H->label(k));
    degs.push_back(H->degree(k));
  }
  std::vector<BracketSpec> br;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      SparseVec t = L.bracket_basis(a, b);
      Vec v = g.evaluate({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
      for (std::size_t k = 0; k < h; ++k)
        if (sgn(v[k]) != 0) t.push_back({static_cast<std::uint32_t>(d + k), v[k]});
      if (!t.empty()) br.push_back({a, b, t});
    }
  auto E = make_algebra(EpsLieAlgebra(L.factor(), labels, degs, br));
  return {H->algebra(), H, g, E};
}

Cochain cocycle_from_section(const AlgebraPtr& E, const AlgebraPtr& L, const std::vector<Vec>& pi,
                             const std::vector<Vec>& sigma, std::vector<Vec> kernel) {
  const std::size_t de = E->dim(), dl = L->dim();
  if (pi.size() != de || sigma.size() != dl) throw ShapeError("section: wrong number of images");
  Report hr = check_homomorphism(*E, *L, pi);
  if (!hr.ok) throw ValidationError("section: projection is not a homomorphism:\n" + hr.summary());
  std::vector<Vec> pim(dl, Vec(de));
  for (std::size_t j = 0; j < de; ++j)
    for (std::size_t i = 0; i < dl; ++i) pim[i][j] = pi[j][i];
  auto P = RationalSparseMatrix::from_dense(pim, de);
  for (std::size_t i = 0; i < dl; ++i) {
    if (P.apply(sigma[i]) != unit_vec(dl, i)) throw ValidationError("section: pi o sigma is not the identity");
    std::optional<Degree> dg;
    try {
      dg = E->degree_of(sigma[i]);
    } catch (const ShapeError&) {
    }
    if (!dg || *dg != L->degree(i)) throw ValidationError("section: not homogeneous of degree 0");
  }
  if (kernel.empty())
    for (const auto& k : kernel_basis(P)) kernel.push_back(dense_from_sparse(k, de));
  std::vector<Degree> kdeg;
  for (const auto& k : kernel) {
    if (!is_zero(P.apply(k))) throw ValidationError("section: kernel vector not in ker pi");
    auto dg = E->degree_of(k);
    if (!dg) throw ValidationError("section: kernel basis not homogeneous");
    kdeg.push_back(*dg);
    for (std::size_t j = 0; j < de; ++j)
      if (!is_zero(E->bracket(k, unit_vec(de, j)))) throw ValidationError("section: kernel is not central");
  }
  if (kernel.size() + dl != de) throw ValidationError("section: kernel basis has the wrong size");
  SpanCoordinates sc(kernel, de);
  auto H = trivial_space(L, kdeg);
  Cochain g(H, 2);
  ExteriorBasis B(*L, 2);
  for (const auto& m : B.monomials()) {
    Vec x = E->bracket(sigma[m[0]], sigma[m[1]]);
    Vec y(de);
    for (const auto& e : L->bracket_basis(m[0], m[1])) axpy(y, e.v, sigma[e.i]);
    auto c = sc.coords(x - y);
    if (!c) throw ValidationError("section: defect not in the kernel");
    g.add(m, *c);
  }
  require_degree_zero(g);
  if (!is_cocycle(g)) throw ValidationError("section: resulting cochain is not a cocycle");
  return g;
}

std::vector<Vec> equivalence_from_primitive(const CentralExtension& from, const CentralExtension& to, const Cochain& b) {
  const std::size_t d = to.base_dim(), h = to.H->dim();
  if (b.level() != 1 || b.module()->dim() != h || from.H->dim() != h) throw ShapeError("equivalence: shape mismatch");
  std::vector<Vec> img;
  for (std::size_t i = 0; i < d; ++i) {
    Vec v = unit_vec(d + h, i);
    Vec x = b.evaluate({static_cast<std::uint32_t>(i)});
    for (std::size_t k = 0; k < h; ++k) v[d + k] = x[k];
    img.push_back(v);
  }
  for (std::size_t k = 0; k < h; ++k) img.push_back(unit_vec(d + h, d + k));
  return img;
}

Report check_isomorphism(const EpsLieAlgebra& source, const EpsLieAlgebra& target, const std::vector<Vec>& images) {
  Report r = check_homomorphism(source, target, images);
  if (source.dim() != target.dim()) r.fail("isomorphism: dimensions differ");
  std::vector<SparseVec> rows;
  for (const auto& v : images) rows.push_back(sparse_from_dense(v));
  if (rank(RationalSparseMatrix::from_rows(target.dim(), rows)) != target.dim()) r.fail("isomorphism: map is not bijective");
  return r;
}

RationalSparseMatrix boundary2(const EpsLieAlgebra& L) {
  ExteriorBasis B(L, 2);
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
  for (std::size_t j = 0; j < B.size(); ++j)
    for (const auto& e : L.bracket_basis(B[j][0], B[j][1])) t.emplace_back(e.i, j, -e.v);
  return RationalSparseMatrix::from_triplets(L.dim(), B.size(), t);
}

RationalSparseMatrix boundary3(const EpsLieAlgebra& L) {
  ExteriorBasis B2(L, 2), B3(L, 3);
  const auto& f = L.factor();
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
  auto put = [&](std::size_t col, std::uint32_t x, std::uint32_t y, const Rational& c) {
    auto cn = canonicalize(L, {x, y});
    if (cn) t.emplace_back(*B2.find(cn->mono), col, Rational(cn->sign) * c);
  };
  for (std::size_t j = 0; j < B3.size(); ++j) {
    auto a = B3[j][0], b = B3[j][1], c = B3[j][2];
    for (const auto& e : L.bracket_basis(a, b)) put(j, e.i, c, -e.v);
    int s = f.eps(L.degree(b), L.degree(c));
    for (const auto& e : L.bracket_basis(a, c)) put(j, e.i, b, Rational(s) * e.v);
    for (const auto& e : L.bracket_basis(b, c)) put(j, a, e.i, e.v);
  }
  return RationalSparseMatrix::from_triplets(B2.size(), B3.size(), t);
}

std::size_t H2Homology::total() const {
  std::size_t s = 0;
  for (const auto& [g, d] : dims) s += d;
  return s;
}

H2Homology homology_h2(const EpsLieAlgebra& L) {
  ExteriorBasis B2(L, 2), B3(L, 3);
  auto d2 = boundary2(L);
  auto d3t = transpose(boundary3(L));
  auto d2t = transpose(d2);
  std::map<Degree, std::vector<std::uint32_t>> s2, s3;
  for (std::size_t j = 0; j < B2.size(); ++j) s2[monomial_degree(L, B2[j])].push_back(static_cast<std::uint32_t>(j));
  for (std::size_t j = 0; j < B3.size(); ++j) s3[monomial_degree(L, B3[j])].push_back(static_cast<std::uint32_t>(j));
  H2Homology res;
  for (const auto& [gamma, cols] : s2) {
    // kernel of d2 on this sector, in local coordinates
    std::vector<SparseVec> rows(L.dim());
    std::vector<SparseVec> loc;
    for (std::size_t k = 0; k < cols.size(); ++k) loc.push_back(d2t.row(cols[k]));
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> trip;
    for (std::size_t k = 0; k < loc.size(); ++k)
      for (const auto& e : loc[k]) trip.emplace_back(e.i, k, e.v);
    auto D = RationalSparseMatrix::from_triplets(L.dim(), cols.size(), trip);
    std::map<std::uint32_t, std::uint32_t> local;
    for (std::size_t k = 0; k < cols.size(); ++k) local[cols[k]] = static_cast<std::uint32_t>(k);
    Echelon img(cols.size());
    auto it = s3.find(gamma);
    if (it != s3.end())
      for (auto j : it->second) {
        SparseVec v;
        for (const auto& e : d3t.row(j)) v.push_back({local.at(e.i), e.v});
        img.insert(v);
      }
    std::size_t count = 0;
    for (const auto& k : kernel_basis(D)) {
      if (!img.insert(k)) continue;
      SparseVec g;
      for (const auto& e : k) g.push_back({cols[e.i], e.v});
      res.cycles.push_back({gamma, sparse_normalize(g)});
      ++count;
    }
    if (count) res.dims[gamma] = count;
  }
  return res;
}

CoveringResult universal_covering(const AlgebraPtr& Lp) {
  const auto& L = *Lp;
  if (!is_perfect(L)) throw PreconditionError("universal covering: algebra is not perfect, so no covering exists");
  ExteriorBasis B2(L, 2);
  const std::size_t d = L.dim(), N2 = B2.size();
  auto d2 = boundary2(L);
  auto d3t = transpose(boundary3(L));
  Echelon img(N2);
  for (std::size_t j = 0; j < d3t.rows(); ++j) img.insert(d3t.row(j));
  auto mask = img.pivot_mask();
  std::vector<std::uint32_t> wpos(N2, UINT32_MAX);
  std::vector<Monomial> w_basis;
  std::vector<Degree> wdeg;
  std::vector<std::string> wlab;
  for (std::size_t j = 0; j < N2; ++j)
    if (!mask[j]) {
      wpos[j] = static_cast<std::uint32_t>(w_basis.size());
      w_basis.push_back(B2[j]);
      wdeg.push_back(monomial_degree(L, B2[j]));
      wlab.push_back("[" + to_string(L, B2[j]) + "]");
    }
  const std::size_t w = w_basis.size();
  auto cls = [&](const SparseVec& x) {
    Vec c(w);
    for (const auto& e : img.reduce(x)) {
      if (wpos[e.i] == UINT32_MAX) throw ValidationError("covering: reduction left a pivot column");
      c[wpos[e.i]] = e.v;
    }
    return c;
  };
  auto H = trivial_space(Lp, wdeg, wlab);
  Cochain f(H, 2);
  for (std::size_t j = 0; j < N2; ++j) f.add(B2[j], cls({{static_cast<std::uint32_t>(j), Rational(1)}}));
  CoveringResult res{extension_from_cocycle(f), w_basis, nullptr, {}, {}, {}, {}, false};
  // lifts (e_i, class(x_i)) with -d2 x_i = e_i, then the central part class(ker d2)
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    auto x = image_membership(d2, {{static_cast<std::uint32_t>(i), Rational(-1)}});
    if (!x) throw ValidationError("covering: bracket map is not surjective");
    Vec v(d + w);
    v[i] = 1;
    Vec c = cls(*x);
    for (std::size_t k = 0; k < w; ++k) v[d + k] = c[k];
    res.embedding.push_back(v);
    labels.push_back(L.label(i));
  }
  std::vector<SparseVec> hrows;
  for (const auto& k : kernel_basis(d2)) hrows.push_back(sparse_from_dense(cls(k)));
  std::size_t z = 0;
  for (const auto& h : row_space_basis(hrows, w)) {
    Vec v(d + w);
    for (const auto& e : h) v[d + e.i] = e.v;
    res.center.push_back(res.embedding.size());
    res.embedding.push_back(v);
    labels.push_back("z" + std::to_string(++z));
  }
  res.cover = algebra_on_basis(*res.ext.E, res.embedding, labels);
  for (const auto& v : res.embedding) res.projection.push_back(Vec(v.begin(), v.begin() + static_cast<long>(d)));
  for (auto c : res.center) ++res.center_dims[res.cover->degree(c)];
  res.perfect = is_perfect(*res.cover);
  return res;
}

std::vector<Vec> covering_morphism(const CoveringResult& cov, const CentralExtension& target) {
  const std::size_t d = target.base_dim(), h = target.H->dim();
  const std::size_t w = cov.w_basis.size();
  std::vector<Vec> gm;
  for (const auto& m : cov.w_basis) gm.push_back(target.g.evaluate(m));
  std::vector<Vec> img;
  for (const auto& v : cov.embedding) {
    Vec x(d + h);
    for (std::size_t i = 0; i < d; ++i) x[i] = v[i];
    for (std::size_t k = 0; k < w; ++k)
      if (sgn(v[d + k]) != 0)
        for (std::size_t j = 0; j < h; ++j) x[d + j] += v[d + k] * gm[k][j];
    img.push_back(x);
  }
  return img;
}

CentralExtension covering_from_h2_basis(const AlgebraPtr& L, const std::vector<Cochain>& basis) {
  std::vector<Degree> degs;
  std::map<Degree, std::vector<std::size_t>> by_sector;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto& g = basis[r];
    if (g.level() != 2 || g.module()->dim() != 1) throw ShapeError("h2 basis: 2-cochains with values in K required");
    auto gamma = g.degree();
    if (!gamma) throw ValidationError("h2 basis: zero cochain");
    if (!is_cocycle(g)) throw ValidationError("h2 basis: not a cocycle");
    degs.push_back(L->factor().neg(*gamma));
    by_sector[*gamma].push_back(r);
  }
  for (const auto& [gamma, idx] : by_sector) {
    const auto& K = basis[idx.front()].module();
    CochainSpace C1(K, 1), C2(K, 2);
    Echelon e(C2.dim(gamma));
    auto D = transpose(coboundary_matrix(C1, C2, gamma));
    for (std::size_t i = 0; i < D.rows(); ++i) e.insert(D.row(i));
    for (auto r : idx) {
      if (basis[r].module() != K) throw ShapeError("h2 basis: cochains of one sector must share the module");
      if (!e.insert(C2.coords(basis[r], gamma)))
        throw ValidationError("h2 basis: cohomology classes are not independent");
    }
  }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < basis.size(); ++r) labels.push_back("c" + std::to_string(r + 1));
  auto H = trivial_space(L, degs, labels);
  Cochain g(H, 2);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (const auto& [m, v] : basis[r].values()) {
      Vec x(basis.size());
      x[r] = v[0];
      g.add(m, x);
    }
  return extension_from_cocycle(g);
}

bool h2_pairing_check(const AlgebraPtr& L) {
  auto hom = homology_h2(*L);
  CohomologyOptions o;
  o.n_min = 2;
  auto coh = cohomology(trivial(L, L->factor().zero()), 2, o);
  std::map<Degree, std::size_t> c;
  for (const auto& s : coh.levels[2].sectors)
    if (s.dim_H) c[L->factor().neg(s.gamma)] = s.dim_H;
  return c == hom.dims;
}

}  // namespace epscoh
