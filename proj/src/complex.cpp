#include "epscoh/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "epscoh/errors.hpp"

namespace epscoh {

// ---------------------------------------------------------------- forms

Rational InvariantForm::evaluate(const std::vector<Vec>& args) const {
  if (args.size() != r) throw ShapeError("form: wrong number of arguments");
  Rational total = 0;
  Monomial t(r);
  auto rec = [&](auto&& self, std::size_t k, const Rational& c) -> void {
    if (k == r) {
      total += c * (*this)(t);
      return;
    }
    for (std::size_t i = 0; i < args[k].size(); ++i) {
      if (sgn(args[k][i]) == 0) continue;
      t[k] = static_cast<std::uint32_t>(i);
      self(self, k + 1, c * args[k][i]);
    }
  };
  rec(rec, 0, Rational(1));
  return total;
}

// ---------------------------------------------------------------- Cochain

Cochain::Cochain(ModulePtr V, int n) : V_(std::move(V)), n_(n) {
  if (n < -1) throw ShapeError("cochain level below -1");
}

void Cochain::set(const Monomial& tuple, const Vec& value) {
  if (static_cast<int>(tuple.size()) != n_) throw ShapeError("cochain: tuple length differs from level");
  if (value.size() != V_->dim()) throw ShapeError("cochain: value has wrong length");
  auto c = canonicalize(algebra(), tuple);
  if (!c) {
    if (!epscoh::is_zero(value)) throw ShapeError("cochain: nonzero value on a vanishing tuple");
    return;
  }
  values_.erase(c->mono);
  if (!epscoh::is_zero(value)) values_[c->mono] = Rational(c->sign) * value;
}

void Cochain::add(const Monomial& canonical, const Vec& value) {
  if (epscoh::is_zero(value)) return;
  auto it = values_.find(canonical);
  if (it == values_.end()) {
    values_.emplace(canonical, value);
    return;
  }
  axpy(it->second, 1, value);
  if (epscoh::is_zero(it->second)) values_.erase(it);
}

Vec Cochain::evaluate(const Monomial& tuple) const {
  if (static_cast<int>(tuple.size()) != n_) throw ShapeError("cochain: tuple length differs from level");
  auto c = canonicalize(algebra(), tuple);
  if (!c) return Vec(V_->dim());
  auto it = values_.find(c->mono);
  if (it == values_.end()) return Vec(V_->dim());
  return c->sign == 1 ? it->second : Rational(-1) * it->second;
}

Vec Cochain::evaluate_vectors(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != n_) throw ShapeError("cochain: wrong number of arguments");
  Vec total(V_->dim());
  Monomial t(args.size());
  auto rec = [&](auto&& self, std::size_t k, const Rational& c) -> void {
    if (k == args.size()) {
      axpy(total, c, evaluate(t));
      return;
    }
    for (std::size_t i = 0; i < args[k].size(); ++i) {
      if (sgn(args[k][i]) == 0) continue;
      t[k] = static_cast<std::uint32_t>(i);
      self(self, k + 1, c * args[k][i]);
    }
  };
  rec(rec, 0, Rational(1));
  return total;
}

std::map<Degree, Cochain> Cochain::components() const {
  std::map<Degree, Cochain> out;
  const auto& f = algebra().factor();
  for (const auto& [m, v] : values_) {
    Degree md = monomial_degree(algebra(), m);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      Degree g = f.sub(V_->degree(i), md);
      auto it = out.try_emplace(g, V_, n_).first;
      auto& vals = it->second.values_;
      auto jt = vals.try_emplace(m, Vec(V_->dim())).first;
      jt->second[i] = v[i];
    }
  }
  return out;
}

std::optional<Degree> Cochain::degree() const {
  auto c = components();
  if (c.empty()) return std::nullopt;
  if (c.size() > 1) throw ShapeError("cochain is not homogeneous");
  return c.begin()->first;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (o.n_ != n_ || o.V_->dim() != V_->dim()) throw ShapeError("cochain sum: incompatible operands");
  for (const auto& [m, v] : o.values_) add(m, v);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (o.n_ != n_ || o.V_->dim() != V_->dim()) throw ShapeError("cochain difference: incompatible operands");
  for (const auto& [m, v] : o.values_) add(m, Rational(-1) * v);
  return *this;
}

Cochain operator*(const Rational& s, Cochain a) {
  if (sgn(s) == 0) return Cochain(a.V_, a.n_);
  for (auto& [m, v] : a.values_) v = s * v;
  return a;
}

bool Cochain::operator==(const Cochain& o) const {
  return n_ == o.n_ && V_->dim() == o.V_->dim() && values_ == o.values_;
}

std::string Cochain::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : values_) {
    if (!first) os << "; ";
    first = false;
    os << epscoh::to_string(algebra(), m) << " -> ";
    bool f2 = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      if (!f2) os << " + ";
      f2 = false;
      os << epscoh::to_string(v[i]) << "*" << V_->label(i);
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- CochainSpace

CochainSpace::CochainSpace(ModulePtr V, std::size_t n) : V_(std::move(V)), basis_(*V_->algebra(), n) {
  const auto& L = *V_->algebra();
  const auto& f = L.factor();
  const std::size_t dv = V_->dim();
  mdeg_.reserve(basis_.size());
  for (const auto& m : basis_.monomials()) mdeg_.push_back(epscoh::monomial_degree(L, m));
  sector_of_.resize(basis_.size() * dv);
  local_.resize(basis_.size() * dv);
  for (std::size_t m = 0; m < basis_.size(); ++m)
    for (std::size_t v = 0; v < dv; ++v) {
      Degree g = f.sub(V_->degree(v), mdeg_[m]);
      auto [it, fresh] = sector_index_.try_emplace(g, sectors_.size());
      if (fresh) sectors_.push_back({g, {}});
      auto& sec = sectors_[it->second];
      std::size_t gi = m * dv + v;
      sector_of_[gi] = static_cast<std::uint32_t>(it->second);
      local_[gi] = static_cast<std::uint32_t>(sec.elems.size());
      sec.elems.push_back(static_cast<std::uint32_t>(gi));
    }
}

std::size_t CochainSpace::dim(const Degree& gamma) const {
  auto s = sector_id(gamma);
  return s ? sectors_[*s].elems.size() : 0;
}

std::vector<Degree> CochainSpace::sector_degrees() const {
  std::vector<Degree> out;
  for (const auto& [g, i] : sector_index_) out.push_back(g);
  return out;
}

std::optional<std::size_t> CochainSpace::sector_id(const Degree& gamma) const {
  auto it = sector_index_.find(gamma);
  if (it == sector_index_.end()) return std::nullopt;
  return it->second;
}

SparseVec CochainSpace::coords(const Cochain& g, const Degree& gamma) const {
  if (g.level() != static_cast<int>(level())) throw ShapeError("coords: level mismatch");
  auto sid = sector_id(gamma);
  SparseVec x;
  if (!sid) return x;
  const std::size_t dv = V_->dim();
  for (const auto& [m, v] : g.values()) {
    auto mi = basis_.find(m);
    if (!mi) throw ShapeError("coords: non-canonical monomial");
    for (std::size_t i = 0; i < dv; ++i) {
      if (sgn(v[i]) == 0) continue;
      std::size_t gi = *mi * dv + i;
      if (sector_of_[gi] == *sid) x.push_back({local_[gi], v[i]});
    }
  }
  std::sort(x.begin(), x.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
  return x;
}

SparseVec CochainSpace::global_coords(const Cochain& g) const {
  if (g.level() != static_cast<int>(level())) throw ShapeError("coords: level mismatch");
  SparseVec x;
  const std::size_t dv = V_->dim();
  for (const auto& [m, v] : g.values()) {
    auto mi = basis_.find(m);
    if (!mi) throw ShapeError("coords: non-canonical monomial");
    for (std::size_t i = 0; i < dv; ++i)
      if (sgn(v[i]) != 0) x.push_back({static_cast<std::uint32_t>(*mi * dv + i), v[i]});
  }
  std::sort(x.begin(), x.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
  return x;
}

Cochain CochainSpace::cochain(const Degree& gamma, const SparseVec& x) const {
  Cochain g(V_, static_cast<int>(level()));
  auto sid = sector_id(gamma);
  if (!sid) {
    if (!x.empty()) throw ShapeError("cochain: empty sector");
    return g;
  }
  const auto& el = sectors_[*sid].elems;
  const std::size_t dv = V_->dim();
  for (const auto& e : x) {
    std::size_t gi = el.at(e.i);
    Vec v(dv);
    v[gi % dv] = e.v;
    g.add(basis_[gi / dv], v);
  }
  return g;
}

Cochain CochainSpace::global_cochain(const SparseVec& x) const {
  Cochain g(V_, static_cast<int>(level()));
  const std::size_t dv = V_->dim();
  for (const auto& e : x) {
    Vec v(dv);
    v[e.i % dv] = e.v;
    g.add(basis_[e.i / dv], v);
  }
  return g;
}

Cochain CochainSpace::basis_cochain(std::size_t global) const {
  return global_cochain({{static_cast<std::uint32_t>(global), Rational(1)}});
}

// ---------------------------------------------------------------- coboundary matrices

namespace {

struct RowTemplate {
  struct T1 {
    std::uint32_t mono;
    Rational coef;  // (-1)^r sign eps(alpha_0+..+alpha_{r-1}, alpha_r)
    std::uint32_t a;
  };
  struct T2 {
    std::uint32_t mono;
    Rational coef;
  };
  std::vector<T1> t1;
  std::vector<T2> t2;
};

RowTemplate make_template(const EpsLieAlgebra& L, const ExteriorBasis& Bn, const Monomial& M) {
  RowTemplate T;
  const auto& f = L.factor();
  const std::size_t n1 = M.size();
  Degree prefix = f.zero();
  for (std::size_t r = 0; r < n1; ++r) {
    Monomial rest;
    for (std::size_t k = 0; k < n1; ++k)
      if (k != r) rest.push_back(M[k]);
    auto c = canonicalize(L, rest);
    if (c) {
      int s = ((r & 1) ? -1 : 1) * c->sign * f.eps(prefix, L.degree(M[r]));
      T.t1.push_back({static_cast<std::uint32_t>(*Bn.find(c->mono)), Rational(s), M[r]});
    }
    prefix = f.add(prefix, L.degree(M[r]));
  }
  for (std::size_t s = 1; s < n1; ++s) {
    Degree mid = f.zero();
    for (std::size_t r = s; r-- > 0;) {
      // mid = alpha_{r+1} + .. + alpha_{s-1}
      const auto& br = L.bracket_basis(M[r], M[s]);
      if (!br.empty()) {
        int sg = ((s & 1) ? -1 : 1) * f.eps(mid, L.degree(M[s]));
        for (const auto& e : br) {
          Monomial t;
          for (std::size_t k = 0; k < n1; ++k) {
            if (k == s) continue;
            t.push_back(k == r ? e.i : M[k]);
          }
          auto c = canonicalize(L, t);
          if (!c) continue;
          T.t2.push_back({static_cast<std::uint32_t>(*Bn.find(c->mono)), Rational(sg * c->sign) * e.v});
        }
      }
      mid = f.add(mid, L.degree(M[r]));
    }
  }
  return T;
}

// Row (M, w) of delta as sparse global indices of C^n.
SparseVec template_row(const RowTemplate& T, const GradedModule& V, const Degree& gamma, std::size_t w) {
  const auto& L = *V.algebra();
  const std::size_t dv = V.dim();
  SparseVec row;
  for (const auto& t : T.t1) {
    int e = L.factor().eps(gamma, L.degree(t.a));
    for (const auto& x : V.action(t.a).row(w))
      row.push_back({static_cast<std::uint32_t>(t.mono * dv + x.i), Rational(e) * t.coef * x.v});
  }
  for (const auto& t : T.t2) row.push_back({static_cast<std::uint32_t>(t.mono * dv + w), t.coef});
  return sparse_normalize(std::move(row));
}

}  // namespace

std::map<Degree, RationalSparseMatrix> coboundary_matrices(const CochainSpace& Cn, const CochainSpace& Cn1) {
  if (Cn1.level() != Cn.level() + 1) throw ShapeError("coboundary: levels must be consecutive");
  const auto& V = *Cn.module();
  const auto& L = *V.algebra();
  const auto& f = L.factor();
  const std::size_t dv = V.dim();
  std::map<Degree, std::vector<SparseVec>> rows;
  for (std::size_t s = 0; s < Cn.sector_count(); ++s)
    rows[Cn.sector_degree(s)].resize(Cn1.dim(Cn.sector_degree(s)));
  const auto& B1 = Cn1.monomials();
  for (std::size_t Mi = 0; Mi < B1.size(); ++Mi) {
    RowTemplate T = make_template(L, Cn.monomials(), B1[Mi]);
    for (std::size_t w = 0; w < dv; ++w) {
      std::size_t gi1 = Mi * dv + w;
      const Degree& gamma = Cn1.degree_of(gi1);
      auto sid = Cn.sector_id(gamma);
      SparseVec grow = template_row(T, V, gamma, w);
      if (!sid) {
        if (!grow.empty()) throw ShapeError("coboundary: row outside every sector");
        continue;
      }
      SparseVec lrow;
      for (auto& e : grow) {
        if (Cn.sector_of(e.i) != *sid) throw ShapeError("coboundary: degree not preserved");
        lrow.push_back({static_cast<std::uint32_t>(Cn.local_index(e.i)), std::move(e.v)});
      }
      rows[gamma][Cn1.local_index(gi1)] = std::move(lrow);
    }
  }
  (void)f;
  std::map<Degree, RationalSparseMatrix> out;
  for (auto& [g, r] : rows) out.emplace(g, RationalSparseMatrix::from_rows(Cn.dim(g), std::move(r)));
  return out;
}

RationalSparseMatrix coboundary_matrix(const CochainSpace& Cn, const CochainSpace& Cn1, const Degree& gamma) {
  if (Cn1.level() != Cn.level() + 1) throw ShapeError("coboundary: levels must be consecutive");
  const auto& V = *Cn.module();
  const auto& L = *V.algebra();
  const std::size_t dv = V.dim();
  auto sid = Cn.sector_id(gamma);
  auto sid1 = Cn1.sector_id(gamma);
  RationalSparseMatrix out(Cn1.dim(gamma), Cn.dim(gamma));
  if (!sid || !sid1) return out;
  const auto& B1 = Cn1.monomials();
  std::size_t last_M = SIZE_MAX;
  RowTemplate T;
  for (auto gi1 : Cn1.sector_elements(*sid1)) {
    std::size_t Mi = gi1 / dv, w = gi1 % dv;
    if (Mi != last_M) {
      T = make_template(L, Cn.monomials(), B1[Mi]);
      last_M = Mi;
    }
    SparseVec lrow;
    for (auto& e : template_row(T, V, gamma, w)) {
      if (Cn.sector_of(e.i) != *sid) throw ShapeError("coboundary: degree not preserved");
      lrow.push_back({static_cast<std::uint32_t>(Cn.local_index(e.i)), std::move(e.v)});
    }
    out.set_row(Cn1.local_index(gi1), std::move(lrow));
  }
  return out;
}

RationalSparseMatrix coboundary_matrix_global(const CochainSpace& Cn, const CochainSpace& Cn1) {
  const auto& V = *Cn.module();
  const auto& L = *V.algebra();
  const std::size_t dv = V.dim();
  const auto& B1 = Cn1.monomials();
  RationalSparseMatrix out(Cn1.dim(), Cn.dim());
  for (std::size_t Mi = 0; Mi < B1.size(); ++Mi) {
    RowTemplate T = make_template(L, Cn.monomials(), B1[Mi]);
    for (std::size_t w = 0; w < dv; ++w) {
      std::size_t gi1 = Mi * dv + w;
      out.set_row(gi1, template_row(T, V, Cn1.degree_of(gi1), w));
    }
  }
  return out;
}

RationalSparseMatrix coboundary_matrix(const ModulePtr& V, std::size_t n, const Degree& gamma) {
  CochainSpace Cn(V, n), Cn1(V, n + 1);
  return coboundary_matrix(Cn, Cn1, gamma);
}

// ---------------------------------------------------------------- cochain operators

namespace {

Monomial without(const Monomial& M, std::size_t r) {
  Monomial t;
  for (std::size_t k = 0; k < M.size(); ++k)
    if (k != r) t.push_back(M[k]);
  return t;
}

// delta of a homogeneous component of degree gamma, by the explicit formula.
Cochain coboundary_component(const Cochain& g, const Degree& gamma) {
  const auto& L = g.algebra();
  const auto& f = L.factor();
  const auto& V = *g.module();
  const int n = g.level();
  Cochain out(g.module(), n + 1);
  if (n < 0) return out;
  ExteriorBasis B1(L, static_cast<std::size_t>(n + 1));
  for (const auto& M : B1.monomials()) {
    Vec val(V.dim());
    Degree prefix = gamma;
    for (std::size_t r = 0; r < M.size(); ++r) {
      Vec x = g.evaluate(without(M, r));
      if (!is_zero(x)) {
        int s = ((r & 1) ? -1 : 1) * f.eps(prefix, L.degree(M[r]));
        axpy(val, Rational(s), V.act(M[r], x));
      }
      prefix = f.add(prefix, L.degree(M[r]));
    }
    for (std::size_t s = 1; s < M.size(); ++s) {
      Degree mid = f.zero();
      for (std::size_t r = s; r-- > 0;) {
        int sg = ((s & 1) ? -1 : 1) * f.eps(mid, L.degree(M[s]));
        for (const auto& e : L.bracket_basis(M[r], M[s])) {
          Monomial t;
          for (std::size_t k = 0; k < M.size(); ++k) {
            if (k == s) continue;
            t.push_back(k == r ? e.i : M[k]);
          }
          axpy(val, Rational(sg) * e.v, g.evaluate(t));
        }
        mid = f.add(mid, L.degree(M[r]));
      }
    }
    out.add(M, val);
  }
  return out;
}

Cochain act_basis(std::size_t a, const Cochain& g, const Degree& gamma) {
  const auto& L = g.algebra();
  const auto& f = L.factor();
  const auto& V = *g.module();
  const int n = g.level();
  Cochain out(g.module(), n);
  if (n < 0) return out;
  ExteriorBasis Bn(L, static_cast<std::size_t>(n));
  for (const auto& m : Bn.monomials()) {
    Vec val = V.act(a, g.evaluate(m));
    Degree prefix = gamma;
    for (std::size_t r = 0; r < m.size(); ++r) {
      int s = -f.eps(L.degree(a), prefix);
      for (const auto& e : L.bracket_basis(a, m[r])) {
        Monomial t = m;
        t[r] = e.i;
        axpy(val, Rational(s) * e.v, g.evaluate(t));
      }
      prefix = f.add(prefix, L.degree(m[r]));
    }
    out.add(m, val);
  }
  return out;
}

}  // namespace

Cochain coboundary(const Cochain& g) {
  Cochain out(g.module(), g.level() + 1);
  for (const auto& [gamma, c] : g.components()) out += coboundary_component(c, gamma);
  return out;
}

Cochain act(const Vec& A, const Cochain& g) {
  const auto& L = g.algebra();
  if (A.size() != L.dim()) throw ShapeError("act: algebra vector has wrong length");
  Cochain out(g.module(), g.level());
  for (const auto& [gamma, c] : g.components())
    for (std::size_t a = 0; a < L.dim(); ++a)
      if (sgn(A[a]) != 0) out += A[a] * act_basis(a, c, gamma);
  return out;
}

Cochain insertion(const Cochain& g, const Vec& A) {
  const auto& L = g.algebra();
  if (A.size() != L.dim()) throw ShapeError("insertion: algebra vector has wrong length");
  if (g.level() <= 0) return Cochain(g.module(), -1);
  Cochain out(g.module(), g.level() - 1);
  ExteriorBasis B(L, static_cast<std::size_t>(g.level() - 1));
  for (const auto& m : B.monomials()) {
    Vec val(g.module()->dim());
    for (std::size_t a = 0; a < L.dim(); ++a) {
      if (sgn(A[a]) == 0) continue;
      Monomial t{static_cast<std::uint32_t>(a)};
      t.insert(t.end(), m.begin(), m.end());
      axpy(val, A[a], g.evaluate(t));
    }
    out.add(m, val);
  }
  return out;
}

Cochain coboundary_inductive(const Cochain& g) {
  const auto& L = g.algebra();
  const auto& f = L.factor();
  Cochain out(g.module(), g.level() + 1);
  if (g.level() < 0) return out;
  ExteriorBasis B1(L, static_cast<std::size_t>(g.level() + 1));
  for (const auto& [gamma, c] : g.components()) {
    std::vector<Cochain> X;
    for (std::size_t a = 0; a < L.dim(); ++a) {
      Vec e = unit_vec(L.dim(), a);
      Cochain x = Rational(f.eps(gamma, L.degree(a))) * act_basis(a, c, gamma);
      x -= coboundary_inductive(insertion(c, e));
      X.push_back(std::move(x));
    }
    for (const auto& M : B1.monomials()) out.add(M, X[M[0]].evaluate(Monomial(M.begin() + 1, M.end())));
  }
  return out;
}

Cochain twice_coboundary_alt(const Cochain& g) {
  const auto& L = g.algebra();
  const auto& f = L.factor();
  const auto& V = *g.module();
  Cochain out(g.module(), g.level() + 1);
  if (g.level() < 0) return out;
  ExteriorBasis B1(L, static_cast<std::size_t>(g.level() + 1));
  for (const auto& [gamma, c] : g.components()) {
    std::vector<Cochain> Ag;
    for (std::size_t a = 0; a < L.dim(); ++a) Ag.push_back(act_basis(a, c, gamma));
    for (const auto& M : B1.monomials()) {
      Vec val(V.dim());
      Degree prefix = gamma;
      for (std::size_t r = 0; r < M.size(); ++r) {
        int s = ((r & 1) ? -1 : 1) * f.eps(prefix, L.degree(M[r]));
        Monomial rest = without(M, r);
        axpy(val, Rational(s), Ag[M[r]].evaluate(rest));
        axpy(val, Rational(s), V.act(M[r], c.evaluate(rest)));
        prefix = f.add(prefix, L.degree(M[r]));
      }
      out.add(M, val);
    }
  }
  return out;
}

// ---------------------------------------------------------------- products and maps

Cochain cup_product(const Cochain& g, const Cochain& h) { return cup_product(g, h, tensor(g.module(), h.module())); }

Cochain cup_product(const Cochain& g, const Cochain& h, const ModulePtr& VW) {
  require_same_algebra(*g.module(), *h.module());
  if (VW->dim() != g.module()->dim() * h.module()->dim()) throw ShapeError("cup: tensor module has wrong dimension");
  if (g.level() < 0 || h.level() < 0) return Cochain(VW, std::max(-1, g.level() + h.level()));
  const auto& L = g.algebra();
  const auto& f = L.factor();
  const std::size_t m = g.level(), n = h.level(), N = m + n;
  Cochain out(VW, static_cast<int>(N));
  ExteriorBasis B(L, N);
  auto gc = g.components();
  auto hc = h.components();
  std::vector<int> mask(N, 0);
  for (const auto& M : B.monomials()) {
    std::vector<Degree> alpha;
    for (auto i : M) alpha.push_back(L.degree(i));
    Vec val(VW->dim());
    // subsets S of size m in increasing order via a 0/1 mask (1 = in S)
    std::fill(mask.begin(), mask.end(), 0);
    std::fill(mask.end() - static_cast<long>(m), mask.end(), 1);
    do {
      std::vector<int> perm;
      Monomial As, Ar;
      Degree dS = f.zero();
      for (std::size_t k = 0; k < N; ++k)
        if (mask[k]) {
          perm.push_back(static_cast<int>(k));
          As.push_back(M[k]);
          dS = f.add(dS, alpha[k]);
        }
      for (std::size_t k = 0; k < N; ++k)
        if (!mask[k]) {
          perm.push_back(static_cast<int>(k));
          Ar.push_back(M[k]);
        }
      int s = permutation_sign(perm) * f.eps_n(perm, alpha);
      for (const auto& [gg, gcomp] : gc) {
        Vec x = gcomp.evaluate(As);
        if (is_zero(x)) continue;
        for (const auto& [hh, hcomp] : hc) {
          Vec y = hcomp.evaluate(Ar);
          if (is_zero(y)) continue;
          axpy(val, Rational(s * f.eps(hh, dS)), kron(x, y));
        }
      }
    } while (std::next_permutation(mask.begin(), mask.end()));
    out.add(M, val);
  }
  return out;
}

Cochain push_forward(const RationalSparseMatrix& fmap, const Degree& phi, const Cochain& g, const ModulePtr& W) {
  Report r = check_invariant_map(*g.module(), *W, fmap, phi);
  if (!r.ok) throw ValidationError("push_forward: map is not invariant:\n" + r.summary());
  Cochain out(W, g.level());
  for (const auto& [m, v] : g.values()) out.add(m, fmap.apply(v));
  return out;
}

Cochain pull_back(const std::vector<Vec>& omega, const Cochain& g, const ModulePtr& Vp) {
  const auto& Lp = *Vp->algebra();
  Report r = check_homomorphism(Lp, g.algebra(), omega);
  if (!r.ok) throw ValidationError("pull_back: not a homomorphism:\n" + r.summary());
  if (Vp->dim() != g.module()->dim()) throw ShapeError("pull_back: module mismatch");
  Cochain out(Vp, g.level());
  if (g.level() < 0) return out;
  ExteriorBasis B(Lp, static_cast<std::size_t>(g.level()));
  for (const auto& m : B.monomials()) {
    std::vector<Vec> args;
    for (auto i : m) args.push_back(omega[i]);
    out.add(m, g.evaluate_vectors(args));
  }
  return out;
}

// ---------------------------------------------------------------- cocycles

bool is_cocycle(const Cochain& g) {
  if (g.level() < 0) return true;
  const std::size_t n = static_cast<std::size_t>(g.level());
  CochainSpace Cn(g.module(), n), Cn1(g.module(), n + 1);
  for (const auto& [gamma, c] : g.components()) {
    auto D = coboundary_matrix(Cn, Cn1, gamma);
    if (!D.apply(Cn.coords(c, gamma)).empty()) return false;
  }
  return true;
}

std::optional<Cochain> coboundary_witness(const Cochain& g) {
  if (g.level() <= 0) {
    if (g.is_zero()) return Cochain(g.module(), g.level() - 1 < -1 ? -1 : g.level() - 1);
    return std::nullopt;
  }
  const std::size_t n = static_cast<std::size_t>(g.level());
  CochainSpace Cm(g.module(), n - 1), Cn(g.module(), n);
  Cochain b(g.module(), static_cast<int>(n - 1));
  for (const auto& [gamma, c] : g.components()) {
    auto D = coboundary_matrix(Cm, Cn, gamma);
    auto x = image_membership(D, Cn.coords(c, gamma));
    if (!x) return std::nullopt;
    b += Cm.cochain(gamma, *x);
  }
  return b;
}

std::vector<Cochain> invariant_cochains(const std::vector<Vec>& sub, const ModulePtr& V, std::size_t n) {
  CochainSpace Cn(V, n);
  const std::size_t N = Cn.dim();
  std::vector<RationalSparseMatrix> blocks;
  for (const auto& A : sub) {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    for (std::size_t j = 0; j < N; ++j)
      for (const auto& e : Cn.global_coords(act(A, Cn.basis_cochain(j)))) t.emplace_back(e.i, j, e.v);
    blocks.push_back(RationalSparseMatrix::from_triplets(N, N, t));
  }
  std::vector<Cochain> out;
  if (blocks.empty()) {
    for (std::size_t j = 0; j < N; ++j) out.push_back(Cn.basis_cochain(j));
    return out;
  }
  for (const auto& k : kernel_basis(vstack(blocks))) out.push_back(Cn.global_cochain(k));
  return out;
}

namespace {

void check_adjoint_form(const InvariantForm& phi, const EpsLieAlgebra& L) {
  if (phi.M->dim() != L.dim() || !same_algebra(*phi.M->algebra(), L))
    throw ShapeError("form must live on the adjoint module of the algebra");
  auto ad = adjoint(phi.M->algebra());
  for (std::size_t a = 0; a < L.dim(); ++a)
    if (!(ad->action(a) == phi.M->action(a))) throw ShapeError("form must live on the adjoint module");
}

}  // namespace

bool is_invariant_form(const InvariantForm& phi) {
  const auto& L = *phi.M->algebra();
  const auto& f = L.factor();
  const std::size_t r = phi.r, d = phi.M->dim();
  // sum_k eps(alpha, eta + xi_1 + .. + xi_{k-1}) phi(.., A x_k, ..) = 0
  std::vector<Monomial> tuples;
  Monomial t(r);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == r) {
      tuples.push_back(t);
      return;
    }
    for (std::uint32_t i = 0; i < d; ++i) {
      t[k] = i;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (const auto& x : tuples) {
      Rational s = 0;
      Degree prefix = phi.eta;
      for (std::size_t k = 0; k < r; ++k) {
        int e = f.eps(L.degree(a), prefix);
        Vec col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = phi.M->action(a).at(i, x[k]);
        for (std::size_t i = 0; i < d; ++i) {
          if (sgn(col[i]) == 0) continue;
          Monomial y = x;
          y[k] = static_cast<std::uint32_t>(i);
          s += Rational(e) * col[i] * phi(y);
        }
        prefix = f.add(prefix, phi.M->degree(x[k]));
      }
      if (sgn(s) != 0) return false;
    }
  return true;
}

namespace {

// sum over perms of positions `pos` of sgn * eps_n * F(permuted tuple)
template <class F>
Rational skew_sum(const EpsLieAlgebra& L, const Monomial& A, const std::vector<std::size_t>& pos, F&& fn) {
  const std::size_t k = pos.size();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Degree> alpha;
  for (auto p : pos) alpha.push_back(L.degree(A[p]));
  Rational total = 0;
  do {
    int s = permutation_sign(perm) * L.factor().eps_n(perm, alpha);
    Monomial B = A;
    for (std::size_t i = 0; i < k; ++i) B[pos[i]] = A[pos[perm[i]]];
    total += Rational(s) * fn(B);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

Cochain invariant_form_to_cocycle(const InvariantForm& phi, FormMode mode, const ModulePtr& K) {
  const auto& L = *phi.M->algebra();
  check_adjoint_form(phi, L);
  if (phi.r < 2) throw ShapeError("invariant_form_to_cocycle: arity m+1 >= 2 required");
  if (!is_invariant_form(phi)) throw ValidationError("invariant_form_to_cocycle: form is not invariant");
  if (K->dim() != 1) throw ShapeError("invariant_form_to_cocycle: coefficients must be the trivial module");
  const std::size_t m = phi.r - 1, N = 2 * m + 1;
  const std::size_t d = L.dim();
  auto psi = [&](const Monomial& A) {
    std::vector<Vec> args;
    for (std::size_t k = 0; k < m; ++k) args.push_back(L.bracket(unit_vec(d, A[2 * k]), unit_vec(d, A[2 * k + 1])));
    args.push_back(unit_vec(d, A[2 * m]));
    return phi.evaluate(args);
  };
  if (mode == FormMode::symmetric) {
    // phi must be eps-symmetric
    for (const auto& [t, v] : phi.values)
      for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        Monomial u = t;
        std::swap(u[k], u[k + 1]);
        if (phi(u) != Rational(L.factor().eps(phi.M->degree(t[k]), phi.M->degree(t[k + 1]))) * v)
          throw ValidationError("invariant_form_to_cocycle: form is not eps-symmetric");
      }
  }
  Cochain out(K, static_cast<int>(N));
  ExteriorBasis B(L, N);
  std::vector<std::size_t> pos;
  if (mode == FormMode::general)
    for (std::size_t k = 0; k < N; ++k) pos.push_back(k);
  else
    for (std::size_t k = 1; k + 1 < N; ++k) pos.push_back(k);
  for (const auto& M : B.monomials()) {
    Rational v = skew_sum(L, M, pos, psi);
    out.add(M, Vec{v});
  }
  return out;
}

Cochain bracket_pairs_form(const InvariantForm& phi, const ModulePtr& K) {
  const auto& L = *phi.M->algebra();
  check_adjoint_form(phi, L);
  const std::size_t N = 2 * phi.r, d = L.dim();
  auto fn = [&](const Monomial& A) {
    std::vector<Vec> args;
    for (std::size_t k = 0; k < phi.r; ++k) args.push_back(L.bracket(unit_vec(d, A[2 * k]), unit_vec(d, A[2 * k + 1])));
    return phi.evaluate(args);
  };
  Cochain out(K, static_cast<int>(N));
  ExteriorBasis B(L, N);
  std::vector<std::size_t> pos(N);
  std::iota(pos.begin(), pos.end(), 0);
  for (const auto& M : B.monomials()) out.add(M, Vec{skew_sum(L, M, pos, fn)});
  return out;
}

// ---------------------------------------------------------------- cohomology

std::size_t LevelCohomology::dim_H() const {
  std::size_t s = 0;
  for (const auto& x : sectors) s += x.dim_H;
  return s;
}

std::size_t LevelCohomology::dim_C() const {
  std::size_t s = 0;
  for (const auto& x : sectors) s += x.dim_C;
  return s;
}

CohomologyResult cohomology(const ModulePtr& V, std::size_t n_max, const CohomologyOptions& opt) {
  std::vector<std::unique_ptr<CochainSpace>> C;
  const std::size_t lo = opt.n_min > 0 ? opt.n_min - 1 : 0;
  C.resize(n_max + 2);
  for (std::size_t n = lo; n <= n_max + 1; ++n) C[n] = std::make_unique<CochainSpace>(V, n);
  CohomologyResult res;
  for (std::size_t n = opt.n_min; n <= n_max; ++n) {
    LevelCohomology lev;
    lev.n = n;
    std::vector<Degree> degs = opt.sector ? std::vector<Degree>{*opt.sector} : C[n]->sector_degrees();
    for (const auto& gamma : degs) {
      SectorCohomology sc;
      sc.gamma = gamma;
      sc.dim_C = C[n]->dim(gamma);
      if (sc.dim_C == 0) {
        if (!opt.sector) continue;
        lev.sectors.push_back(sc);
        continue;
      }
      auto D = coboundary_matrix(*C[n], *C[n + 1], gamma);
      Echelon ker_e(D.cols());
      for (std::size_t i = 0; i < D.rows() && ker_e.rank() < D.cols(); ++i) ker_e.insert(D.row(i));
      sc.dim_Z = sc.dim_C - ker_e.rank();
      RationalSparseMatrix Dm;
      if (n > 0) {
        Dm = coboundary_matrix(*C[n - 1], *C[n], gamma);
        sc.dim_B = rank(Dm);
      }
      sc.dim_H = sc.dim_Z - sc.dim_B;
      if (opt.representatives && sc.dim_H > 0) {
        Echelon img(sc.dim_C);
        if (n > 0) {
          auto DmT = transpose(Dm);
          for (std::size_t i = 0; i < DmT.rows(); ++i) img.insert(DmT.row(i));
        }
        for (const auto& k : ker_e.kernel_basis()) {
          if (!img.insert(k)) continue;
          if (!D.apply(k).empty()) throw ValidationError("representative is not a cocycle");
          if (n > 0 && image_membership(Dm, k)) throw ValidationError("representative is a coboundary");
          sc.representatives.push_back(C[n]->cochain(gamma, k));
        }
        if (sc.representatives.size() != sc.dim_H) throw ValidationError("representative count mismatch");
      }
      lev.sectors.push_back(std::move(sc));
    }
    res.levels.resize(n + 1);
    res.levels[n] = std::move(lev);
  }
  return res;
}

}  // namespace epscoh
