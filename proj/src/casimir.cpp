#include "epscoh/casimir.hpp"

#include <unordered_map>

#include "epscoh/errors.hpp"

namespace epscoh {

namespace {

// All r-tuples of basis indices of M grouped by the degree -(sum of degrees).
std::map<Degree, std::vector<Monomial>> tuples_by_eta(const GradedModule& M, std::size_t r) {
  const auto& f = M.algebra()->factor();
  std::map<Degree, std::vector<Monomial>> out;
  Monomial t(r);
  auto rec = [&](auto&& self, std::size_t k, const Degree& sum) -> void {
    if (k == r) {
      out[f.neg(sum)].push_back(t);
      return;
    }
    for (std::uint32_t i = 0; i < M.dim(); ++i) {
      t[k] = i;
      self(self, k + 1, f.add(sum, M.degree(i)));
    }
  };
  rec(rec, 0, f.zero());
  return out;
}

}  // namespace

std::vector<InvariantForm> invariant_multilinear_forms(const ModulePtr& Mp, std::size_t r, FormSymmetry sym) {
  if (r == 0) throw ShapeError("invariant forms: r >= 1 required");
  const auto& M = *Mp;
  const auto& L = *M.algebra();
  const auto& f = L.factor();
  std::vector<InvariantForm> out;
  const auto all = tuples_by_eta(M, r);
  for (const auto& [eta, tuples] : all) {
    std::map<Monomial, std::uint32_t> index;
    for (std::size_t k = 0; k < tuples.size(); ++k) index[tuples[k]] = static_cast<std::uint32_t>(k);
    std::vector<SparseVec> rows;
    // invariance: for A = e_a and each tuple y whose image tuples lie in this sector
    for (std::size_t a = 0; a < L.dim(); ++a) {
      const Degree target = f.add(eta, L.degree(a));  // images of y lie in the eta sector
      auto it = all.find(target);
      if (it == all.end()) continue;
      for (const auto& y : it->second) {
        SparseVec row;
        Degree prefix = eta;
        for (std::size_t k = 0; k < r; ++k) {
          int e = f.eps(L.degree(a), prefix);
          for (std::size_t i = 0; i < M.dim(); ++i) {
            Rational c = M.action(a).at(i, y[k]);
            if (sgn(c) == 0) continue;
            Monomial z = y;
            z[k] = static_cast<std::uint32_t>(i);
            row.push_back({index.at(z), Rational(e) * c});
          }
          prefix = f.add(prefix, M.degree(y[k]));
        }
        row = sparse_normalize(std::move(row));
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    if (sym != FormSymmetry::none) {
      const int s = sym == FormSymmetry::eps_symmetric ? 1 : -1;
      for (const auto& t : tuples)
        for (std::size_t k = 0; k + 1 < r; ++k) {
          Monomial u = t;
          std::swap(u[k], u[k + 1]);
          // phi(t) - s eps(x_k, x_{k+1}) phi(u) = 0
          SparseVec row{{index.at(t), Rational(1)}};
          row.push_back({index.at(u), Rational(-s * f.eps(M.degree(t[k]), M.degree(t[k + 1])))});
          row = sparse_normalize(std::move(row));
          if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    auto A = RationalSparseMatrix::from_rows(tuples.size(), std::move(rows));
    for (const auto& k : kernel_basis(A)) {
      InvariantForm phi{Mp, r, eta, {}};
      for (const auto& e : k) phi.values[tuples[e.i]] = e.v;
      out.push_back(std::move(phi));
    }
  }
  return out;
}

std::vector<InvariantForm> quadratic_casimir_forms(const AlgebraPtr& L) {
  return invariant_multilinear_forms(coadjoint(L), 2, FormSymmetry::eps_symmetric);
}

CasimirOperator casimir_operator(const InvariantForm& phi, const ModulePtr& V) {
  const auto& L = *V->algebra();
  if (!same_algebra(*phi.M->algebra(), L) || phi.M->dim() != L.dim())
    throw ShapeError("casimir: form must live on the coadjoint module of the algebra");
  auto co = coadjoint(V->algebra());
  for (std::size_t a = 0; a < L.dim(); ++a)
    if (!(co->action(a) == phi.M->action(a))) throw ShapeError("casimir: form must live on the coadjoint module");
  if (!is_invariant_form(phi)) throw ValidationError("casimir: form is not invariant");
  const std::size_t n = V->dim();
  CasimirOperator C{phi, V, phi.eta, RationalSparseMatrix(n, n), std::vector<RationalSparseMatrix>(L.dim(), RationalSparseMatrix(n, n))};
  for (const auto& [t, c] : phi.values) {
    // rho(E_ir) ... rho(E_i2)
    RationalSparseMatrix P = RationalSparseMatrix::identity(n);
    for (std::size_t k = 1; k < t.size(); ++k) P = multiply(V->action(t[k]), P);
    C.Ci[t[0]] = add(C.Ci[t[0]], scale(c, P));
    C.CV = add(C.CV, scale(c, multiply(P, V->action(t[0]))));
  }
  return C;
}

Report check_graded_central(const CasimirOperator& C) {
  Report rep;
  const auto& L = *C.V->algebra();
  RationalSparseMatrix sum(C.V->dim(), C.V->dim());
  for (std::size_t a = 0; a < L.dim(); ++a) {
    auto lhs = multiply(C.CV, C.V->action(a));
    auto rhs = scale(L.factor().eps(C.eta, L.degree(a)), multiply(C.V->action(a), C.CV));
    if (!(lhs == rhs)) rep.fail("Casimir operator does not commute with " + L.label(a));
    sum = add(sum, multiply(C.Ci[a], C.V->action(a)));
  }
  if (!(sum == C.CV)) rep.fail("C_V differs from sum_i C_i E_i");
  return rep;
}

bool is_invertible(const CasimirOperator& C) { return rank(C.CV) == C.V->dim(); }

std::optional<CasimirOperator> prop22_applies(const ModulePtr& V, const std::vector<InvariantForm>& candidates) {
  for (const auto& phi : candidates) {
    auto C = casimir_operator(phi, V);
    if (is_invertible(C)) return C;
  }
  return std::nullopt;
}

RationalSparseMatrix homotopy_matrix(const CasimirOperator& C, std::size_t n) {
  if (n == 0) throw ShapeError("homotopy: n >= 1 required");
  const auto& V = *C.V;
  const auto& L = *V.algebra();
  const auto& f = L.factor();
  const std::size_t dv = V.dim();
  CochainSpace Cn(C.V, n), Cm(C.V, n - 1);
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> trip;
  for (std::size_t mi = 0; mi < Cm.monomials().size(); ++mi) {
    const auto& Mp = Cm.monomials()[mi];
    for (std::uint32_t i = 0; i < L.dim(); ++i) {
      Monomial t{i};
      t.insert(t.end(), Mp.begin(), Mp.end());
      auto c = canonicalize(L, t);
      if (!c) continue;
      std::size_t m = *Cn.monomials().find(c->mono);
      for (std::size_t v = 0; v < dv; ++v) {
        std::size_t col = m * dv + v;
        int e = c->sign * f.eps(L.degree(i), Cn.degree_of(col));
        // column v of C_i
        for (std::size_t w = 0; w < dv; ++w) {
          Rational x = C.Ci[i].at(w, v);
          if (sgn(x) != 0) trip.emplace_back(mi * dv + w, col, Rational(e) * x);
        }
      }
    }
  }
  return RationalSparseMatrix::from_triplets(Cm.dim(), Cn.dim(), trip);
}

bool verify_homotopy_identity(const CasimirOperator& C, std::size_t n) {
  if (n == 0) throw ShapeError("homotopy: n >= 1 required");
  CochainSpace Cm(C.V, n - 1), Cn(C.V, n), Cp(C.V, n + 1);
  auto dn = homotopy_matrix(C, n);
  auto dn1 = homotopy_matrix(C, n + 1);
  auto lhs = add(multiply(dn1, coboundary_matrix_global(Cn, Cp)), multiply(coboundary_matrix_global(Cm, Cn), dn));
  std::vector<RationalSparseMatrix> blocks(Cn.monomials().size(), C.CV);
  return lhs == block_diag(blocks);
}

}  // namespace epscoh
