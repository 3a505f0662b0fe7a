// Acceptance run: one line per criterion with verdict, tolerance and runtime.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "epscoh/casimir.hpp"
#include "epscoh/catalog.hpp"
#include "epscoh/extensions.hpp"
#include "epscoh/glmn.hpp"

using namespace epscoh;
using namespace epscoh::catalog;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " FAILED[" << what << "]";
    }
  }
};

ModulePtr K(const AlgebraPtr& L) { return trivial(L, L->factor().zero()); }

// V(q) for q in N/2: W(2q), with W(0) the trivial module.
ModulePtr vq(const AlgebraPtr& L, const Rational& q) {
  Rational twice = 2 * q;
  auto k = static_cast<std::size_t>(twice.get_num().get_ui());
  return k == 0 ? K(L) : w_module(L, k);
}

Cochain random_cochain(const CochainSpace& C, std::mt19937& rng) {
  std::vector<Degree> nonempty;
  for (const auto& g : C.sector_degrees())
    if (C.dim(g)) nonempty.push_back(g);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    const auto& g = nonempty[std::uniform_int_distribution<std::size_t>(0, nonempty.size() - 1)(rng)];
    Vec x(C.dim(g));
    for (auto& v : x)
      if (rng() % 3 == 0) v = coef(rng);
    if (!is_zero(x)) return C.cochain(g, sparse_from_dense(x));
  }
}

// ---------------------------------------------------------------- criteria

void c1(Outcome& o) {
  auto L = sl2().algebra;
  auto r = cohomology(K(L), 3);
  o.require(r.dim(0) == 1 && r.dim(1) == 0 && r.dim(2) == 0, "H0..H2 = 1,0,0");
  auto forms = invariant_multilinear_forms(adjoint(L), 3, FormSymmetry::eps_skew).size();
  o.require(r.dim(3) == 1 && forms == 1, "H3 = 1 = #invariant skew 3-forms");
  o.note << " dims=(" << r.dim(0) << "," << r.dim(1) << "," << r.dim(2) << "," << r.dim(3) << ") forms3=" << forms;
}

void c2(Outcome& o) {
  auto L = sl2().algebra;
  auto r = cohomology(adjoint(L), 3);
  for (std::size_t n = 0; n <= 3; ++n) o.require(r.dim(n) == 0, "H^" + std::to_string(n) + " = 0");
  auto w = prop22_applies(adjoint(L), quadratic_casimir_forms(L));
  o.require(w.has_value(), "quadratic Casimir invertible");
  o.note << " dims=(" << r.dim(0) << "," << r.dim(1) << "," << r.dim(2) << "," << r.dim(3) << ") witness=" << (w ? "yes" : "no");
}

void c3(Outcome& o) {
  auto L = osp12().algebra;
  auto r = cohomology(K(L), 4);
  o.note << " H/forms:";
  for (std::size_t n = 1; n <= 4; ++n) {
    auto f = invariant_multilinear_forms(adjoint(L), n, FormSymmetry::eps_skew).size();
    o.require(r.dim(n) == f, "n=" + std::to_string(n));
    o.note << " " << r.dim(n) << "/" << f;
  }
}

void c4(Outcome& o) {
  auto L = sl12().algebra;
  o.note << " H1:";
  for (const char* q : {"0", "1/2", "1", "3/2"}) {
    auto d = cohomology(vq(L, parse_rational(q)), 1).dim(1);
    o.require(d == (std::string(q) == "1/2" ? 1u : 0u), std::string("q=") + q);
    o.note << " q=" << q << ":" << d;
  }
  auto V = v_half(L);
  CohomologyOptions opt;
  opt.representatives = true;
  opt.n_min = 1;
  auto r = cohomology(V, 1, opt);
  std::vector<Cochain> reps;
  for (const auto& s : r.levels[1].sectors)
    for (const auto& g : s.representatives) reps.push_back(g);
  o.require(reps.size() == 1, "one representative");
  if (reps.size() == 1) {
    // g - c g0 for the c matching the value on V+, must be a coboundary
    auto g0 = cocycle_g0(V);
    auto vp = static_cast<std::uint32_t>(L->index_of("V+"));
    auto ep = V->index_of("e+");
    Rational c = reps[0].evaluate({vp})[ep] / g0.evaluate({vp})[ep];
    auto diff = reps[0] - c * g0;
    auto w = coboundary_witness(diff);
    o.require(w && coboundary(*w) == diff, "representative cohomologous to g0");
    o.note << " rep ~ " << c << "*g0";
  }
}

void c5(Outcome& o) {
  auto L = sl12().algebra;
  o.note << " H2:";
  for (const char* q : {"0", "1/2", "1", "3/2"}) {
    auto d = cohomology(vq(L, parse_rational(q)), 2).dim(2);
    o.require(d == (std::string(q) == "1" ? 1u : 0u), std::string("q=") + q);
    o.note << " q=" << q << ":" << d;
  }
  ExteriorBasis B(*L, 2);
  auto formula = super_exterior_dimension(4, 4, 2);
  o.require(B.size() == 32 && formula == 32, "dim Lambda^2 = 32");
  o.note << " dimL2=" << B.size() << " formula=" << formula;
}

void c6(Outcome& o) {
  auto L = sl12().algebra;
  auto V = v_half(L);
  auto g0 = cocycle_g0(V);
  Cochain p = g0;
  ModulePtr T = V;
  for (std::size_t n = 2; n <= 3; ++n) {
    T = tensor(T, V);
    p = cup_product(p, g0, T);
    auto Wn = skew_power(V, n);
    auto f = restrict_values(p, Wn);
    bool cyc = is_cocycle(f);
    bool nonb = !f.is_zero() && !coboundary_witness(f).has_value();
    o.require(cyc && nonb, "g0^" + std::to_string(n) + " non-coboundary cocycle in W(n)");
    auto d = cohomology(Wn.module, n, {.n_min = n}).dim(n);
    o.require(d >= 1, "dim H^n(V(n/2)) >= 1");
    o.note << " n=" << n << ": cocycle=" << (cyc ? "yes" : "no") << " coboundary=" << (nonb ? "no" : "yes") << " dimH=" << d;
  }
}

void c7(Outcome& o) {
  auto L = sl12().algebra;
  auto w = prop22_applies(kac_half(L, 0), quadratic_casimir_forms(L));
  o.require(w.has_value(), "typical V(0,1/2) witness");
  if (w) {
    for (std::size_t n = 1; n <= 2; ++n) {
      bool h = verify_homotopy_identity(*w, n);
      o.require(h, "sl(1|2) n=" + std::to_string(n));
      o.note << " sl12 n=" << n << ":" << (h ? "holds" : "fails");
    }
  }
  auto S = sl2().algebra;
  auto ws = prop22_applies(adjoint(S), quadratic_casimir_forms(S));
  bool h = ws && verify_homotopy_identity(*ws, 1);
  o.require(h, "sl(2) adjoint n=1");
  o.note << " sl2 n=1:" << (h ? "holds" : "fails");
}

void c8(Outcome& o) {
  auto L = sl12().algebra;
  auto f = v8_family(L);
  auto h = [&](const ModulePtr& M, std::size_t n) { return cohomology(M, n, {.n_min = n}).dim(n); };
  std::size_t a = h(f.v4.module, 1), b = h(f.v4bar.module, 1), c = h(f.v4.module, 2), d = h(f.v4bar.module, 2),
              e = h(f.v7.module, 1), g = h(f.v8, 1);
  o.require(a == 1 && b == 1, "H1(V4) = H1(V4bar) = 1");
  o.require(c == 0 && d == 0, "H2(V4) = H2(V4bar) = 0");
  o.require(e == 2, "H1(V7) = 2");
  o.require(g == 1, "H1(V8) = 1");
  Cochain t(f.v8, 0);
  t.set({}, unit_vec(8, f.t));
  bool sum = cocycle_v8_g(f) + cocycle_v8_gbar(f) == coboundary(t);
  o.require(sum, "g + gbar = delta t");
  o.note << " H1(V4)=" << a << " H1(V4bar)=" << b << " H2(V4)=" << c << " H2(V4bar)=" << d << " H1(V7)=" << e
         << " H1(V8)=" << g << " g+gbar=dt:" << (sum ? "yes" : "no");
}

void c9(Outcome& o) {
  auto P2 = psl_nn(2).algebra();
  auto h2 = [&](const AlgebraPtr& L) { return cohomology(K(L), 2, {.n_min = 2}).dim(2); };
  auto a = h2(P2);
  o.require(a == 3, "dim H2(psl(2|2)) = 3");
  auto t0 = std::chrono::steady_clock::now();
  auto b = h2(psl_nn(3).algebra());
  double slow = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(b == 1, "dim H2(psl(3|3)) = 1");
  o.require(slow < 1800, "psl(3|3) within 30 min");
  auto h3 = [&](const AlgebraPtr& L) { return cohomology(K(L), 3, {.n_min = 3}).dim(3); };
  auto c = h3(P2), d = h3(sl(2, 2).algebra);
  o.require(c > 0 && d > 0, "H3 nonzero for psl(2|2), sl(2|2)");
  auto cov = universal_covering(P2);
  o.require(cov.perfect && is_perfect(*cov.cover) && cov.center.size() == 3 && cov.cover->dim() == 17,
            "covering perfect, center 3, dim 17");
  bool pair = h2_pairing_check(sl2().algebra) && h2_pairing_check(sl12().algebra) && h2_pairing_check(P2);
  o.require(pair, "h2 pairing");
  o.note << " H2(psl22)=" << a << " H2(psl33)=" << b << " (" << slow << " s) H3(psl22)=" << c << " H3(sl22)=" << d
         << " cover dim=" << cov.cover->dim() << " center=" << cov.center.size() << " pairing=" << (pair ? "yes" : "no");
}

void c10(Outcome& o) {
  using namespace glmn;
  std::size_t scanned = 0, vanishing = 0;
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    auto fam = family_in_box(m, n, -4, 4);
    std::set<std::vector<Rational>> famset;
    for (const auto& w : fam) famset.insert(w.L);
    std::size_t hits = 0;
    for (const auto& w : dominant_weights_in_box(m, n, -4, 4)) {
      ++scanned;
      bool v = all_casimirs_vanish(w);
      bool q = true;
      for (unsigned s = 1; s <= m + n + 2; ++s) q = q && sgn(q_s(w, s)) == 0;
      o.require(v == q, "multiset vs Q_s");
      o.require(v == (famset.count(w.L) == 1), "vanishing set = families");
      hits += v;
    }
    o.require(hits == fam.size(), "family members all in the scan");
    for (const auto& w : fam) {
      Rational sum = std::accumulate(w.L.begin(), w.L.end(), Rational(0));
      o.require(sgn(sum) == 0, "sum L_i = 0");
      o.require(matched_pairs(w) == std::min(m, n), "min(m,n) matched pairs");
    }
    vanishing += hits;
  }
  o.note << " scanned=" << scanned << " vanishing=" << vanishing;
}

std::vector<std::pair<std::string, std::string>> catalog_pairs() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const char* a : {"sl2", "sl3", "osp12", "sl12", "sl12z", "sl12z2", "gl11", "sl22", "psl22", "sl33", "psl33"})
    for (const char* m : {"trivial", "adjoint", "coadjoint"}) out.emplace_back(a, m);
  for (const char* a : {"sl12", "sl12z", "sl12z2"})
    for (const char* m : {"v_half", "w:1", "w:2", "w:3", "kac:0", "kac:1/2", "kac:-1/2", "v8", "v7", "v4", "v4bar", "v1", "ts2"})
      out.emplace_back(a, m);
  return out;
}

void c11(Outcome& o) {
  std::mt19937 rng(20260101);
  // delta o delta on every sector, cochain levels 0..4
  std::size_t pairs = 0, sectors = 0;
  for (const auto& [a, m] : catalog_pairs()) {
    auto V = module_by_name(algebra_by_name(a), m);
    std::vector<CochainSpace> C;
    for (std::size_t n = 0; n <= 4; ++n) C.emplace_back(V, n);
    for (std::size_t n = 0; n + 2 <= 4; ++n)
      for (const auto& g : C[n].sector_degrees()) {
        auto D0 = coboundary_matrix(C[n], C[n + 1], g);
        auto D1 = coboundary_matrix(C[n + 1], C[n + 2], g);
        o.require(multiply(D1, D0).is_zero(), "delta^2 = 0 on " + a + "/" + m);
        ++sectors;
      }
    ++pairs;
  }
  o.note << " d^2: " << pairs << " pairs, " << sectors << " sectors;";

  // Leibniz and associativity on 100 random homogeneous triples
  const std::vector<std::pair<const char*, const char*>> mods{
      {"sl12", "v_half"}, {"sl12", "kac:0"}, {"osp12", "adjoint"}, {"sl12z", "v_half"}, {"gl11", "adjoint"}};
  for (int t = 0; t < 100; ++t) {
    const auto& [an, mn] = mods[t % mods.size()];
    auto L = algebra_by_name(an);
    auto U = module_by_name(L, mn);
    auto V = module_by_name(L, t % 2 ? "trivial" : mn);
    auto W = module_by_name(L, "trivial");
    std::size_t l = rng() % 3, mm = rng() % 2, n = rng() % 2;
    auto f = random_cochain(CochainSpace(U, l), rng);
    auto g = random_cochain(CochainSpace(V, mm), rng);
    auto h = random_cochain(CochainSpace(W, n), rng);
    auto UV = tensor(U, V), VW = tensor(V, W);
    auto lhs = coboundary(cup_product(f, g, UV));
    auto rhs = cup_product(coboundary(f), g, UV) + Rational(l % 2 ? -1 : 1) * cup_product(f, coboundary(g), UV);
    o.require(lhs == rhs, "Leibniz");
    auto x = cup_product(cup_product(f, g, UV), h, tensor(UV, W));
    auto y = cup_product(f, cup_product(g, h, VW), tensor(U, VW));
    o.require(x.values() == y.values(), "associativity");
  }
  o.note << " cup: 100 triples;";

  // eps_n multiplicativity, exhaustive for n <= 4 over Z2
  auto f = CommutationFactor::super_z2();
  std::size_t checks = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> perms;
    auto p = id;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Degree> g;
      for (std::size_t i = 0; i < n; ++i) g.push_back({static_cast<std::int64_t>((mask >> i) & 1)});
      for (const auto& pi : perms) {
        std::vector<Degree> gpi;
        for (std::size_t i = 0; i < n; ++i) gpi.push_back(g[pi[i]]);
        for (const auto& tau : perms) {
          std::vector<int> pt(n);
          for (std::size_t i = 0; i < n; ++i) pt[i] = pi[tau[i]];
          o.require(f.eps_n(pt, g) == f.eps_n(pi, g) * f.eps_n(tau, gpi), "eps_n multiplicativity");
          ++checks;
        }
      }
    }
  }
  o.note << " eps_n: " << checks << " identities;";

  // act / delta commutation on 100 samples
  auto pairs11 = catalog_pairs();
  std::vector<ModulePtr> small;
  for (const auto& [a, m] : pairs11)
    if (a.rfind("sl12", 0) == 0 || a == "sl2" || a == "osp12" || a == "gl11") small.push_back(module_by_name(algebra_by_name(a), m));
  for (int t = 0; t < 100; ++t) {
    const auto& V = small[rng() % small.size()];
    const auto& L = *V->algebra();
    auto g = random_cochain(CochainSpace(V, rng() % 3), rng);
    Vec A = unit_vec(L.dim(), rng() % L.dim());
    o.require(act(A, coboundary(g)) == coboundary(act(A, g)), "act/delta");
  }
  o.note << " act/delta: 100;";

  // A.z is a coboundary for 50 random cocycles z = sum c_i rep_i + delta h
  struct Src {
    ModulePtr V;
    std::size_t n;
    std::vector<Cochain> reps;
  };
  std::vector<Src> srcs;
  auto L12 = sl12().algebra;
  for (auto [V, n] : std::vector<std::pair<ModulePtr, std::size_t>>{
           {v_half(L12), 1}, {w_module(L12, 2), 2}, {v8_family(L12).v8, 1}, {K(psl_nn(2).algebra()), 2}}) {
    CohomologyOptions opt;
    opt.representatives = true;
    opt.n_min = n;
    auto r = cohomology(V, n, opt);
    Src s{V, n, {}};
    for (const auto& sec : r.levels[n].sectors)
      for (const auto& g : sec.representatives) s.reps.push_back(g);
    srcs.push_back(s);
  }
  for (int t = 0; t < 50; ++t) {
    const auto& s = srcs[t % srcs.size()];
    // stay homogeneous: one representative plus a coboundary of the same degree
    const auto& rep = s.reps[rng() % s.reps.size()];
    auto gamma = *rep.degree();
    CochainSpace Cm(s.V, s.n - 1);
    Cochain z = Rational(static_cast<long>(rng() % 5) + 1) * rep;
    if (Cm.sector_id(gamma) && Cm.dim(gamma)) {
      Vec x(Cm.dim(gamma));
      for (auto& v : x) v = static_cast<long>(rng() % 7) - 3;
      z = z + coboundary(Cm.cochain(gamma, sparse_from_dense(x)));
    }
    o.require(is_cocycle(z), "sample is a cocycle");
    const auto& L = *s.V->algebra();
    Vec A = unit_vec(L.dim(), rng() % L.dim());
    auto Az = act(A, z);
    auto w = coboundary_witness(Az);
    o.require(w && coboundary(*w) == Az, "A.z is a coboundary");
  }
  o.note << " cocycle action: 50.";
}

struct Criterion {
  int id;
  const char* title;
  const char* tolerance;
  double limit_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "sl(2) trivial coefficients", "exact", 5, c1},
      {2, "sl(2) adjoint, Casimir witness", "exact", 5, c2},
      {3, "osp(1|2) complex vs invariant forms", "exact", 30, c3},
      {4, "sl(1|2) H^1(V(q))", "exact", 60, c4},
      {5, "sl(1|2) H^2(V(q)), dim Lambda^2", "exact", 300, c5},
      {6, "g0 cup powers into W(n)", "exact", 300, c6},
      {7, "Casimir homotopy identity", "exact", 60, c7},
      {8, "V8 family", "exact", 120, c8},
      {9, "central extensions, psl(n|n)", "exact", 1800, c9},
      {10, "gl(m|n) atypicality scan", "exact", 120, c10},
      {11, "property suites", "exact", 300, c11},
  };
  int failures = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << " exception: " << e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = dt < c.limit_s;
    bool pass = o.ok && in_time;
    failures += !pass;
    char head[256];
    std::snprintf(head, sizeof head, "criterion %2d %s  %-40s tolerance %s  runtime %.2f s (limit %.0f s)", c.id,
                  pass ? "PASS" : "FAIL", c.title, c.tolerance, dt, c.limit_s);
    std::cout << head << " |" << o.note.str() << std::endl;
  }
  std::cout << (failures ? "acceptance FAILED: " : "acceptance passed: ") << all.size() - failures << "/" << all.size()
            << std::endl;
  return failures ? 1 : 0;
}
