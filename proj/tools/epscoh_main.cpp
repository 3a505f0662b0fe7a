#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "epscoh/casimir.hpp"
#include "epscoh/catalog.hpp"
#include "epscoh/errors.hpp"
#include "epscoh/extensions.hpp"
#include "epscoh/fileio.hpp"
#include "epscoh/glmn.hpp"

using namespace epscoh;

namespace {

bool is_path(const std::string& s) { return s.find('/') != std::string::npos || s.ends_with(".json"); }

AlgebraPtr load_algebra(const std::string& s) {
  if (s.empty()) throw ParseError("--algebra is required");
  return is_path(s) ? parse_algebra_file(s) : catalog::algebra_by_name(s);
}

ModulePtr load_module(const AlgebraPtr& L, const std::string& s) {
  return is_path(s) ? parse_module_file(s, L) : catalog::module_by_name(L, s);
}

Degree parse_degree(const std::string& s) {
  std::vector<std::int64_t> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      c.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw ParseError("bad degree component '" + tok + "'");
    }
  }
  return Degree(c);
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(parse_rational(tok));
  return v;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void print_header(const EpsLieAlgebra& L, const std::string& aname, const GradedModule* V, const std::string& mname) {
  std::cout << "algebra " << aname << " dim " << L.dim();
  if (V) std::cout << ", module " << mname << " dim " << V->dim();
  std::cout << "\n";
}

FormSymmetry parse_symmetry(const std::string& s) {
  if (s == "none") return FormSymmetry::none;
  if (s == "symmetric") return FormSymmetry::eps_symmetric;
  if (s == "skew") return FormSymmetry::eps_skew;
  throw ParseError("symmetry must be none, symmetric or skew");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of eps Lie algebras and superalgebras"};
  app.require_subcommand(1);
  std::string aname, mname = "trivial", sector, out, weight, symmetry = "skew";
  std::size_t nmax = 2, arity = 2, m = 1, n = 1;
  bool reps = false, csv = false, slv = false;

  auto add_alg = [&](CLI::App* c) { c->add_option("--algebra", aname, "catalog name or algebra file")->required(); };
  auto add_mod = [&](CLI::App* c) { c->add_option("--module", mname, "catalog module name or module file"); };

  auto* check = app.add_subcommand("check", "parse and validate an algebra (and module)");
  add_alg(check);
  add_mod(check);
  auto* coh = app.add_subcommand("cohomology", "dimensions of H^n(L,V)");
  add_alg(coh);
  add_mod(coh);
  coh->add_option("--nmax", nmax, "highest level");
  coh->add_option("--sector", sector, "restrict to one degree, e.g. 0,0,0");
  coh->add_flag("--representatives", reps, "print representative cocycles");
  coh->add_flag("--csv", csv, "CSV output");
  auto* forms = app.add_subcommand("invariant-forms", "invariant multilinear forms on a module");
  add_alg(forms);
  forms->add_option("--module", mname, "module (default adjoint)");
  forms->add_option("--arity", arity, "number of arguments");
  forms->add_option("--symmetry", symmetry, "none, symmetric or skew");
  auto* cas = app.add_subcommand("casimir-check", "quadratic Casimir operators on a module");
  add_alg(cas);
  add_mod(cas);
  auto* hom = app.add_subcommand("homotopy-check", "verify d delta + delta d = C_V on C^n");
  add_alg(hom);
  add_mod(hom);
  hom->add_option("--nmax", nmax, "highest level");
  auto* h2 = app.add_subcommand("homology2", "H_2(L) by degree and the pairing with H^2(L,K)");
  add_alg(h2);
  h2->add_flag("--csv", csv, "CSV output");
  auto* cov = app.add_subcommand("covering", "universal covering of a perfect algebra");
  add_alg(cov);
  cov->add_option("--out", out, "write the covering algebra to this file");
  auto* aty = app.add_subcommand("atypical", "gl(m|n) highest weight: do all Casimirs without constant term vanish?");
  aty->add_option("--m", m, "even block size")->required();
  aty->add_option("--n", n, "odd block size")->required();
  aty->add_option("--weight", weight, "L_1,..,L_{m+n}")->required();
  aty->add_flag("--sl", slv, "interpret as an sl(m|n) weight (m != n)");
  auto* cat = app.add_subcommand("catalog", "built-in algebras and modules");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list catalog names");
  auto* exp = cat->add_subcommand("export", "export a catalog algebra or module as a file");
  add_alg(exp);
  exp->add_option("--module", mname, "module to export instead of the algebra");
  exp->add_option("--out", out, "output file (default stdout)");
  bool module_given = false;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  module_given = exp->count("--module") > 0;

  try {
    if (check->parsed()) {
      auto L = load_algebra(aname);
      auto V = load_module(L, mname);
      print_header(*L, aname, V.get(), mname);
      std::cout << "algebra valid yes\nmodule valid yes\nperfect " << yes(is_perfect(*L)) << "\n";
    } else if (coh->parsed()) {
      auto L = load_algebra(aname);
      auto V = load_module(L, mname);
      CohomologyOptions o;
      o.representatives = reps;
      if (!sector.empty()) o.sector = parse_degree(sector);
      auto res = cohomology(V, nmax, o);
      if (csv) {
        std::cout << "n,dim_C,dim_Z,dim_B,dim_H\n";
        for (const auto& lv : res.levels) {
          std::size_t z = 0, b = 0;
          for (const auto& s : lv.sectors) z += s.dim_Z, b += s.dim_B;
          std::cout << lv.n << "," << lv.dim_C() << "," << z << "," << b << "," << lv.dim_H() << "\n";
        }
      } else {
        print_header(*L, aname, V.get(), mname);
        for (const auto& lv : res.levels) {
          std::cout << "H^" << lv.n << " dim " << lv.dim_H() << "   (C^" << lv.n << " dim " << lv.dim_C() << ")\n";
          for (const auto& s : lv.sectors)
            if (s.dim_H) {
              std::cout << "  sector " << to_string(s.gamma) << ": dim " << s.dim_H << "\n";
              for (const auto& r : s.representatives) std::cout << "    " << r.to_string() << "\n";
            }
        }
      }
    } else if (forms->parsed()) {
      if (forms->count("--module") == 0) mname = "adjoint";
      auto L = load_algebra(aname);
      auto V = load_module(L, mname);
      auto fs = invariant_multilinear_forms(V, arity, parse_symmetry(symmetry));
      print_header(*L, aname, V.get(), mname);
      std::cout << "invariant " << symmetry << " " << arity << "-forms dim " << fs.size() << "\n";
      for (const auto& f : fs) std::cout << "  degree " << to_string(f.eta) << "\n";
    } else if (cas->parsed()) {
      auto L = load_algebra(aname);
      auto V = load_module(L, mname);
      auto qs = quadratic_casimir_forms(L);
      print_header(*L, aname, V.get(), mname);
      std::cout << "invariant symmetric bilinear forms on L* dim " << qs.size() << "\n";
      for (std::size_t k = 0; k < qs.size(); ++k) {
        auto C = casimir_operator(qs[k], V);
        std::cout << "casimir " << k + 1 << ": degree " << to_string(C.eta) << ", graded central "
                  << yes(check_graded_central(C).ok) << ", invertible " << yes(is_invertible(C)) << "\n";
      }
      std::cout << "vanishing theorem applies " << yes(prop22_applies(V, qs).has_value()) << "\n";
    } else if (hom->parsed()) {
      auto L = load_algebra(aname);
      auto V = load_module(L, mname);
      auto qs = quadratic_casimir_forms(L);
      if (qs.empty()) throw PreconditionError("no invariant bilinear form on the coadjoint module");
      auto C = prop22_applies(V, qs);
      if (!C) C = casimir_operator(qs.front(), V);
      print_header(*L, aname, V.get(), mname);
      bool all = true;
      for (std::size_t k = 1; k <= nmax; ++k) {
        bool ok = verify_homotopy_identity(*C, k);
        all = all && ok;
        std::cout << "homotopy identity n=" << k << " " << (ok ? "holds" : "FAILS") << "\n";
      }
      if (!all) return 3;
    } else if (h2->parsed()) {
      auto L = load_algebra(aname);
      auto h = homology_h2(*L);
      bool pair = h2_pairing_check(L);
      if (csv) {
        std::cout << "degree,dim\n";
        for (const auto& [g, d] : h.dims) std::cout << "\"" << to_string(g) << "\"," << d << "\n";
      } else {
        print_header(*L, aname, nullptr, "");
        std::cout << "H_2 dim " << h.total() << "\n";
        for (const auto& [g, d] : h.dims) std::cout << "  degree " << to_string(g) << ": dim " << d << "\n";
        std::cout << "pairing with H^2(L,K) " << (pair ? "holds" : "FAILS") << "\n";
      }
      if (!pair) return 3;
    } else if (cov->parsed()) {
      auto L = load_algebra(aname);
      auto c = universal_covering(L);
      print_header(*L, aname, nullptr, "");
      std::cout << "covering dim " << c.cover->dim() << "\ncenter dim " << c.center.size() << "\n";
      for (const auto& [g, d] : c.center_dims) std::cout << "  degree " << to_string(g) << ": dim " << d << "\n";
      std::cout << "perfect " << yes(c.perfect) << "\n";
      if (!out.empty()) write_text_file(out, algebra_to_text(*c.cover));
    } else if (aty->parsed()) {
      glmn::GlWeight w{m, n, parse_rationals(weight)};
      if (w.L.size() != m + n) throw ParseError("--weight needs m+n entries");
      if (slv) w = glmn::sl_variant(w);
      std::cout << (slv ? "sl(" : "gl(") << m << "|" << n << ") weight " << join(w.L) << "\n";
      std::cout << "r " << join(glmn::rho_values(m, n)) << "\nl " << join(glmn::ell_values(w)) << "\n";
      for (unsigned s = 1; s <= m + n; ++s) std::cout << "Q_" << s << " = " << to_string(glmn::q_s(w, s)) << "\n";
      std::cout << "dominant " << yes(glmn::is_dominant(w)) << "\nmatched pairs " << glmn::matched_pairs(w) << "\n";
      std::cout << "all Casimirs without constant term vanish: " << yes(glmn::all_casimirs_vanish(w)) << "\n";
    } else if (list->parsed()) {
      std::cout << "algebras:";
      for (const auto& s : catalog::algebra_names()) std::cout << " " << s;
      std::cout << "\nmodules:";
      for (const auto& s : catalog::module_names()) std::cout << " " << s;
      std::cout << "\n";
    } else if (exp->parsed()) {
      auto L = load_algebra(aname);
      std::string text = module_given ? module_to_text(*load_module(L, mname)) : algebra_to_text(*L);
      if (out.empty()) std::cout << text;
      else write_text_file(out, text);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
