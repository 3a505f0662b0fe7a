#include "epscoh/fileio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "epscoh/errors.hpp"

namespace epscoh {

namespace {

using json = nlohmann::ordered_json;

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": wrong type");
  }
}

Rational coeff(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(where + ": coefficient must be a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json degree_json(const Degree& d) { return json(d.c); }

json basis_json(const std::vector<std::string>& labels, const std::vector<Degree>& degs) {
  json b = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) b.push_back({{"label", labels[i]}, {"degree", degree_json(degs[i])}});
  return b;
}

void parse_basis(const json& j, std::vector<std::string>& labels, std::vector<Degree>& degs) {
  const auto& b = field(j, "basis", "file");
  if (!b.is_array()) throw ParseError("basis: expected an array");
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::string where = "basis[" + std::to_string(i) + "]";
    labels.push_back(get<std::string>(field(b[i], "label", where), where + ".label"));
    degs.emplace_back(get<std::vector<std::int64_t>>(field(b[i], "degree", where), where + ".degree"));
  }
}

std::size_t index(const json& j, std::size_t bound, const std::string& where) {
  auto k = get<long>(j, where);
  if (k < 0 || static_cast<std::size_t>(k) >= bound) throw ParseError(where + ": index out of range");
  return static_cast<std::size_t>(k);
}

json algebra_json(const EpsLieAlgebra& L) {
  const auto& f = L.factor();
  json j;
  j["grading"] = {{"free_rank", f.group().free_rank}, {"torsion", f.group().torsion}, {"form", f.form()}};
  j["basis"] = basis_json(L.labels(), L.degrees());
  json br = json::array();
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = a; b < L.dim(); ++b) {
      const auto& t = L.bracket_basis(a, b);
      if (t.empty()) continue;
      json terms = json::array();
      for (const auto& e : t) terms.push_back({{"k", e.i}, {"coeff", to_string(e.v)}});
      br.push_back({{"i", a}, {"j", b}, {"terms", terms}});
    }
  j["brackets"] = br;
  return j;
}

AlgebraPtr algebra_from_json(const json& j) {
  const auto& g = field(j, "grading", "algebra");
  GradingGroup grp;
  grp.free_rank = get<int>(field(g, "free_rank", "grading"), "grading.free_rank");
  grp.torsion = get<std::vector<std::int64_t>>(field(g, "torsion", "grading"), "grading.torsion");
  auto form = get<std::vector<std::vector<std::int64_t>>>(field(g, "form", "grading"), "grading.form");
  CommutationFactor f;
  try {
    f = CommutationFactor(grp, form);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("grading: ") + e.what());
  }
  std::vector<std::string> labels;
  std::vector<Degree> degs;
  parse_basis(j, labels, degs);
  for (std::size_t i = 0; i < degs.size(); ++i)
    if (!grp.valid(degs[i])) throw ValidationError("basis element " + labels[i] + " has an invalid degree");
  std::vector<BracketSpec> br;
  const auto& bs = field(j, "brackets", "algebra");
  if (!bs.is_array()) throw ParseError("brackets: expected an array");
  for (std::size_t r = 0; r < bs.size(); ++r) {
    std::string where = "brackets[" + std::to_string(r) + "]";
    BracketSpec s{index(field(bs[r], "i", where), labels.size(), where + ".i"),
                  index(field(bs[r], "j", where), labels.size(), where + ".j"), {}};
    const auto& terms = field(bs[r], "terms", where);
    if (!terms.is_array()) throw ParseError(where + ".terms: expected an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      std::string w2 = where + ".terms[" + std::to_string(t) + "]";
      s.terms.push_back({static_cast<std::uint32_t>(index(field(terms[t], "k", w2), labels.size(), w2 + ".k")),
                         coeff(field(terms[t], "coeff", w2), w2 + ".coeff")});
    }
    s.terms = sparse_normalize(std::move(s.terms));
    br.push_back(std::move(s));
  }
  return make_algebra(EpsLieAlgebra(f, labels, degs, br));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON syntax: ") + e.what());
  }
}

}  // namespace

std::string algebra_to_text(const EpsLieAlgebra& L) { return algebra_json(L).dump(1) + "\n"; }

AlgebraPtr algebra_from_text(const std::string& text) { return algebra_from_json(parse_json(text)); }

std::string module_to_text(const GradedModule& V) {
  json j;
  j["algebra"] = algebra_json(*V.algebra());
  j["basis"] = basis_json(V.labels(), V.degrees());
  json act = json::array();
  for (std::size_t a = 0; a < V.actions().size(); ++a) {
    const auto& M = V.action(a);
    json entries = json::array();
    for (std::size_t r = 0; r < M.rows(); ++r)
      for (const auto& e : M.row(r)) entries.push_back({{"row", r}, {"col", e.i}, {"coeff", to_string(e.v)}});
    if (!entries.empty()) act.push_back({{"a", a}, {"entries", entries}});
  }
  j["action"] = act;
  return j.dump(1) + "\n";
}

ModulePtr module_from_text(const std::string& text, const AlgebraPtr& L) {
  json j = parse_json(text);
  AlgebraPtr alg = L;
  if (j.is_object() && j.contains("algebra")) {
    auto own = algebra_from_json(j.at("algebra"));
    if (!alg) alg = own;
    else if (!same_algebra(*own, *alg)) throw ValidationError("module file: algebra does not match the given algebra");
  }
  if (!alg) throw ParseError("module file: no algebra given");
  std::vector<std::string> labels;
  std::vector<Degree> degs;
  parse_basis(j, labels, degs);
  const std::size_t d = labels.size();
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> trip(alg->dim());
  const auto& act = field(j, "action", "module");
  if (!act.is_array()) throw ParseError("action: expected an array");
  for (std::size_t r = 0; r < act.size(); ++r) {
    std::string where = "action[" + std::to_string(r) + "]";
    auto a = index(field(act[r], "a", where), alg->dim(), where + ".a");
    const auto& es = field(act[r], "entries", where);
    if (!es.is_array()) throw ParseError(where + ".entries: expected an array");
    for (std::size_t t = 0; t < es.size(); ++t) {
      std::string w2 = where + ".entries[" + std::to_string(t) + "]";
      trip[a].emplace_back(index(field(es[t], "row", w2), d, w2 + ".row"), index(field(es[t], "col", w2), d, w2 + ".col"),
                           coeff(field(es[t], "coeff", w2), w2 + ".coeff"));
    }
  }
  std::vector<RationalSparseMatrix> rho;
  for (const auto& t : trip) rho.push_back(RationalSparseMatrix::from_triplets(d, d, t));
  return make_module(GradedModule(alg, labels, degs, rho));
}

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

AlgebraPtr parse_algebra_file(const std::string& path) { return algebra_from_text(read_file(path)); }

ModulePtr parse_module_file(const std::string& path, const AlgebraPtr& L) { return module_from_text(read_file(path), L); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

}  // namespace epscoh
