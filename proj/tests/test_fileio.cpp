#include <gtest/gtest.h>

#include <filesystem>

#include "epscoh/catalog.hpp"
#include "epscoh/errors.hpp"
#include "epscoh/fileio.hpp"

using namespace epscoh;
using namespace epscoh::catalog;

namespace {

std::string sl2_text(const char* he = "2") {
  return std::string(R"({
  "grading": {"free_rank": 1, "torsion": [], "form": [[0]]},
  "basis": [{"label": "E", "degree": [1]}, {"label": "F", "degree": [-1]}, {"label": "H", "degree": [0]}],
  "brackets": [
    {"i": 2, "j": 0, "terms": [{"k": 0, "coeff": ")") + he + R"("}]},
    {"i": 2, "j": 1, "terms": [{"k": 1, "coeff": "-2"}]},
    {"i": 0, "j": 1, "terms": [{"k": 2, "coeff": "1"}]}
  ]
})";
}

void expect_same_algebra(const EpsLieAlgebra& a, const EpsLieAlgebra& b) {
  ASSERT_EQ(a.labels(), b.labels());
  ASSERT_EQ(a.degrees(), b.degrees());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      ASSERT_EQ(a.eps(i, j), b.eps(i, j));
      ASSERT_EQ(a.bracket(unit_vec(a.dim(), i), unit_vec(a.dim(), j)), b.bracket(unit_vec(b.dim(), i), unit_vec(b.dim(), j)));
    }
}

}  // namespace

TEST(FileIO, HandWrittenAlgebraParses) {
  auto L = algebra_from_text(sl2_text());
  EXPECT_EQ(L->dim(), 3u);
  EXPECT_EQ(L->bracket(unit_vec(3, 0), unit_vec(3, 2)), (Vec{-2, 0, 0}));  // derived order
  auto r = cohomology(trivial(L, L->factor().zero()), 3);
  EXPECT_EQ(r.dim(3), 1u);
}

TEST(FileIO, BrokenJacobiNamesTheTriple) {
  try {
    algebra_from_text(sl2_text("4"));
    FAIL() << "accepted a broken algebra";
  } catch (const ValidationError& e) {
    std::string m = e.what();
    EXPECT_NE(m.find("Jacobi"), std::string::npos) << m;
    EXPECT_NE(m.find("H"), std::string::npos) << m;
  }
}

TEST(FileIO, ParseErrorsNameTheField) {
  EXPECT_THROW(algebra_from_text("{ not json"), ParseError);
  try {
    algebra_from_text(R"({"grading": {"free_rank": 1, "torsion": [], "form": [[0]]}, "basis": []})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("brackets"), std::string::npos) << e.what();
  }
  auto bad = sl2_text("1/0");
  EXPECT_THROW(algebra_from_text(bad), ParseError);
  auto bad2 = sl2_text("x");
  EXPECT_THROW(algebra_from_text(bad2), ParseError);
  std::string oob = sl2_text();
  oob.replace(oob.find("\"k\": 1"), 6, "\"k\": 7");
  EXPECT_THROW(algebra_from_text(oob), ParseError);
}

TEST(FileIO, CatalogAlgebrasRoundTrip) {
  for (const char* name : {"sl2", "osp12", "sl12", "sl12z", "sl12z2", "gl11", "psl22"}) {
    auto L = algebra_by_name(name);
    auto text = algebra_to_text(*L);
    EXPECT_EQ(text, algebra_to_text(*L));  // deterministic
    auto back = algebra_from_text(text);
    expect_same_algebra(*L, *back);
    EXPECT_TRUE(same_algebra(*L, *back)) << name;
    EXPECT_EQ(algebra_to_text(*back), text);
  }
}

TEST(FileIO, ModulesRoundTrip) {
  auto L = sl12().algebra;
  for (const char* m : {"v_half", "v8", "kac:1/3", "w:2"}) {
    auto V = module_by_name(L, m);
    auto text = module_to_text(*V);
    auto W = module_from_text(text);
    ASSERT_EQ(W->dim(), V->dim());
    EXPECT_EQ(W->labels(), V->labels());
    EXPECT_EQ(W->degrees(), V->degrees());
    for (std::size_t a = 0; a < L->dim(); ++a) EXPECT_EQ(W->action(a), V->action(a)) << m;
    EXPECT_EQ(module_to_text(*W), text);
    auto W2 = module_from_text(text, L);
    EXPECT_EQ(W2->algebra(), L);
  }
  // the embedded algebra must match the one supplied
  auto text = module_to_text(*v_half(L));
  EXPECT_THROW(module_from_text(text, sl12(Sl12Grading::z2).algebra), ValidationError);
}

TEST(FileIO, BrokenModuleRejected) {
  auto L = sl12().algebra;
  auto text = module_to_text(*v_half(L));
  // flip one action coefficient sign: representation property fails
  auto pos = text.find("\"coeff\": \"-1\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 13, "\"coeff\": \"-2\"");
  EXPECT_THROW(module_from_text(text), ValidationError);
}

TEST(FileIO, Files) {
  auto dir = std::filesystem::temp_directory_path() / "epscoh_fileio_test";
  std::filesystem::create_directories(dir);
  auto pa = (dir / "sl12.json").string(), pm = (dir / "vhalf.json").string();
  auto L = sl12().algebra;
  write_text_file(pa, algebra_to_text(*L));
  write_text_file(pm, module_to_text(*v_half(L)));
  auto L2 = parse_algebra_file(pa);
  expect_same_algebra(*L, *L2);
  auto V = parse_module_file(pm, L2);
  EXPECT_EQ(cohomology(V, 1).dim(1), 1u);
  EXPECT_THROW(parse_algebra_file((dir / "missing.json").string()), ParseError);
  std::filesystem::remove_all(dir);
}
