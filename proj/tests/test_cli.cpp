#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace {

struct Run {
  int rc;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(EPSCOH_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

std::filesystem::path tmpdir() {
  auto d = std::filesystem::temp_directory_path() / "epscoh_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, CohomologyOfVHalf) {
  auto r = run("cohomology --algebra sl12 --module v_half --nmax 2");
  EXPECT_EQ(r.rc, 0) << r.out;
  EXPECT_TRUE(has(r, "H^1 dim 1")) << r.out;
  EXPECT_TRUE(has(r, "H^0 dim 0")) << r.out;
  // byte-identical reruns
  EXPECT_EQ(run("cohomology --algebra sl12 --module v_half --nmax 2").out, r.out);
}

TEST(Cli, CsvAndRepresentatives) {
  auto r = run("cohomology --algebra sl12 --module v_half --nmax 1 --csv");
  EXPECT_EQ(r.rc, 0);
  EXPECT_TRUE(has(r, "n,dim_C,dim_Z,dim_B,dim_H")) << r.out;
  EXPECT_TRUE(has(r, "1,24,4,3,1")) << r.out;
  auto rep = run("cohomology --algebra sl12 --module v_half --nmax 1 --representatives");
  EXPECT_EQ(rep.rc, 0);
  EXPECT_TRUE(has(rep, "->")) << rep.out;
}

TEST(Cli, CoveringAndHomology) {
  auto r = run("covering --algebra psl22");
  EXPECT_EQ(r.rc, 0) << r.out;
  EXPECT_TRUE(has(r, "center dim 3")) << r.out;
  EXPECT_TRUE(has(r, "covering dim 17")) << r.out;
  auto h = run("homology2 --algebra psl22");
  EXPECT_TRUE(has(h, "H_2 dim 3")) << h.out;
  EXPECT_TRUE(has(h, "pairing with H^2(L,K) holds")) << h.out;
  EXPECT_EQ(run("covering --algebra gl11").rc, 4);
}

TEST(Cli, Atypical) {
  auto r = run("atypical --m 2 --n 1 --weight 3,1,-4");
  EXPECT_EQ(r.rc, 0) << r.out;
  EXPECT_TRUE(has(r, "all Casimirs without constant term vanish: yes")) << r.out;
  EXPECT_TRUE(has(r, "matched pairs 1")) << r.out;
  auto t = run("atypical --m 2 --n 1 --weight 3,1,1");
  EXPECT_TRUE(has(t, "vanish: no")) << t.out;
  EXPECT_EQ(run("atypical --m 2 --n 1 --weight 3,1").rc, 2);
}

TEST(Cli, CasimirAndHomotopy) {
  auto c = run("casimir-check --algebra sl12 --module kac:0");
  EXPECT_EQ(c.rc, 0);
  EXPECT_TRUE(has(c, "vanishing theorem applies yes")) << c.out;
  auto h = run("homotopy-check --algebra sl2 --module adjoint --nmax 1");
  EXPECT_TRUE(has(h, "homotopy identity n=1 holds")) << h.out;
  auto f = run("invariant-forms --algebra sl2 --arity 3 --symmetry skew");
  EXPECT_TRUE(has(f, "invariant skew 3-forms dim 1")) << f.out;
}

TEST(Cli, ErrorsAndExitCodes) {
  EXPECT_EQ(run("cohomology --algebra nosuch").rc, 2);
  EXPECT_EQ(run("cohomology --bogus-flag").rc, 2);
  auto d = tmpdir();
  auto bad = (d / "bad.json").string();
  std::ofstream(bad) << "{ broken";
  EXPECT_EQ(run("check --algebra " + bad).rc, 2);
  // a Jacobi violation is a validation error
  auto jac = (d / "jacobi.json").string();
  std::ofstream(jac) << R"({"grading": {"free_rank": 1, "torsion": [], "form": [[0]]},
    "basis": [{"label": "E", "degree": [1]}, {"label": "F", "degree": [-1]}, {"label": "H", "degree": [0]}],
    "brackets": [{"i": 2, "j": 0, "terms": [{"k": 0, "coeff": "4"}]},
                 {"i": 2, "j": 1, "terms": [{"k": 1, "coeff": "-2"}]},
                 {"i": 0, "j": 1, "terms": [{"k": 2, "coeff": "1"}]}]})";
  auto r = run("check --algebra " + jac);
  EXPECT_EQ(r.rc, 3) << r.out;
  EXPECT_TRUE(has(r, "Jacobi")) << r.out;
}

TEST(Cli, ExportAndCheckRoundTrip) {
  auto d = tmpdir();
  auto pa = (d / "sl12.json").string(), pm = (d / "v8.json").string();
  EXPECT_EQ(run("catalog export --algebra sl12 --out " + pa).rc, 0);
  EXPECT_EQ(run("catalog export --algebra sl12 --module v8 --out " + pm).rc, 0);
  auto r = run("check --algebra " + pa + " --module " + pm);
  EXPECT_EQ(r.rc, 0) << r.out;
  EXPECT_TRUE(has(r, "module valid yes")) << r.out;
  auto c = run("cohomology --algebra " + pa + " --module " + pm + " --nmax 1");
  EXPECT_TRUE(has(c, "H^1 dim 1")) << c.out;
  auto l = run("catalog list");
  EXPECT_TRUE(has(l, "psl22")) << l.out;
  std::filesystem::remove_all(d);
}
