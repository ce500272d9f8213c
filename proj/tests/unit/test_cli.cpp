#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = gsimplex::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("gsimplex_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

void expect_error_line(const Result& r, int code) {
  EXPECT_EQ(r.code, code) << r.err;
  EXPECT_EQ(r.err.rfind("error code=" + std::to_string(code) + " kind=", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
}

}  // namespace

TEST_F(CliTest, SolveHilbertCubeWritesTraceAndPlot) {
  auto r = run({"solve", "-i", "hilbert-cube(1/2,20)", "-c", "hilbert-h(-1)", "--start", "origin-vertex", "--trace",
                path("t.jsonl"), "--plot", path("p.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pivots=20"), std::string::npos);
  EXPECT_NE(r.out.find("value=-366503875925/1099511627776"), std::string::npos);
  std::string trace = slurp(path("t.jsonl"));
  EXPECT_EQ(std::count(trace.begin(), trace.end(), '\n'), 22);
  std::string plot = slurp(path("p.csv"));
  EXPECT_EQ(plot.rfind("n,value,gamma\n0,0,-1/4\n", 0), 0u);
}

TEST_F(CliTest, OracleCheckAgrees) {
  auto r = run({"oracle-check", "-i", "cube(3)", "-c", "-1,-1,-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("optimum agrees"), std::string::npos);
  auto f = run({"oracle-check", "-i", "random-lp(3,8,4)", "-c", "random(2)", "-a", "float"});
  EXPECT_EQ(f.code, 0) << f.err;
}

TEST_F(CliTest, AuditFlagsEdgeLengthUnderAmbient) {
  auto r = run({"audit", "-i", "hilbert-cube(1/2,20)", "-p", "ambient", "--report", path("a.yaml")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string report = slurp(path("a.yaml"));
  auto a7 = report.find("id: A7");
  ASSERT_NE(a7, std::string::npos);
  EXPECT_NE(report.find("verdict: fail", a7), std::string::npos);
  EXPECT_NE(report.find("nu: 1/1048576"), std::string::npos);
}

TEST_F(CliTest, AuditGateRefusesAmbientRun) {
  auto r = run({"solve", "-i", "hilbert-cube(1/2,20)", "-c", "hilbert-h(-1)", "-p", "ambient", "--audit-gate"});
  expect_error_line(r, 3);
  EXPECT_NE(r.err.find("A7"), std::string::npos);
  auto ok = run({"solve", "-i", "hilbert-cube(1/2,8)", "-c", "hilbert-h(-1)", "--audit-gate", "--trace", path("t")});
  EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST_F(CliTest, Reruns) {
  for (int i = 0; i < 2; ++i) {
    auto r = run({"solve", "-i", "random-lp(4,9,11)", "-c", "random(1)", "-s", "vertex(0)", "--trace",
                  path("t" + std::to_string(i))});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  EXPECT_EQ(slurp(path("t0")), slurp(path("t1")));
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  expect_error_line(run({"solve", "-i", "bogus(1)"}), 2);
  expect_error_line(run({"solve", "-i", "cube(3)", "-c", "1,2"}), 2);
  expect_error_line(run({"solve", "-i", "cube(3)", "-c", "1,1,1", "-p", "sideways"}), 2);
  expect_error_line(run({"solve", "-i", "cube(3)", "-c", "1,1,1", "-a", "decimal"}), 2);
  expect_error_line(run({"solve", "-i", "cube(x)", "-c", "1,1,1"}), 2);
  expect_error_line(run({"solve", "-i", "hilbert-cube(3/2,4)", "-c", "zero"}), 2);
  expect_error_line(run({"solve", "-i", "cube(3)"}), 2);
  expect_error_line(run({"solve", "--no-such-flag"}), 2);
  expect_error_line(run({}), 2);
  expect_error_line(run({"solve", "-i", path("missing.yaml"), "-c", "zero"}), 2);
  expect_error_line(run({"solve", "-i", "cube(2)", "-c", "1,1", "--tol-opt", "-1", "-a", "float"}), 2);
  expect_error_line(run({"solve", "-i", "cube(2)", "-c", "1,1", "--trace", path("no/such/dir/t")}), 2);
  {
    std::ofstream f(path("bad.yaml"));
    f << "truncation: 2\nconstraints: [{id: 1, coeffs: [[1, 'one']], bound: '1'}]\n";
  }
  expect_error_line(run({"solve", "-i", path("bad.yaml"), "-c", "zero"}), 2);
}

TEST_F(CliTest, PreconditionErrorsExitThree) {
  expect_error_line(run({"solve", "-i", "random-lp(3,8,1)", "-c", "1,1,1"}), 3);
  expect_error_line(run({"solve", "-i", "cube(3)", "-c", "1,1,1", "-s", "0,0,1/2"}), 3);
  expect_error_line(run({"solve", "-i", "cube(3)", "-c", "1,1,1", "-s", "2,0,0"}), 3);
  {
    std::ofstream f(path("pyramid.yaml"));
    f << "truncation: 3\nconstraints:\n"
         "  - {id: 1, coeffs: [[1, '1'], [3, '1']], bound: '1'}\n"
         "  - {id: 2, coeffs: [[1, '-1'], [3, '1']], bound: '1'}\n"
         "  - {id: 3, coeffs: [[2, '1'], [3, '1']], bound: '1'}\n"
         "  - {id: 4, coeffs: [[2, '-1'], [3, '1']], bound: '1'}\n"
         "  - {id: 5, coeffs: [[3, '-1']], bound: '0'}\n"
         "objective: {coeffs: [[3, '-1']]}\n";
  }
  auto r = run({"solve", "-i", path("pyramid.yaml"), "-s", "1,1,0"});
  expect_error_line(r, 3);
  EXPECT_NE(r.err.find("kind=degenerate"), std::string::npos);
  EXPECT_NE(r.err.find("iteration="), std::string::npos);
  {
    std::ofstream f(path("ray.yaml"));
    f << "truncation: 2\nconstraints:\n"
         "  - {id: 1, coeffs: [[1, '-1']], bound: '0'}\n"
         "  - {id: 2, coeffs: [[2, '-1']], bound: '0'}\n"
         "objective: {coeffs: [[1, '-1']]}\n";
  }
  auto u = run({"solve", "-i", path("ray.yaml")});
  expect_error_line(u, 3);
  EXPECT_NE(u.err.find("kind=unbounded"), std::string::npos);
}

TEST_F(CliTest, BudgetErrorExitsFour) {
  expect_error_line(run({"oracle-check", "-i", "cube(30)", "-c", "zero"}), 4);
}

TEST_F(CliTest, OracleMismatchExitsFive) {
  // A loose optimality tolerance stops the walk early and the oracle notices.
  auto r = run({"oracle-check", "-i", "cube(3)", "-c", "-1,-1,-1/1000000", "-a", "float", "--tol-opt", "0.01", "-s",
                "0,0,0"});
  expect_error_line(r, 5);
}

TEST_F(CliTest, DecomposeAndSection) {
  auto d = run({"decompose", "-i", "hilbert-cube(1/2,4)", "--point", "ones"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("2,-2,1,5/256"), std::string::npos);
  auto s = run({"section", "-i", "disc-section(200)", "--samples", "100", "--seed", "3", "-o", path("s.csv")});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("accepted=100/100"), std::string::npos);
  std::string csv = slurp(path("s.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 101);
  expect_error_line(run({"section", "-i", "cube(2)"}), 2);
}

TEST_F(CliTest, ConfigFileAndEnvironment) {
  {
    std::ofstream f(path("run.toml"));
    f << "[solve]\ninstance = \"cube(3)\"\nobjective = \"-1,-1,-1\"\narithmetic = \"float\"\n";
  }
  auto r = run({"--config", path("run.toml"), "solve", "--trace", path("t")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("value=-3"), std::string::npos);
  setenv("GSIMPLEX_TOL_OPT", "-5", 1);
  expect_error_line(run({"solve", "-i", "cube(2)", "-c", "1,1", "-a", "float"}), 2);
  unsetenv("GSIMPLEX_TOL_OPT");
}

TEST_F(CliTest, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}
