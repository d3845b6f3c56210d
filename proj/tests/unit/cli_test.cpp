#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "npnas/cli.hpp"
#include "npnas/schematic.hpp"
#include "npnas/syntax.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = npnas::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string problem(const char* name) { return (fs::path(NPNAS_PROBLEMS_DIR) / name).string(); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, SolveSwapPair) {
  CliRun r = cli({"solve", problem("swap-pair.np")});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 4u);
  EXPECT_EQ(ls[0], "result: sat");
  EXPECT_EQ(ls[1], "x = n0@N");
  EXPECT_EQ(ls[2], "y = n0@N");
  EXPECT_EQ(ls.back().rfind("stats: nodes=", 0), 0u);
}

TEST(Cli, SolveSwapPairFresh) {
  CliRun r = cli({"solve", problem("swap-pair-fresh.np"), "--witness"});
  EXPECT_EQ(r.code, 1);
  auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 2u);
  EXPECT_EQ(ls[0], "result: unsat");
  EXPECT_EQ(ls[1], "reason: exhausted-normal-forms");
}

TEST(Cli, DivergenceStopsAtReduction) {
  CliRun r = cli({"solve", problem("nat-diverge.np")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("reason: fo-reduction"), std::string::npos);
  EXPECT_NE(r.out.find("stats: nodes=0 "), std::string::npos);
  CliRun fo = cli({"fo", problem("nat-diverge.np")});
  EXPECT_EQ(fo.code, 1);
  EXPECT_NE(fo.out.find("(eq (tuple unit x) (tuple unit (con S y)))"), std::string::npos);
}

TEST(Cli, TranslateThenSolve) {
  fs::path out = fs::temp_directory_path() / "npnas_cli_ex67.np";
  CliRun t = cli({"translate-eu", problem("ex67.eu"), "-o", out.string()});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(cli({"solve", out.string()}).code, 1);
  CliRun full = cli({"solve", out.string(), "--strategy", "full"});
  EXPECT_EQ(full.code, 1);
  EXPECT_NE(full.out.find("stats: nodes="), std::string::npos);
  EXPECT_EQ(cli({"eu-oracle", problem("ex67.eu")}).code, 1);
  fs::remove(out);
}

TEST(Cli, OracleAndCheck) {
  CliRun o = cli({"oracle", problem("swap-pair.np"), "--size", "3", "--pool", "2"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("result: sat"), std::string::npos);
  CliRun u = cli({"oracle", problem("swap-pair-fresh.np"), "--size", "3", "--pool", "2"});
  EXPECT_EQ(u.code, 1);
  EXPECT_NE(u.out.find("exact: true"), std::string::npos);
  EXPECT_EQ(cli({"check", problem("lam.np")}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"solve", problem("missing.np")}).code, 2);
  EXPECT_EQ(cli({"solve", problem("swap-pair.np"), "--strategy", "sideways"}).code, 2);
  EXPECT_EQ(cli({"solve", problem("swap-pair-fresh.np"), "--budget", "1"}).code, 3);
  EXPECT_EQ(cli({"--help"}).code, 0);

  fs::path bad = fs::temp_directory_path() / "npnas_cli_bad.np";
  std::ofstream(bad) << "(signature (name-sort N)) (vars (x (name N))) (constraints (eq x";
  CliRun r = cli({"check", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);
  fs::remove(bad);
}

// Every shipped problem: verdict exit code matches the oracle on the
// name-only ones.
TEST(Cli, CorpusExitCodes) {
  for (const auto& entry : fs::directory_iterator(NPNAS_PROBLEMS_DIR)) {
    if (entry.path().extension() != ".np") continue;
    int code = cli({"solve", entry.path().string()}).code;
    EXPECT_TRUE(code == 0 || code == 1) << entry.path();
    EXPECT_EQ(cli({"check", entry.path().string()}).code, 0) << entry.path();
  }
}

}  // namespace
