#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "dqo/sweep.hpp"

using namespace dqo;
using namespace dqo::sweep;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path d = [] {
    auto p = fs::temp_directory_path() / ("dqo_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return d;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DQO_CLI_PATH) + " " + args + " 2>" + (scratch() / "stderr.txt").string();
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Config, ParsesAllSections) {
  const auto path = write_file("all.ini",
                               "[system]\nM1 = 2e-23\nM2 = 3e-23\nw01 = 1e13\nw02 = 1.5e13\n"
                               "gamma_tilde = 0.05\nlambda_tilde = 0.3\n"
                               "[baths]\nT1 = 100\nT2 = 400\nomega_cutoff = 1e16\n"
                               "[initial]\nsigma01_factor = 3\nsigma02_sq = 1e-18\n"
                               "[sweep]\nparam = T2\nlo = 10\nhi = 1000\npoints = 3\nscale = log\n"
                               "[tolerances]\nrel_tol = 1e-9\nsteady_tol = 1e-4\nerrata = printed,f14\n");
  RunConfig c;
  apply_settings(c, read_config(path.string()));
  EXPECT_EQ(c.M1, 2e-23);
  EXPECT_EQ(c.w02, 1.5e13);
  EXPECT_EQ(c.lambda_tilde, 0.3);
  EXPECT_EQ(c.baths.T2, 400);
  EXPECT_EQ(c.baths.omega_cutoff, 1e16);
  EXPECT_EQ(c.sigma02_sq, 1e-18);
  EXPECT_NEAR(c.initial().sigma01_sq, 3 * cgs::hbar / (2 * 2e-23 * 1e13), 1e-30);
  const auto g = c.grid();
  ASSERT_EQ(g.size(), 3u);
  EXPECT_NEAR(g[1], 100.0, 1e-10);
  EXPECT_EQ(c.opt.steady_tol, 1e-4);
  EXPECT_TRUE(c.opt.errata.f14);
  EXPECT_FALSE(c.opt.errata.d2_b13);
  EXPECT_NO_THROW(c.check());
}

TEST(Config, RejectsUnknownKeysAndSections) {
  RunConfig c;
  EXPECT_THROW(apply_settings(c, read_config(write_file("k.ini", "[system]\nmass = 1\n").string())), InvalidParams);
  EXPECT_THROW(apply_settings(c, read_config(write_file("s.ini", "[bath]\nT1 = 1\n").string())), InvalidParams);
  EXPECT_THROW(apply_settings(c, read_config(write_file("v.ini", "[baths]\nT1 = warm\n").string())), InvalidParams);
  EXPECT_THROW(apply_settings(c, read_config(write_file("e.ini", "[tolerances]\nerrata = bogus\n").string())),
               InvalidParams);
  EXPECT_THROW(read_config((scratch() / "missing.ini").string()), InvalidParams);
}

TEST(Config, LambdaSweepStaysBelowMargin) {
  RunConfig c;
  c.axis.lo = 0.5;
  c.axis.hi = 1.0;
  c.axis.points = 6;
  EXPECT_THROW(c.check(), InvalidParams);
  c.axis.hi = 0.99;
  EXPECT_NO_THROW(c.check());
  c.axis.param = "omega";
  EXPECT_THROW(c.check(), InvalidParams);
}

TEST(Config, SingleRowWithoutSweep) {
  RunConfig c;
  c.lambda_tilde = 0.37;
  const auto g = c.grid();
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], 0.37);
}

TEST(Csv, FormatAndRoundTrip) {
  Table t;
  t.columns = {"a", "b", "error"};
  t.rows = {{fmt(1.0 / 3.0), fmt(std::nan("")), "bad, value\nhere"}};
  std::stringstream ss;
  write_csv(ss, t, {"command=steady"});
  const std::string s = ss.str();
  EXPECT_EQ(s.rfind("# schema=1\n# command=steady\na,b,error\n", 0), 0u);
  EXPECT_NE(s.find("0.333333333333,nan,bad; value here"), std::string::npos);
  const auto back = read_csv(ss);
  ASSERT_EQ(back.rows.size(), 1u);
  EXPECT_NEAR(back.num(0, "a"), 1.0 / 3.0, 1e-12);
  EXPECT_TRUE(std::isnan(back.num(0, "b")));
  EXPECT_EQ(back.error_rows(), 1u);
}

TEST(Runner, ModesTableColumns) {
  RunConfig c;
  c.axis.lo = 0.1;
  c.axis.hi = 0.5;
  c.axis.points = 3;
  const auto t = run(Command::modes, {c});
  EXPECT_EQ(t.columns.front(), "lambda_tilde");
  EXPECT_EQ(t.columns.back(), "error");
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_NEAR(t.num(0, "r1"), 1.0, 1e-12);
  EXPECT_EQ(t.error_rows(), 0u);
}

TEST(Runner, RowFailuresAreRecorded) {
  RunConfig c;
  c.gamma_tilde = 0.0;  // no steady state without damping
  const auto t = run(Command::steady, {c});
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.error_rows(), 1u);
  EXPECT_TRUE(std::isnan(t.num(0, "sigma1_norm")));
}

TEST(Cli, DeterministicOutput) {
  const auto a = scratch() / "a.csv", b = scratch() / "b.csv";
  ASSERT_EQ(run_cli("evolve --preset fig3a --threads 1 --out " + a.string()), 0);
  ASSERT_EQ(run_cli("evolve --preset fig3a --threads 4 --out " + b.string()), 0);
  const auto sa = slurp(a);
  EXPECT_EQ(sa, slurp(b));
  EXPECT_EQ(sa.rfind("# schema=1\n", 0), 0u);
}

TEST(Cli, ConfigAndFlagOverrides) {
  const auto cfg = write_file("run.ini", "[system]\nlambda_tilde = 0.2\n[baths]\nT1 = 300\nT2 = 700\n"
                                         "[sweep]\nparam = lambda_tilde\nvalues = 0.1,0.2\n");
  const auto out = scratch() / "s.csv";
  ASSERT_EQ(run_cli("steady --config " + cfg.string() + " --steady-tol 1e-4 --out " + out.string()), 0);
  std::ifstream in(out);
  const auto t = read_csv(in);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_GT(t.num(1, "sigma2_norm"), 0.5);
  EXPECT_LT(t.num(1, "residual"), 1e-4);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("modes --preset fig1a --out " + (scratch() / "m.csv").string()), 0);
  EXPECT_EQ(run_cli("steady --bogus-flag"), 1);
  EXPECT_EQ(run_cli("steady --preset fig2a"), 1);  // preset belongs to another subcommand
  const auto cfg = write_file("bad.ini", "[system]\nfoo = 1\n");
  EXPECT_EQ(run_cli("steady --config " + cfg.string()), 1);
  const auto nodamp = write_file("nodamp.ini", "[system]\ngamma_tilde = 0\n");
  EXPECT_EQ(run_cli("steady --config " + nodamp.string() + " --out " + (scratch() / "n.csv").string()), 2);
  EXPECT_NE(slurp(scratch() / "n.csv").find("NoConvergence"), std::string::npos);
}

TEST(Cli, VerifyPresetPasses) {
  EXPECT_EQ(run_cli("verify --preset fig1a > " + (scratch() / "v.txt").string()), 0);
  EXPECT_NE(slurp(scratch() / "v.txt").find("PASS identical_ratios_constant"), std::string::npos);
}
