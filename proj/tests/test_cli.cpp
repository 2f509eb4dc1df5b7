// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("relsemi_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path put(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }

  // Exit status of `relsemi <args>`, with stdout and stderr captured.
  int run(const std::string& args) {
    const std::string cmd =
        std::string(RELSEMI_CLI) + " " + args + " >" + (dir_ / "stdout").string() + " 2>" + (dir_ / "stderr").string();
    const int raw = std::system(cmd.c_str());
    out_ = slurp(dir_ / "stdout");
    err_ = slurp(dir_ / "stderr");
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::string out_, err_;
};

const char* kDamped = R"({"state_dim": 1, "matrix_real": [[-1]]})";
const char* kGrowing = R"({"state_dim": 1, "matrix_real": [[1]]})";
const char* kDisk = R"({"grid": {"m": 12, "box": {"center": [0, 0], "half_width": 1}},
  "shape": [{"disk": {"center": [0, 0], "r": 0.7}}]})";

}  // namespace

TEST_F(Cli, Parts) {
  EXPECT_EQ(run("rel parts " + put("d.json", kDamped).string()), 0);
  EXPECT_EQ(out_, "dom 1\nran 1\nker 0\nmul 0\n");
}

TEST_F(Cli, DissipativityExitCodes) {
  EXPECT_EQ(run("dissip check " + put("d.json", kDamped).string()), 0);
  EXPECT_NE(out_.find("\"passed\": true"), std::string::npos);
  EXPECT_EQ(run("dissip check " + put("g.json", kGrowing).string()), 1);
  EXPECT_EQ(run("dissip check " + put("g.json", kGrowing).string() + " --norm sup"), 1);
  EXPECT_EQ(run("dissip check " + put("d.json", kDamped).string() + " --norm max"), 2);
}

TEST_F(Cli, BadInput) {
  EXPECT_EQ(run("rel parts " + put("bad.json", "{").string()), 2);
  EXPECT_FALSE(err_.empty());
  EXPECT_EQ(run("rel parts " + (dir_ / "missing.json").string()), 2);
  EXPECT_EQ(run("spec scan " + put("d.json", kDamped).string() + " --grid 0:0.5:-2"), 2);
  EXPECT_EQ(run("nonsense"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST_F(Cli, Scan) {
  EXPECT_EQ(run("spec scan " + put("d.json", kDamped).string() + " --grid -2:1:0"), 0);
  std::istringstream in(out_);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# resolvent_set_scan v1");
  std::getline(in, line);
  EXPECT_EQ(line, "lambda_re,lambda_im,in_resolvent_set,norm_R,residual");
  // λ = -1 is the only point of the spectrum; elsewhere ‖R(λ)‖ = 1/|λ + 1| = 1.
  const char* expect_in[] = {"1", "0", "1"};
  for (const char* flag : expect_in) {
    ASSERT_TRUE(std::getline(in, line));
    std::vector<std::string> cells;
    std::istringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 5u);
    EXPECT_EQ(cells[2], flag);
    if (std::string(flag) == "1") {
      EXPECT_NEAR(std::stod(cells[3]), 1.0, 1e-14);
    } else {
      EXPECT_EQ(cells[3], "inf");
    }
  }
}

// S(t)x = (1 - e^{-t})x for graph(-1).
TEST_F(Cli, SemigroupRunIsDeterministic) {
  const auto a = put("d.json", kDamped).string();
  const auto x = put("x.json", "[1]").string();
  EXPECT_EQ(run("semigroup run " + a + " --x " + x + " --grid 0:0.5:2 --out " + (dir_ / "r1").string()), 0);
  EXPECT_EQ(run("semigroup run " + a + " --x " + x + " --grid 0:0.5:2 --out " + (dir_ / "r2").string()), 0);
  for (const char* name : {"trajectory.csv", "summary.json", "trajectory.svg"}) {
    ASSERT_TRUE(fs::exists(dir_ / "r1" / name)) << name;
    EXPECT_EQ(slurp(dir_ / "r1" / name), slurp(dir_ / "r2" / name)) << name;
  }
  EXPECT_EQ(slurp(dir_ / "r1" / "trajectory.csv").rfind("# trajectory v1\nt,u1\n0,0\n", 0), 0u);
}

TEST_F(Cli, ConvergeTk) {
  const auto fam = put("fam.json", R"({"kind": "affine", "direction": {"real": [[0]], "imag": [[1]]},
    "index": [10, 100, 1000]})");
  const auto lim = put("lim.json", R"({"graph": {"ambient_dim": 2, "field": "complex",
    "basis_real": [0, 1], "basis_imag": [0, 0]}})");
  EXPECT_EQ(run("converge tk --family " + fam.string() + " --limit " + lim.string() + " --out " +
                (dir_ / "o").string()),
            0)
      << err_;
  const std::string csv = slurp(dir_ / "o" / "report.csv");
  EXPECT_EQ(csv.rfind("# convergence_report v1\nn,kind,param,error\n", 0), 0u);
  EXPECT_TRUE(fs::exists(dir_ / "o" / "errors.svg"));
  EXPECT_EQ(run("converge tk --family " + fam.string() + " --limit " + lim.string() + " --out " +
                (dir_ / "p").string()),
            0);
  EXPECT_EQ(slurp(dir_ / "o" / "report.json"), slurp(dir_ / "p" / "report.json"));
}

TEST_F(Cli, HeatOrbit) {
  EXPECT_EQ(run("heat orbit --mask " + put("m.json", kDisk).string() + " --grid 0.1:0.1:0.3 --out " +
                (dir_ / "o").string()),
            0)
      << err_;
  EXPECT_TRUE(fs::exists(dir_ / "o" / "orbit.json"));
  EXPECT_EQ(run("heat orbit --mask " + put("m.json", kDisk).string() + " --grid 0:0.1:0.3"), 2);
}

TEST_F(Cli, HeatConverge) {
  const auto fam = put("fam.json", R"({"grid": {"m": 16, "box": {"center": [0, 0], "half_width": 1}},
    "family": {"polygons": {"center": [0, 0], "r": 0.7, "sides": [3, 6, 12]}},
    "limit": {"shape": [{"disk": {"center": [0, 0], "r": 0.7}}]}, "tol": 0.5})");
  EXPECT_EQ(run("heat converge --family " + fam.string() + " --out " + (dir_ / "o").string()), 0) << err_;
  for (const char* name : {"report.json", "report.csv", "criterion.csv", "errors.svg"})
    EXPECT_TRUE(fs::exists(dir_ / "o" / name)) << name;
  EXPECT_EQ(slurp(dir_ / "o" / "criterion.csv").rfind("# domain_criterion v1\n", 0), 0u);
}
