// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "pauliprop/operator_io.hpp"
#include "pauliprop/oracle.hpp"
#include "pauliprop/verify.hpp"

using namespace pauliprop;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pauliprop_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::vector<std::vector<std::string>> csv_rows(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(OperatorIo, RoundTripIsExact) {
  std::mt19937_64 rng(71);
  const PauliSum s = random_gen::operator_sum(7, 50, rng);
  const auto dump = parse_operator(format_operator(s, {"step=4 time=0.2", "note free text"}));
  ASSERT_EQ(dump.op.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(dump.op.coefficient(s.word(i)), s.coeff(i));
  EXPECT_EQ(dump.header.at("step"), "4");
  EXPECT_EQ(dump.header.at("time"), "0.2");
}

TEST(OperatorIo, ParseErrorsCarryLineNumbers) {
  try {
    parse_operator("0.5 XX\n0.1 XYZ\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_operator("zero XX"), ParseError);
  EXPECT_THROW(parse_operator("0.5 XQ"), ParseError);
  EXPECT_THROW(parse_operator("0.5 XX extra"), ParseError);
}

TEST(OperatorIo, TrajectoryCsvColumns) {
  TrajectoryRecord rec;
  rec.step = 3;
  rec.time = 0.15;
  rec.value = 0.25;
  rec.terms = 9;
  rec.ose_half = 1.5;
  std::ostringstream out;
  write_trajectory_csv(out, {rec}, {"hello"}, true);
  EXPECT_EQ(out.str(), "# hello\nstep,time,value,terms,discarded_mass,norm_ratio,ose_half,ose_shannon\n"
                       "3,0.14999999999999999,0.25,9,0,1,1.5,nan\n");
}

TEST(CliConfig, ParsesAndEchoes) {
  const auto c = cli::parse_config(
      "# comment\nmodel = xxz\nL = 6\nJz = 0.5\nt = 1\ntau = 0.05\nK = 2^10\npolicy = bucket\nbuckets = 16\n"
      "observable = Z3\nmode = joint\nstate = neel\nseed = 4\nout_dir = /tmp/x\n");
  EXPECT_EQ(c.length, 6u);
  EXPECT_EQ(c.steps, 20u);
  EXPECT_EQ(c.policy.budget, 1024u);
  EXPECT_EQ(c.policy.kind, TruncationPolicy::Kind::TopKBucket);
  EXPECT_EQ(c.mode, MagnetizationMode::Joint);
  // Echo re-parses to the same configuration.
  std::string text;
  for (const auto& line : c.echo()) text += line.substr(std::string("config ").size()) + "\n";
  const std::string without_tau = std::regex_replace(text, std::regex("tau=[^\n]*\n"), "");
  const auto again = cli::parse_config(without_tau);
  EXPECT_EQ(again.echo(), c.echo());
}

TEST(CliConfig, RejectsInvalid) {
  EXPECT_THROW(cli::parse_config("L=4\n"), cli::ConfigError);                      // no t
  EXPECT_THROW(cli::parse_config("L=4\nt=1\n"), cli::ConfigError);                 // no steps/tau
  EXPECT_THROW(cli::parse_config("L=4\nt=1\nsteps=2\ntau=0.1\n"), cli::ConfigError);
  EXPECT_THROW(cli::parse_config("L=4\nt=1\nsteps=2\nfoo=1\n"), cli::ConfigError);
  EXPECT_THROW(cli::parse_config("L=4\nt=1\nsteps=2\nL=5\n"), cli::ConfigError);
  EXPECT_THROW(cli::parse_config("L=4\nt=1\nsteps=2\nK=0\n"), cli::ConfigError);
  EXPECT_THROW(cli::parse_config("L=4\nt=1\nsteps=2\nboundary=twisted\n"), cli::ConfigError);
  EXPECT_THROW(cli::parse_config("L=4\nt=-1\nsteps=2\n"), cli::ConfigError);
  EXPECT_THROW(cli::parse_config("L=4\nt=1\nsteps=x\n"), cli::ConfigError);
  EXPECT_THROW(cli::parse_config("L=4\nt=1\nsteps=2\npolicy=bucket\n"), cli::ConfigError);
}

TEST(CliConfig, Observables) {
  EXPECT_EQ(cli::parse_observable("Z2", 4).coefficient(PauliWord::from_string("IIZI")), 1.0);
  EXPECT_EQ(cli::parse_observable("XIIY", 4).size(), 1u);
  EXPECT_THROW(cli::parse_observable("Z9", 4), cli::ConfigError);
  EXPECT_THROW(cli::parse_observable("IIII", 4), cli::ConfigError);
  EXPECT_THROW(cli::parse_observable("XY", 4), cli::ConfigError);
}

TEST(CliSimulate, FigureSetupProducesTwoHundredRecords) {
  const fs::path dir = scratch_dir("fig2a");
  write(dir / "run.cfg", "model=xxz\nL=50\nJz=0\nt=10\ntau=0.05\nK=4096\nobservable=staggered\nmode=joint\nstate=neel\n"
                         "out_dir=" + (dir / "out").string() + "\n");
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_simulate(dir / "run.cfg", out, err), cli::kOk) << err.str();
  const auto rows = csv_rows(dir / "out" / "trajectory.csv");
  ASSERT_EQ(rows.size(), 201u);  // header + 200 records
  EXPECT_EQ(rows[0][0], "step");
  EXPECT_EQ(rows[200][0], "200");
  EXPECT_NEAR(std::stod(rows[200][1]), 10.0, 1e-12);

  std::ifstream in(dir / "out" / "trajectory.csv");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("# pauliprop version="), std::string::npos);
  EXPECT_NE(text.find("# config K=4096"), std::string::npos);
  EXPECT_NE(text.find("# term_order "), std::string::npos);
  EXPECT_NE(text.find("# term 97 1 "), std::string::npos);
}

TEST(CliSimulate, ToyConfigMatchesDenseOracle) {
  const fs::path dir = scratch_dir("toy");
  write(dir / "run.cfg", "L=2\nJx=1\nJy=0\nJz=0\nt=1.2\nsteps=12\nobservable=staggered\nmode=per_site\nstate=neel\nout_dir=" +
                             (dir / "out").string() + "\n");
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_simulate(dir / "run.cfg", out, err), cli::kOk) << err.str();
  const auto rows = csv_rows(dir / "out" / "trajectory.csv");
  const auto dense = dense_trotter_trajectory(build_xxz_chain(2, 1, 0, 0), ProductState::neel(2), staggered_observable(2), 0.1, 12);
  ASSERT_EQ(rows.size(), dense.size() + 1);
  for (std::size_t i = 0; i < dense.size(); ++i) EXPECT_NEAR(std::stod(rows[i + 1][2]), dense[i], 1e-9);
}

TEST(CliSimulate, SameConfigSameBytes) {
  const fs::path dir = scratch_dir("determinism");
  const std::string cfg = "L=8\nJz=0.5\nt=1\ntau=0.05\nK=128\nstate=random\nseed=9\nose=1\nout_dir=" + (dir / "out").string() + "\n";
  write(dir / "run.cfg", cfg);
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_simulate(dir / "run.cfg", out, err), cli::kOk) << err.str();
  std::ifstream a(dir / "out" / "trajectory.csv");
  const std::string first((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  ASSERT_EQ(cli::cmd_simulate(dir / "run.cfg", out, err), cli::kOk);
  std::ifstream b(dir / "out" / "trajectory.csv");
  const std::string second((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  EXPECT_EQ(first, second);
  EXPECT_NE(first.find("ose_half"), std::string::npos);
}

TEST(CliSimulate, ExitCodes) {
  const fs::path dir = scratch_dir("exit");
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_simulate(dir / "missing.cfg", out, err), cli::kInvalidInput);
  write(dir / "bad.cfg", "L=4\nt=1\n");
  EXPECT_EQ(cli::cmd_simulate(dir / "bad.cfg", out, err), cli::kInvalidInput);
  write(dir / "nofile.cfg", "model=file\nhamiltonian=" + (dir / "absent.txt").string() + "\nt=1\nsteps=1\n");
  EXPECT_EQ(cli::cmd_simulate(dir / "nofile.cfg", out, err), cli::kInvalidInput);
  write(dir / "h.txt", "1.0 XX\n");
  write(dir / "abort.cfg", "model=file\nhamiltonian=" + (dir / "h.txt").string() +
                               "\nt=1\nsteps=1\nobservable=XX\npolicy=weight\nweight_cap=2\nstate=none\nout_dir=" +
                               (dir / "out").string() + "\n");
  EXPECT_EQ(cli::cmd_simulate(dir / "abort.cfg", out, err), cli::kEngineAbort);
}

TEST(CliAnalyze, SnapshotsToReports) {
  const fs::path dir = scratch_dir("analyze");
  write(dir / "run.cfg", "L=12\nJz=0\nt=1\ntau=0.05\nobservable=Z6\nstate=neel\nsnapshot_every=2\nout_dir=" + (dir / "out").string() + "\n");
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_simulate(dir / "run.cfg", out, err), cli::kOk) << err.str();
  ASSERT_TRUE(fs::exists(dir / "out" / "snapshots" / "step_000002.txt"));

  cli::AnalyzeOptions opts;
  opts.input = dir / "out";
  opts.alphas = {0.5, 1.0};
  opts.budgets = {8, 32};
  opts.epsilon = 1e-3;
  ASSERT_EQ(cli::cmd_analyze(opts, out, err), cli::kOk) << err.str();
  const fs::path an = dir / "out" / "analysis";
  const auto growth = csv_rows(an / "growth.csv");
  ASSERT_EQ(growth.size(), 11u);
  for (std::size_t i = 2; i < growth.size(); ++i) EXPECT_GE(std::stoul(growth[i][2]), std::stoul(growth[i - 1][2]));
  EXPECT_GT(std::stoul(growth.back()[2]), std::stoul(growth[1][2]));
  EXPECT_EQ(csv_rows(an / "ose.csv").size(), 1u + 10 * 2);
  const auto bounds = csv_rows(an / "bounds.csv");
  EXPECT_EQ(bounds.size(), 1u + 10 * 2);
  for (std::size_t i = 1; i < bounds.size(); ++i) EXPECT_LE(std::stod(bounds[i][5]), std::stod(bounds[i][6]) + 1e-15);
  EXPECT_TRUE(fs::exists(an / "histograms" / "step_000020_magnitude.csv"));
  EXPECT_EQ(csv_rows(an / "histograms" / "step_000020_weight.csv")[0][0], "bucket_lo");
}

TEST(CliAnalyze, SingleTermDumpHasZeroEntropy) {
  const fs::path dir = scratch_dir("single");
  write(dir / "op.txt", "1 IZI\n");
  cli::AnalyzeOptions opts;
  opts.input = dir / "op.txt";
  opts.alphas = {0.25, 0.5, 1.0};
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_analyze(opts, out, err), cli::kOk) << err.str();
  for (const auto& row : csv_rows(dir / "analysis" / "ose.csv")) {
    if (row[0] == "time") continue;
    EXPECT_EQ(std::stod(row[2]), 0.0);
  }
  opts.input = dir / "nothing.txt";
  EXPECT_EQ(cli::cmd_analyze(opts, out, err), cli::kInvalidInput);
}

TEST(CliBound, ReportsPublishedBudget) {
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_bound(6.08, 1e-3, 0.5, out, err), cli::kOk);
  EXPECT_NE(out.str().find("K_required=874058"), std::string::npos);
  EXPECT_EQ(cli::cmd_bound(6.08, 1e-3, 1.0, out, err), cli::kInvalidInput);
}

TEST(CliVerify, AlgebraSuitePasses) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_verify("algebra", 7, out, err), cli::kOk);
  EXPECT_NE(out.str().find("algebra PASS"), std::string::npos);
  EXPECT_EQ(cli::cmd_verify("nonsense", 7, out, err), cli::kInvalidInput);
}

TEST(CliVerify, WitnessForInteractingChain) {
  const auto r = verify_xy_witness(0.5, 12, 3);
  EXPECT_TRUE(r.passed);
  ASSERT_FALSE(r.notes.empty());
}
