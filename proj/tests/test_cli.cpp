/*
 * Copyright 2026 The qeslab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qeslab_cli.hpp"
#include "test_support.hpp"

using namespace qeslab;

namespace {

struct CliRun {
  int code = -1;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const CliRun r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, HelpForEverySubcommand) {
  EXPECT_EQ(run({"--help"}).code, 0);
  for (const char* sub : {"classify", "spectrum", "dualize", "solve", "verify", "crosscheck"}) {
    const CliRun r = run({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_NE(r.out.find("--format"), std::string::npos) << sub;
  }
}

TEST(Cli, UsageErrorsAreValidationFailures) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"dualize"}).code, 2);  // --alpha is required
  EXPECT_EQ(run({"classify", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"classify", "--range", "3..1"}).code, 2);
  EXPECT_EQ(run({"classify", "--range", "a..b"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--twice-j", "2", "--coeff", "q=1"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--twice-j", "2", "--coeff", "+=1/0"}).code, 2);
  EXPECT_EQ(run({"solve", "--alpha", "-1", "--lambda", "-1", "--levels", "30"}).code, 2);
}

TEST(Cli, ClassifyTableAndJson) {
  const CliRun r = run({"classify", "--range", "-2..2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("harmonic oscillator"), std::string::npos);
  const Json j = run_json({"classify", "--range", "-8..4"});
  std::vector<std::string> both;
  for (const auto& row : j.at("rows"))
    if (row.at("pair_admissible").get<bool>()) both.push_back(row.at("alpha").get<std::string>());
  EXPECT_EQ(both, (std::vector<std::string>{"-1", "0", "2"}));
  const Json integer = run_json({"classify", "--integer-only", "--range", "-8..8"});
  EXPECT_EQ(integer.at("rows").size(), 6u);
}

TEST(Cli, SpectrumPreset) {
  const Json j = run_json({"spectrum", "--preset", "paper-j1-oscillator"});
  const auto ev = j.at("eigenvalues");
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_NEAR(io::parse_num(ev[0]), -std::sqrt(6.0), 1e-14);
  EXPECT_EQ(io::parse_num(ev[1]), 0.0);
  EXPECT_NEAR(io::parse_num(ev[2]), std::sqrt(6.0), 1e-14);
  EXPECT_EQ(j.at("operator").get<Sl2Operator>().matrix(1, 2), Rational(4));
  EXPECT_EQ(j.at("gauge").at("V").get<SurdPowerSum>().coefficient(Rational(6)), QuadraticSurd(Rational(1, 32)));
}

TEST(Cli, SpectrumFromCoefficientsAndSamples) {
  const CliRun r = run({"spectrum", "--twice-j", "2", "--coeff", "-0=1", "--coeff", "+=1", "--branch", "negated",
                     "--sample", "0.5", "--sample", "1.0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2.44949"), std::string::npos);
  const Json j = run_json({"spectrum", "--twice-j", "2", "--coeff", "-0=1", "--coeff", "+=1", "--branch", "negated",
                           "--sample", "1.0"});
  // zero mode at x = 1: (7/8) exp(-1/16)
  EXPECT_EQ(io::parse_nums(j.at("samples")), std::vector<double>{1.0});
  EXPECT_NEAR(io::parse_num(j.at("wavefunctions").at(1).at(0)), 0.875 * std::exp(-1.0 / 16.0), 1e-12);
}

TEST(Cli, SpectrumMatchingExitCodes) {
  const Json feasible = run_json({"spectrum", "--twice-j", "2", "--coeff", "-0=-2", "--unknown", "0", "--target", "2=9/2"});
  EXPECT_TRUE(feasible.at("match").at("feasible").get<bool>());
  const Json infeasible = run_json({"spectrum", "--preset", "coulomb-family"}, 3);
  EXPECT_FALSE(infeasible.at("match").at("feasible").get<bool>());
  EXPECT_EQ(infeasible.at("match").at("witness_exponent"), "-1");
  const CliRun osc = run({"spectrum", "--preset", "oscillator-family", "--lambda", "1/2"});
  EXPECT_EQ(osc.code, 0);
  EXPECT_NE(osc.out.find("C_{+} = 1/6"), std::string::npos);
}

TEST(Cli, DualizeAndInverse) {
  const Json j = run_json({"dualize", "--alpha", "-1", "--lambda", "-1", "--energy", "-1/2"});
  EXPECT_EQ(j.at("dual").get<RadialParameters>(), (RadialParameters{Rational(2), Rational(1, 2), Rational(4)}));
  const Json back = run_json({"dualize", "--alpha", "-1", "--lambda", "2", "--l", "1/2", "--energy", "4", "--inverse"});
  EXPECT_EQ(back.at("dual").get<RadialParameters>(), (RadialParameters{Rational(-1), Rational(0), Rational(-1, 2)}));
  EXPECT_EQ(run({"dualize", "--alpha", "-2"}).code, 2);
  EXPECT_EQ(run({"dualize", "--alpha", "-1", "--lambda", "-1"}).code, 2);  // no energy
  const CliRun pair_only = run({"dualize", "--alpha", "4"});
  EXPECT_EQ(pair_only.code, 0) << pair_only.err;
  EXPECT_NE(pair_only.out.find("-4/3"), std::string::npos);
}

TEST(Cli, SolveFormats) {
  const Json j = run_json({"solve", "--alpha", "-1", "--lambda", "-1", "--levels", "2"});
  const auto s = j.at("result").get<SpectrumResult>();
  EXPECT_NEAR(s.eigenvalues[0], -0.5, 5e-4);
  const CliRun csv = run({"solve", "--alpha", "2", "--lambda", "1/2", "--levels", "2", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("level,E,error\n1,1.5", 0), 0u) << csv.out;
  EXPECT_EQ(run({"solve", "--alpha", "-1", "--lambda", "1"}).code, 3);
  EXPECT_EQ(run({"solve", "--alpha", "-1", "--lambda", "-1", "--r-min", "0"}).code, 2);
  EXPECT_EQ(run({"solve", "--alpha", "-3", "--lambda", "-1"}).code, 2);
}

TEST(Cli, VerifyModes) {
  const Json d = run_json({"verify", "--mode", "duality", "--levels", "2"});
  EXPECT_TRUE(d.at("passed").get<bool>());
  const Json p = run_json({"verify", "--mode", "proportionality"});
  EXPECT_TRUE(p.at("passed").get<bool>());
  EXPECT_LT(io::parse_num(p.at("residual")), 1e-6);
  const Json neg = run_json({"verify", "--mode", "proportionality", "--gauge", "negated"}, 3);
  EXPECT_FALSE(neg.at("passed").get<bool>());
  const Json c = run_json({"verify", "--mode", "couplings", "--energy", "-0.5", "--count", "3"});
  const auto scan = c.get<CouplingScan>();
  EXPECT_NEAR(scan.lambdas[2], -3.0, 3e-3);
  const CliRun strict = run({"verify", "--mode", "duality", "--levels", "1", "--tolerance", "1e-9"});
  EXPECT_EQ(strict.code, 3);
}

TEST(Cli, CrosscheckReportsDisagreements) {
  const Json all = run_json({"crosscheck"}).at("reports");
  EXPECT_EQ(all.size(), 4u);
  std::size_t disagreements = 0;
  for (const auto& rep : all)
    for (const auto& claim : rep.at("claims")) disagreements += claim.at("agree").get<bool>() ? 0 : 1;
  EXPECT_GT(disagreements, 0u);
  const CliRun csv = run({"crosscheck", "--which", "oscillator_p4", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("P4"), std::string::npos);
  EXPECT_EQ(run({"crosscheck", "--which", "nope"}).code, 2);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "qeslab_cli_test.json";
  std::filesystem::remove(path);
  const CliRun r = run({"classify", "--range", "-1..1", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_EQ(j.at("rows").size(), 3u);
  std::filesystem::remove(path);
}
