//
// Copyright 2026 The privconn Authors
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
//

#include "privconn/cli.h"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "privconn/report.h"

namespace privconn {
namespace {

using ::testing::HasSubstr;

constexpr std::string_view kStamp = "2026-01-01T00:00:00Z";

std::string DataFile(const std::string& name) {
  return std::string(PRIVCONN_DATA_DIR) + "/" + name;
}

Json ResultsOf(const RunResult& r) {
  return Json::parse(r.output);
}

TEST(GridSpecTest, ParsesLinearAndLog) {
  const GridSpec lin = *ParseGridSpec("0.1:2:20");
  EXPECT_EQ(lin.points, 20);
  EXPECT_FALSE(lin.log_spaced);
  const std::vector<double> v = lin.Values();
  ASSERT_EQ(v.size(), 20u);
  EXPECT_DOUBLE_EQ(v.front(), 0.1);
  EXPECT_DOUBLE_EQ(v.back(), 2.0);
  const std::vector<double> g = ParseGridSpec("1:1000:4:log")->Values();
  EXPECT_NEAR(g[1], 10.0, 1e-12);
  EXPECT_NEAR(g[2], 100.0, 1e-10);
  EXPECT_EQ(ParseGridSpec("3:3:1")->Values(), std::vector<double>{3.0});
}

TEST(GridSpecTest, RejectsMalformed) {
  for (const char* bad : {"1:2", "a:2:3", "1:2:0", "2:1:3", "0:1:3:log",
                          "1:2:3:lin", "1:2:3.5"}) {
    EXPECT_FALSE(ParseGridSpec(bad).ok()) << bad;
  }
}

TEST(AlphaFlagTest, AutoOrValue) {
  EXPECT_FALSE(ParseAlpha("auto")->has_value());
  EXPECT_EQ(**ParseAlpha("2.5"), 2.5);
  EXPECT_FALSE(ParseAlpha("1").ok());
  EXPECT_FALSE(ParseAlpha("x").ok());
}

TEST(SubcommandTest, NamesRoundTrip) {
  for (Subcommand s : {Subcommand::kPrivatize, Subcommand::kSolveB,
                       Subcommand::kConsensus, Subcommand::kBounds,
                       Subcommand::kValidate, Subcommand::kAttackDemo}) {
    EXPECT_EQ(*ParseSubcommand(SubcommandName(s)), s);
  }
  EXPECT_FALSE(ParseSubcommand("plot").ok());
}

TEST(ExitCodeTest, DistinctPerErrorClass) {
  EXPECT_EQ(ExitCodeForStatus(absl::OkStatus()), 0);
  EXPECT_EQ(ExitCodeForStatus(absl::NotFoundError("")), 1);
  EXPECT_EQ(ExitCodeForStatus(absl::InvalidArgumentError("")), 2);
  EXPECT_EQ(ExitCodeForStatus(absl::OutOfRangeError("")), 2);
  EXPECT_EQ(ExitCodeForStatus(absl::FailedPreconditionError("")), 3);
  EXPECT_EQ(ExitCodeForStatus(absl::InternalError("")), 4);
}

TEST(ExecuteTest, SolveB) {
  RunConfig c;
  c.subcommand = Subcommand::kSolveB;
  c.n = 10;
  const RunResult r = Execute(c, kStamp);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const Json j = ResultsOf(r);
  EXPECT_NEAR(j["results"]["b"].get<double>(), 7.583003, 1e-5);
  EXPECT_GE(j["results"]["slack"].get<double>(), 0.0);
}

TEST(ExecuteTest, PrivatizeFromFileIsDeterministic) {
  RunConfig c;
  c.subcommand = Subcommand::kPrivatize;
  c.input_path = DataFile("star10.edges");
  c.seed = 7;
  const RunResult a = Execute(c, kStamp);
  const RunResult b = Execute(c, kStamp);
  ASSERT_EQ(a.exit_code, 0) << a.output;
  EXPECT_EQ(a.output, b.output);
  const ReportDocument doc = *ParseReport(a.output);
  EXPECT_EQ(doc.subcommand, "privatize");
  EXPECT_EQ(doc.public_statistics["n"], 10);
  EXPECT_NEAR(doc.public_statistics["b"].get<double>(), 7.583003, 1e-5);
  // The true lambda2 is not part of the report.
  EXPECT_THAT(a.output, ::testing::Not(HasSubstr("\"lambda2\":")));
  c.seed = 8;
  EXPECT_NE(Execute(c, kStamp).output, a.output);
}

TEST(ExecuteTest, DeterministicModuloTimestamp) {
  RunConfig c;
  c.subcommand = Subcommand::kBounds;
  c.input_path = DataFile("cycle4.edges");
  Json a = Json::parse(Execute(c, "2026-01-01T00:00:00Z").output);
  Json b = Json::parse(Execute(c, "2027-06-30T12:34:56Z").output);
  EXPECT_NE(a, b);
  a.erase(std::string(kGeneratedAtKey));
  b.erase(std::string(kGeneratedAtKey));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(ExecuteTest, BoundsSweepCsv) {
  RunConfig c;
  c.subcommand = Subcommand::kBounds;
  c.n = 30;
  c.sweep_eps = *ParseGridSpec("0.1:2:20");
  c.format = OutputFormat::kCsv;
  const RunResult r = Execute(c, kStamp);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  EXPECT_THAT(header, HasSubstr("epsilon,b,d_lower_exact"));
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 20);
}

TEST(ExecuteTest, ConsensusCurve) {
  RunConfig c;
  c.subcommand = Subcommand::kConsensus;
  c.n = 10;
  c.lambda2 = 1.0;
  c.b = 7.39;
  const Json j = ResultsOf(Execute(c, kStamp));
  EXPECT_EQ(j["results"]["curve"].size(), 50u);
  EXPECT_LT(j["results"]["curve"].back()["bound"].get<double>(), 1e-3);
  EXPECT_GT(j["results"]["worst_case_settle_time"].get<double>(),
            j["results"]["settle_time"].get<double>());
}

TEST(ExecuteTest, AttackDemo) {
  RunConfig c;
  c.subcommand = Subcommand::kAttackDemo;
  const Json j = ResultsOf(Execute(c, kStamp));
  ASSERT_EQ(j["results"]["attacks"].size(), 2u);
  EXPECT_EQ(j["results"]["attacks"][0]["min_degree_lower_bound"], 2);
  EXPECT_EQ(j["results"]["attacks"][1]["consistent"].size(), 2u);
}

TEST(ExecuteTest, ValidateSensitivityPasses) {
  RunConfig c;
  c.subcommand = Subcommand::kValidate;
  c.audit = "sensitivity";
  const RunResult r = Execute(c, kStamp);
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(ResultsOf(r)["audit"]["passed"].get<bool>());
}

TEST(ExecuteTest, ErrorClassesMapToExitCodes) {
  RunConfig parse;
  parse.subcommand = Subcommand::kSolveB;
  parse.n = 10;
  parse.params.epsilon = -1.0;
  const RunResult p = Execute(parse, kStamp);
  EXPECT_EQ(p.exit_code, kExitParse);
  EXPECT_EQ(ResultsOf(p)["error"]["exit_code"], kExitParse);

  RunConfig infeasible;
  infeasible.subcommand = Subcommand::kSolveB;
  infeasible.n = 5;
  infeasible.params.adjacency = 3;
  EXPECT_EQ(Execute(infeasible, kStamp).exit_code, kExitInfeasible);

  RunConfig io;
  io.subcommand = Subcommand::kPrivatize;
  io.input_path = "/nonexistent/x.edges";
  EXPECT_EQ(Execute(io, kStamp).exit_code, kExitIo);

  RunConfig csv;
  csv.subcommand = Subcommand::kPrivatize;
  csv.format = OutputFormat::kCsv;
  EXPECT_EQ(Execute(csv, kStamp).exit_code, kExitParse);

  RunConfig audit;
  audit.subcommand = Subcommand::kValidate;
  audit.audit = "nonsense";
  EXPECT_EQ(Execute(audit, kStamp).exit_code, kExitParse);
}

int RunBinary(const std::string& args) {
  const std::string cmd =
      std::string(PRIVCONN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(BinaryTest, ExitCodesAndOutputFile) {
  EXPECT_EQ(RunBinary("solve-b --n 10"), 0);
  EXPECT_EQ(RunBinary("--help"), 0);
  EXPECT_EQ(RunBinary("solve-b --n ten"), kExitParse);
  EXPECT_EQ(RunBinary("frobnicate"), kExitParse);
  EXPECT_EQ(RunBinary("solve-b --n 5 --A 3"), kExitInfeasible);
  EXPECT_EQ(RunBinary("privatize --input /nonexistent.edges"), kExitIo);
  EXPECT_EQ(RunBinary("solve-b --n 10 --output /nonexistent/dir/out.json"),
            kExitIo);

  const std::string out = ::testing::TempDir() + "/privconn_solve.json";
  ASSERT_EQ(RunBinary("solve-b --eps 0.4 --delta 0.05 --A 1 --n 10 --output " +
                      out),
            0);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  absl::StatusOr<ReportDocument> doc = ParseReport(text.str());
  ASSERT_TRUE(doc.ok()) << doc.status();
  EXPECT_NEAR(doc->results["b"].get<double>(), 7.583003, 1e-5);
}

}  // namespace
}  // namespace privconn
