//
// Copyright 2026 The knorm Authors.
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

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "cli_support.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "knorm/ball.h"
#include "testing/status_matchers.h"

namespace knorm::cli {
namespace {

using ::knorm::testing::StatusIs;
using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::Pair;
using ::testing::StartsWith;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the knorm binary with stderr folded into the output.
RunResult RunCli(const std::string& args) {
  const std::string command = absl::StrCat(KNORM_CLI_PATH, " ", args, " 2>&1");
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string WriteTemp(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::ofstream(path) << contents;
  return path;
}

std::vector<Point> ParseRows(const std::string& out) {
  std::vector<Point> rows;
  for (absl::string_view line : absl::StrSplit(out, '\n', absl::SkipEmpty())) {
    absl::StatusOr<Point> p = ParsePoint(std::string(line));
    if (p.ok()) rows.push_back(*p);
  }
  return rows;
}

TEST(ExitCodeForTest, MapsCodes) {
  EXPECT_EQ(ExitCodeFor(absl::OkStatus()), kExitOk);
  EXPECT_EQ(ExitCodeFor(absl::InvalidArgumentError("x")), kExitValidation);
  EXPECT_EQ(ExitCodeFor(absl::OutOfRangeError("x")), kExitValidation);
  EXPECT_EQ(ExitCodeFor(absl::UnavailableError("x")), kExitRuntime);
  EXPECT_EQ(ExitCodeFor(absl::ResourceExhaustedError("x")), kExitRuntime);
}

TEST(ParseIntListTest, ItemsAndRanges) {
  ASSERT_OK_AND_ASSIGN(const std::vector<int> v, ParseIntList("2,5:7,10:20:5"));
  EXPECT_THAT(v, ElementsAre(2, 5, 6, 7, 10, 15, 20));
  ASSERT_OK_AND_ASSIGN(const std::vector<int> one, ParseIntList(" 50 "));
  EXPECT_THAT(one, ElementsAre(50));
  EXPECT_THAT(ParseIntList(""), StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ParseIntList("3,,4"), StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ParseIntList("7:3"), StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ParseIntList("1:9:0"), StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ParseIntList("1:2:3:4"), StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ParseIntList("x"), StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("'x'")));
}

TEST(PointTest, FormatAndParseRoundTrip) {
  const Point x = {0.1, -2.0, 1e-300, 12345.678};
  EXPECT_EQ(FormatPoint({0.5, -2.0}), "0.5,-2");
  ASSERT_OK_AND_ASSIGN(const Point back, ParsePoint(FormatPoint(x)));
  EXPECT_EQ(back, x);
  ASSERT_OK_AND_ASSIGN(const Point spaced, ParsePoint("1 2,\t3\n"));
  EXPECT_THAT(spaced, ElementsAre(1.0, 2.0, 3.0));
  EXPECT_THAT(ParsePoint("1,abc"), StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ParsePoint("1,inf"), StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ReadPointFile("/nonexistent/stat.txt"),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("Cannot read")));
}

TEST(ParseFlatConfigTest, Entries) {
  ASSERT_OK_AND_ASSIGN(const auto entries,
                       ParseFlatConfig("# grid\nproblem = count\n\n--d=50\nk=\"2:49\"\n"));
  EXPECT_THAT(entries, ElementsAre(Pair("problem", "count"), Pair("d", "50"), Pair("k", "2:49")));
  EXPECT_THAT(ParseFlatConfig("problem count"),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("line 1")));
  EXPECT_THAT(ParseFlatConfig("=3"), StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ParseFlatConfig("config=x"), StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(ExpandConfigFlagTest, InjectsAfterSubcommandAndKeepsExplicitFlags) {
  const std::string path = WriteTemp("expand.cfg", "d=5\nk=2\n");
  ASSERT_OK_AND_ASSIGN(
      const std::vector<std::string> args,
      ExpandConfigFlag({"knorm", "sample", "--config", path, "--k", "3"}));
  EXPECT_THAT(args, ElementsAre("knorm", "sample", "--d", "5", "--k", "3"));
  ASSERT_OK_AND_ASSIGN(const std::vector<std::string> eq,
                       ExpandConfigFlag({"knorm", "bench", "--config=" + path}));
  EXPECT_THAT(eq, ElementsAre("knorm", "bench", "--d", "5", "--k", "2"));
  ASSERT_OK_AND_ASSIGN(const std::vector<std::string> none,
                       ExpandConfigFlag({"knorm", "sample", "--d", "2"}));
  EXPECT_THAT(none, ElementsAre("knorm", "sample", "--d", "2"));
  EXPECT_THAT(ExpandConfigFlag({"knorm", "sample", "--config"}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ExpandConfigFlag({"knorm", "sample", "--config", "/nonexistent.cfg"}),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(CliTest, SampleIsDeterministic) {
  const RunResult a = RunCli("sample --problem sum --d 2 --k 1 --n 3 --seed 7");
  const RunResult b = RunCli("sample --problem sum --d 2 --k 1 --n 3 --seed 7");
  ASSERT_EQ(a.exit_code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const std::vector<Point> rows = ParseRows(a.out);
  ASSERT_EQ(rows.size(), 3u);
  for (const Point& x : rows) EXPECT_TRUE(BallContains(BallSpec::Sum(2, 1), x));
  EXPECT_NE(a.out, RunCli("sample --problem sum --d 2 --k 1 --n 3 --seed 8").out);
}

TEST(CliTest, RejectsBoundAboveDimension) {
  const RunResult r = RunCli("sample --problem count --d 3 --k 4");
  EXPECT_EQ(r.exit_code, kExitValidation);
  EXPECT_THAT(r.out, HasSubstr("k must be <= d"));
}

TEST(CliTest, VoteSamplesLieInTheBall) {
  const RunResult r = RunCli("sample --problem vote --d 3 --n 1000 --seed 1");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const std::vector<Point> rows = ParseRows(r.out);
  ASSERT_EQ(rows.size(), 1000u);
  for (const Point& x : rows) ASSERT_TRUE(BallContains(BallSpec::Vote(3), x));
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli("").exit_code, kExitValidation);
  EXPECT_EQ(RunCli("sample --problem sum").exit_code, kExitValidation);
  EXPECT_EQ(RunCli("sample --problem median --d 3").exit_code, kExitValidation);
  EXPECT_EQ(RunCli("sample --d 3 --n -1").exit_code, kExitValidation);
  EXPECT_EQ(RunCli("sample --d 3,4").exit_code, kExitValidation);
  EXPECT_EQ(RunCli("frobnicate").exit_code, kExitValidation);
  EXPECT_EQ(RunCli("--help").exit_code, kExitOk);
}

TEST(CliTest, MechanismAddsNoise) {
  const std::string stat = WriteTemp("stat.txt", "0,0,0,0\n");
  const std::string base =
      absl::StrCat("mechanism --problem vote --d 4 --statistic ", stat, " --seed 3");
  const RunResult a = RunCli(base + " --epsilon 1");
  ASSERT_EQ(a.exit_code, 0) << a.out;
  EXPECT_EQ(a.out, RunCli(base + " --epsilon 1").out);
  const std::vector<Point> one = ParseRows(a.out);
  const std::vector<Point> hundred = ParseRows(RunCli(base + " --epsilon 100").out);
  ASSERT_EQ(one.size(), 1u);
  ASSERT_EQ(hundred.size(), 1u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(hundred[0][i], one[0][i] / 100.0, 1e-12);

  const RunResult ellipse = RunCli(
      absl::StrCat("mechanism --problem count --d 4 --k 2 --mode ellipse --rho 0.5 --statistic ",
                   stat));
  ASSERT_EQ(ellipse.exit_code, 0) << ellipse.out;
  EXPECT_EQ(ParseRows(ellipse.out).size(), 1u);
}

TEST(CliTest, MechanismValidation) {
  const std::string stat = WriteTemp("stat3.txt", "1 2 3");
  const RunResult zero = RunCli(
      absl::StrCat("mechanism --problem sum --d 3 --k 1 --epsilon 0 --statistic ", stat));
  EXPECT_EQ(zero.exit_code, kExitValidation);
  EXPECT_THAT(zero.out, HasSubstr("epsilon"));
  const RunResult mismatch = RunCli(
      absl::StrCat("mechanism --problem sum --d 4 --k 1 --epsilon 1 --statistic ", stat));
  EXPECT_EQ(mismatch.exit_code, kExitValidation);
  EXPECT_THAT(mismatch.out, HasSubstr("dimension"));
  EXPECT_EQ(RunCli("mechanism --problem sum --d 3 --epsilon 1").exit_code, kExitValidation);
  const RunResult regime = RunCli(absl::StrCat(
      "mechanism --problem count --d 4 --k 3 --mode ellipse --rho 1 --statistic ",
      WriteTemp("stat4.txt", "0 0 0 0")));
  EXPECT_EQ(regime.exit_code, kExitValidation);
  EXPECT_THAT(regime.out, HasSubstr("unsupported regime"));
}

TEST(CliTest, BenchWritesCsvAndReportsSkippedRows) {
  const std::string out = ::testing::TempDir() + "/cli_bench.csv";
  const RunResult r = RunCli(absl::StrCat(
      "bench --problem count --mode ellipse --d 6 --k 1:4 --out ", out));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_THAT(r.out, HasSubstr("skipped d=6 k=4: unsupported regime"));
  std::ifstream file(out);
  std::string header;
  std::getline(file, header);
  EXPECT_EQ(header, "problem,mode,d,k,best_lp_p,ours_mse,baseline_mse,ratio");
  int rows = 0;
  for (std::string line; std::getline(file, line);) {
    EXPECT_THAT(line, StartsWith("count,ellipse,6,"));
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST(CliTest, BenchIsDeterministicAcrossWorkers) {
  const std::string args = "bench --problem sum --d 8 --k 1:8 --trials 100 --seed 5 --out -";
  const RunResult serial = RunCli(args);
  ASSERT_EQ(serial.exit_code, 0) << serial.out;
  EXPECT_EQ(serial.out, RunCli(args).out);
  EXPECT_EQ(serial.out, RunCli(args + " --workers 3").out);
}

TEST(CliTest, ConfigFileMirrorsFlags) {
  const std::string cfg =
      WriteTemp("sample.cfg", "# flat config\nproblem=sum\nd=2\nk=1\nn=3\nseed=7\n");
  const RunResult from_file = RunCli(absl::StrCat("sample --config ", cfg));
  ASSERT_EQ(from_file.exit_code, 0) << from_file.out;
  EXPECT_EQ(from_file.out, RunCli("sample --problem sum --d 2 --k 1 --n 3 --seed 7").out);
  EXPECT_EQ(RunCli(absl::StrCat("sample --config ", cfg, " --seed 8")).out,
            RunCli("sample --problem sum --d 2 --k 1 --n 3 --seed 8").out);
  const RunResult bad = RunCli(absl::StrCat("sample --config ", WriteTemp("bad.cfg", "d 3\n")));
  EXPECT_EQ(bad.exit_code, kExitValidation);
}

TEST(CliTest, UnwritableOutputIsARuntimeError) {
  const RunResult r = RunCli("bench --problem vote --mode ellipse --d 3 --out /nonexistent-dir/x.csv");
  EXPECT_EQ(r.exit_code, kExitRuntime);
}

}  // namespace
}  // namespace knorm::cli
