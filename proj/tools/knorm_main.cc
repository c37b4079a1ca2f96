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

// knorm: draw ball samples, privatize a statistic, or run the error-ratio
// benchmark.
//
//   knorm sample --problem count --d 3 --k 2 --n 5 --seed 7
//   knorm mechanism --problem vote --mode knorm --d 4 --epsilon 1
//       --statistic stat.txt --seed 7
//   knorm bench --problem sum --mode knorm --d 50 --k 2:48 --trials 1000
//       --seed 1 --out sum.csv
//
// Exit codes: 0 success, 2 invalid input, 3 runtime failure.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "cli_support.h"
#include "knorm/ball.h"
#include "knorm/bench.h"
#include "knorm/mechanisms.h"
#include "knorm/status_macros.h"

namespace knorm::cli {
namespace {

struct Options {
  std::string problem = "sum";
  std::string mode = "knorm";
  std::string d = "";
  std::string k = "1";
  int n = 1;
  int trials = 1000;
  uint64_t seed = 0;
  std::string out;
  int workers = 1;
  double epsilon = 0.0;
  double rho = 0.0;
  std::string statistic;
};

absl::StatusOr<int> ParseSingle(const std::string& text, const char* name) {
  ASSIGN_OR_RETURN(std::vector<int> values, ParseIntList(text));
  if (values.size() != 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("--", name, " takes a single integer; got '", text, "'"));
  }
  return values[0];
}

absl::StatusOr<BallSpec> ParseBall(const Options& o) {
  ASSIGN_OR_RETURN(const Problem problem, ParseProblem(o.problem));
  ASSIGN_OR_RETURN(const int d, ParseSingle(o.d, "d"));
  BallSpec ball = BallSpec::Vote(d);
  if (problem != Problem::kVote) {
    ASSIGN_OR_RETURN(const int k, ParseSingle(o.k, "k"));
    ball = BallSpec{problem, d, k};
  }
  RETURN_IF_ERROR(ValidateBallSpec(ball));
  return ball;
}

absl::Status RunSample(const Options& o) {
  ASSIGN_OR_RETURN(const BallSpec ball, ParseBall(o));
  if (o.n < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("--n must be >= 0; got ", o.n));
  }
  ASSIGN_OR_RETURN(const BallSampler sampler, BallSampler::Create(ball));
  RngStream rng(o.seed);
  std::string out;
  for (int i = 0; i < o.n; ++i) {
    absl::StrAppend(&out, FormatPoint(sampler.Sample(rng)), "\n");
  }
  std::cout << out;
  return absl::OkStatus();
}

absl::Status RunMechanism(const Options& o) {
  ASSIGN_OR_RETURN(const BallSpec ball, ParseBall(o));
  ASSIGN_OR_RETURN(const BenchMode mode, ParseBenchMode(o.mode));
  if (o.statistic.empty()) {
    return absl::InvalidArgumentError("--statistic is required");
  }
  ASSIGN_OR_RETURN(const Point statistic, ReadPointFile(o.statistic));
  RngStream rng(o.seed);
  Point out;
  if (mode == BenchMode::kKNorm) {
    ASSIGN_OR_RETURN(const KNormMechanism mechanism,
                     KNormMechanism::Create({ball, o.epsilon, 1.0, statistic}));
    out = mechanism.AddNoise(rng);
  } else {
    EllipseSpec ellipse;
    switch (ball.problem) {
      case Problem::kSum:
        ellipse = SphereEllipse(ball.d, std::sqrt(static_cast<double>(ball.k)));
        break;
      case Problem::kCount: {
        ASSIGN_OR_RETURN(ellipse, CountMinEllipse(ball.d, ball.k));
        break;
      }
      case Problem::kVote: {
        ASSIGN_OR_RETURN(ellipse, VoteMinEllipse(ball.d));
        break;
      }
    }
    ASSIGN_OR_RETURN(out,
                     EllipticGaussianNoise({o.rho, ellipse, statistic}, rng));
  }
  std::cout << FormatPoint(out) << "\n";
  return absl::OkStatus();
}

absl::Status RunBenchCommand(const Options& o) {
  RunConfig config;
  ASSIGN_OR_RETURN(config.problem, ParseProblem(o.problem));
  ASSIGN_OR_RETURN(config.mode, ParseBenchMode(o.mode));
  ASSIGN_OR_RETURN(config.d_values, ParseIntList(o.d));
  if (config.problem != Problem::kVote) {
    ASSIGN_OR_RETURN(config.k_values, ParseIntList(o.k));
  }
  config.trials = o.trials;
  config.seed = o.seed;
  config.output_path = o.out;
  config.workers = o.workers;
  ASSIGN_OR_RETURN(const BenchResult result, RunBench(config));
  for (const SkippedRow& s : result.skipped) {
    std::cerr << "skipped d=" << s.d << " k=" << s.k << ": " << s.reason
              << "\n";
  }
  if (config.output_path.empty() || config.output_path == "-") {
    std::cout << FormatCsv(result.rows);
    return absl::OkStatus();
  }
  return WriteCsvFile(config.output_path, result.rows);
}

void AddBallFlags(CLI::App* app, Options& o) {
  // Consumed by ExpandConfigFlag before parsing; listed here for --help.
  app->add_option("--config", "flat key=value file mirroring these flags");
  app->add_option("--problem", o.problem, "sum, count or vote")
      ->capture_default_str();
  app->add_option("--d", o.d, "dimension")->required();
  app->add_option("--k", o.k, "contribution bound (ignored for vote)")
      ->capture_default_str();
  app->add_option("--seed", o.seed, "root seed")->capture_default_str();
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact K-norm and minimum-ellipse noise samplers"};
  app.require_subcommand(1);
  Options o;

  CLI::App* sample = app.add_subcommand("sample", "print uniform ball samples");
  AddBallFlags(sample, o);
  sample->add_option("--n", o.n, "number of samples")->capture_default_str();

  CLI::App* mechanism =
      app.add_subcommand("mechanism", "privatize a statistic read from a file");
  AddBallFlags(mechanism, o);
  mechanism->add_option("--mode", o.mode, "knorm (epsilon-DP) or ellipse (rho-zCDP)")
      ->capture_default_str();
  mechanism->add_option("--epsilon", o.epsilon, "privacy parameter, knorm mode");
  mechanism->add_option("--rho", o.rho, "zCDP parameter, ellipse mode");
  mechanism->add_option("--statistic", o.statistic,
                        "file with d reals separated by commas or spaces");

  CLI::App* bench = app.add_subcommand(
      "bench",
      "error-ratio grid as CSV. knorm mode compares against the best lp ball "
      "with p in {1, 1.5, 2, 4, 8, inf}; ellipse mode compares closed forms "
      "against the minimum enclosing sphere");
  AddBallFlags(bench, o);
  bench->add_option("--mode", o.mode, "knorm or ellipse")->capture_default_str();
  bench->add_option("--trials", o.trials, "Monte Carlo trials per row")
      ->capture_default_str();
  bench->add_option("--out", o.out, "CSV path; stdout when empty or '-'");
  bench->add_option("--workers", o.workers, "rows computed concurrently")
      ->capture_default_str();
  // Lists such as "2:48" or "5,10,20" are accepted for --d and --k.

  absl::StatusOr<std::vector<std::string>> args =
      ExpandConfigFlag(std::vector<std::string>(argv, argv + argc));
  if (!args.ok()) {
    std::cerr << "error: " << args.status().message() << "\n";
    return ExitCodeFor(args.status());
  }
  // CLI11 takes the arguments after the program name, in reverse order.
  std::vector<std::string> reversed(args->rbegin(), args->rend() - 1);

  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  absl::Status status;
  if (sample->parsed()) {
    status = RunSample(o);
  } else if (mechanism->parsed()) {
    status = RunMechanism(o);
  } else {
    status = RunBenchCommand(o);
  }
  if (!status.ok()) {
    std::cerr << "error: " << status.message() << "\n";
  }
  return ExitCodeFor(status);
}

}  // namespace
}  // namespace knorm::cli

int main(int argc, char** argv) { return knorm::cli::Main(argc, argv); }
