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
#include "knorm/bench.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "knorm/mechanisms.h"
#include "knorm/status_macros.h"

namespace knorm {
namespace {

double SquaredNorm(const Point& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

std::vector<uint64_t> RowKey(Problem problem, BenchMode mode, int d, int k) {
  return {static_cast<uint64_t>(problem), static_cast<uint64_t>(mode),
          static_cast<uint64_t>(d), static_cast<uint64_t>(k)};
}

RngStream TrialStream(uint64_t seed, const std::vector<uint64_t>& key,
                      uint64_t series, uint64_t trial) {
  return RngStream::Substream(seed,
                              {key[0], key[1], key[2], key[3], series, trial});
}

absl::StatusOr<BenchRow> KNormRow(const BallSpec& ball, BenchMode mode,
                                  int trials, uint64_t seed) {
  ASSIGN_OR_RETURN(const BallSampler sampler, BallSampler::Create(ball));
  const std::vector<uint64_t> key = RowKey(ball.problem, mode, ball.d, ball.k);

  double ours = 0.0;
  for (int t = 0; t < trials; ++t) {
    RngStream rng = TrialStream(seed, key, 0, t);
    ours += SquaredNorm(sampler.Sample(rng));
  }
  ours /= trials;

  double best = 0.0;
  double best_p = 0.0;
  for (size_t q = 0; q < kLpGrid.size(); ++q) {
    const double p = kLpGrid[q];
    ASSIGN_OR_RETURN(const double radius, MinEnclosingRadius(ball, p));
    const LpBallSpec lp{ball.d, p, radius};
    double mse = 0.0;
    for (int t = 0; t < trials; ++t) {
      RngStream rng = TrialStream(seed, key, q + 1, t);
      mse += SquaredNorm(LpBallSampleUnchecked(lp, rng));
    }
    mse /= trials;
    if (q == 0 || mse < best) {
      best = mse;
      best_p = p;
    }
  }
  BenchRow row;
  row.problem = ball.problem;
  row.mode = mode;
  row.d = ball.d;
  row.k = ball.k;
  row.best_lp_p = best_p;
  row.ours_mse = ours;
  row.baseline_mse = best;
  row.ratio = ours / best;
  return row;
}

absl::StatusOr<BenchRow> EllipseRow(const BallSpec& ball) {
  EllipseSpec ours;
  switch (ball.problem) {
    case Problem::kSum:
      ours = SphereEllipse(ball.d, std::sqrt(static_cast<double>(ball.k)));
      break;
    case Problem::kCount: {
      ASSIGN_OR_RETURN(ours, CountMinEllipse(ball.d, ball.k));
      break;
    }
    case Problem::kVote: {
      ASSIGN_OR_RETURN(ours, VoteMinEllipse(ball.d));
      break;
    }
  }
  ASSIGN_OR_RETURN(const double radius, MinEnclosingRadius(ball, 2.0));
  BenchRow row;
  row.problem = ball.problem;
  row.mode = BenchMode::kEllipse;
  row.d = ball.d;
  row.k = ball.k;
  row.best_lp_p = 2.0;
  row.ours_mse = EllipseExpectedSqNorm(ours);
  row.baseline_mse = EllipseExpectedSqNorm(SphereEllipse(ball.d, radius));
  row.ratio = row.ours_mse / row.baseline_mse;
  return row;
}

// Reason a grid point cannot produce a row, if any.
std::optional<std::string> SkipReason(Problem problem, BenchMode mode, int d,
                                      int k) {
  const BallSpec ball = problem == Problem::kVote ? BallSpec::Vote(d)
                                                  : BallSpec{problem, d, k};
  if (absl::Status status = ValidateBallSpec(ball); !status.ok()) {
    return std::string(status.message());
  }
  if (problem == Problem::kCount && mode == BenchMode::kEllipse && 2 * k > d) {
    return absl::StrCat("unsupported regime: Count ellipse needs k <= d/2");
  }
  return std::nullopt;
}

}  // namespace

absl::string_view BenchModeName(BenchMode mode) {
  return mode == BenchMode::kKNorm ? "knorm" : "ellipse";
}

absl::StatusOr<BenchMode> ParseBenchMode(absl::string_view name) {
  if (name == "knorm") return BenchMode::kKNorm;
  if (name == "ellipse") return BenchMode::kEllipse;
  return absl::InvalidArgumentError(
      absl::StrCat("Unknown mode '", name, "'; expected knorm or ellipse"));
}

absl::Status ValidateRunConfig(const RunConfig& config) {
  if (config.trials < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("trials must be >= 1; got ", config.trials));
  }
  if (config.workers < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("workers must be >= 1; got ", config.workers));
  }
  if (config.d_values.empty()) {
    return absl::InvalidArgumentError("At least one d value is required");
  }
  if (config.problem != Problem::kVote && config.k_values.empty()) {
    return absl::InvalidArgumentError(
        "At least one k value is required for sum and count");
  }
  return absl::OkStatus();
}

absl::StatusOr<BenchRow> RunBenchRow(Problem problem, BenchMode mode, int d,
                                     int k, int trials, uint64_t seed) {
  if (trials < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("trials must be >= 1; got ", trials));
  }
  const BallSpec ball =
      problem == Problem::kVote ? BallSpec::Vote(d) : BallSpec{problem, d, k};
  RETURN_IF_ERROR(ValidateBallSpec(ball));
  if (mode == BenchMode::kEllipse) return EllipseRow(ball);
  return KNormRow(ball, mode, trials, seed);
}

absl::StatusOr<BenchResult> RunBench(const RunConfig& config) {
  RETURN_IF_ERROR(ValidateRunConfig(config));
  const std::vector<int> vote_k = {0};
  const std::vector<int>& k_values =
      config.problem == Problem::kVote ? vote_k : config.k_values;

  struct Task {
    int d;
    int k;
  };
  std::vector<Task> tasks;
  BenchResult result;
  for (int d : config.d_values) {
    for (int k : k_values) {
      if (std::optional<std::string> reason =
              SkipReason(config.problem, config.mode, d, k)) {
        result.skipped.push_back({d, k, *std::move(reason)});
      } else {
        tasks.push_back({d, k});
      }
    }
  }

  std::vector<absl::StatusOr<BenchRow>> rows(
      tasks.size(), absl::UnknownError("row not computed"));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < tasks.size();
         i = next.fetch_add(1)) {
      rows[i] = RunBenchRow(config.problem, config.mode, tasks[i].d,
                            tasks[i].k, config.trials, config.seed);
    }
  };
  const int workers =
      static_cast<int>(std::min<size_t>(config.workers, tasks.size()));
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();

  for (absl::StatusOr<BenchRow>& row : rows) {
    if (!row.ok()) return row.status();
    result.rows.push_back(*std::move(row));
  }
  return result;
}

std::string FormatDouble(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const std::to_chars_result r =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, r.ptr);
}

std::string FormatCsv(const std::vector<BenchRow>& rows) {
  std::string out = absl::StrCat(kCsvHeader, "\n");
  for (const BenchRow& row : rows) {
    absl::StrAppend(&out, ProblemName(row.problem), ",",
                    BenchModeName(row.mode), ",", row.d, ",", row.k, ",",
                    FormatDouble(row.best_lp_p), ",",
                    FormatDouble(row.ours_mse), ",",
                    FormatDouble(row.baseline_mse), ",",
                    FormatDouble(row.ratio), "\n");
  }
  return out;
}

absl::Status WriteCsvFile(const std::string& path,
                          const std::vector<BenchRow>& rows) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return absl::UnavailableError(
        absl::StrCat("Cannot open '", path, "' for writing"));
  }
  file << FormatCsv(rows);
  file.close();
  if (!file) {
    return absl::DataLossError(absl::StrCat("Failed writing '", path, "'"));
  }
  return absl::OkStatus();
}

}  // namespace knorm
