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

// Error-ratio benchmark: mean squared l2 norm of each ball (or minimum
// ellipse) against the best enclosing lp ball (or minimum enclosing sphere),
// written as CSV.

#ifndef KNORM_BENCH_H_
#define KNORM_BENCH_H_

#include <array>
#include <cstdint>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "knorm/ball.h"
#include "knorm/baselines.h"

namespace knorm {

enum class BenchMode { kKNorm, kEllipse };

absl::string_view BenchModeName(BenchMode mode);
absl::StatusOr<BenchMode> ParseBenchMode(absl::string_view name);

// Orders p of the lp baselines in K-norm mode.
inline constexpr std::array<double, 6> kLpGrid = {1.0, 1.5, 2.0,
                                                  4.0, 8.0, kInfinity};

inline constexpr char kCsvHeader[] =
    "problem,mode,d,k,best_lp_p,ours_mse,baseline_mse,ratio";

struct RunConfig {
  Problem problem = Problem::kSum;
  BenchMode mode = BenchMode::kKNorm;
  std::vector<int> d_values;
  // Ignored for Vote.
  std::vector<int> k_values;
  int trials = 1000;
  uint64_t seed = 0;
  std::string output_path;
  // Rows computed concurrently; the output does not depend on it.
  int workers = 1;
};

struct BenchRow {
  Problem problem = Problem::kSum;
  BenchMode mode = BenchMode::kKNorm;
  int d = 0;
  // 0 for Vote.
  int k = 0;
  // p of the best baseline; 2 in ellipse mode (the sphere).
  double best_lp_p = 2.0;
  double ours_mse = 0.0;
  double baseline_mse = 0.0;
  double ratio = 0.0;
};

struct SkippedRow {
  int d = 0;
  int k = 0;
  std::string reason;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<SkippedRow> skipped;
};

absl::Status ValidateRunConfig(const RunConfig& config);

// One row. K-norm mode averages |z|^2 over `trials` ball samples and, for
// each p in kLpGrid, over `trials` samples of the minimum enclosing lp ball;
// the smallest baseline wins. Ellipse mode uses closed forms: the minimum
// ellipse (the sqrt(k) sphere for Sum) against the minimum enclosing sphere.
//
// Trial t of the ball uses RngStream::Substream(seed, {P, M, d, k, 0, t}) and
// trial t of the q-th lp baseline uses {P, M, d, k, q + 1, t}, where P and M
// are the problem and mode indices, so a row's values depend only on its own
// parameters and the seed.
absl::StatusOr<BenchRow> RunBenchRow(Problem problem, BenchMode mode, int d,
                                     int k, int trials, uint64_t seed);

// Every (d, k) pair of the grid in order (d outer). Pairs outside a problem's
// domain, including Count ellipses with k > d/2, are skipped and reported.
absl::StatusOr<BenchResult> RunBench(const RunConfig& config);

// Shortest round-trip decimal, locale independent; "inf" for infinity.
std::string FormatDouble(double value);

// Header line and one line per row, each terminated by '\n'.
std::string FormatCsv(const std::vector<BenchRow>& rows);

absl::Status WriteCsvFile(const std::string& path,
                          const std::vector<BenchRow>& rows);

}  // namespace knorm

#endif  // KNORM_BENCH_H_
