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

// lp-ball baselines: uniform lp-ball sampling, minimum enclosing lp radii of
// the three balls, exact volume ratios and a rejection-sampling harness.

#ifndef KNORM_BASELINES_H_
#define KNORM_BASELINES_H_

#include <cstdint>
#include <limits>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "knorm/ball.h"
#include "knorm/geometry.h"
#include "knorm/rng.h"

namespace knorm {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// {x in R^d : |x|_p <= r}, 1 <= p <= infinity.
struct LpBallSpec {
  int d = 1;
  double p = 2.0;
  double r = 1.0;
};

absl::Status ValidateLpBallSpec(const LpBallSpec& spec);

// |x|_p, including p = infinity.
double LpNorm(const Point& x, double p);

// Uniform point of the lp ball: g_i with density proportional to
// exp(-|t|^p), e ~ Exp(1), y = r g / (sum |g_i|^p + e)^(1/p). For p not in
// {1, 2} the magnitudes are G^(1/p) with G ~ Gamma(1/p). p = infinity draws
// i.i.d. U(-r, r).
absl::StatusOr<Point> LpBallSample(const LpBallSpec& spec, RngStream& rng);

// LpBallSample without validation.
Point LpBallSampleUnchecked(const LpBallSpec& spec, RngStream& rng);

// ln of d-volume of the lp ball: d ln(2 r Gamma(1 + 1/p)) - ln Gamma(1 + d/p).
double LpBallLogVolume(int d, double p, double r);

// Smallest r with ball inside {|x|_p <= r}: k^(1/p) for Sum and Count (1 at
// p = infinity), (sum_{j<d} j^p)^(1/p) for Vote (d - 1 at p = infinity).
absl::StatusOr<double> MinEnclosingRadius(const BallSpec& ball, double p);

// vol(ball) / vol(minimum enclosing lp ball), computed in log space.
absl::StatusOr<double> PredictedAcceptance(const BallSpec& ball, double p);

struct RejectionResult {
  Point sample;
  int64_t attempts = 0;
};

// Draws from the minimum enclosing lp ball until the ball's membership
// oracle accepts. Fails with RESOURCE_EXHAUSTED after `max_attempts` draws.
absl::StatusOr<RejectionResult> RejectionSample(const BallSpec& ball, double p,
                                                RngStream& rng,
                                                int64_t max_attempts);

}  // namespace knorm

#endif  // KNORM_BASELINES_H_
