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
#include "knorm/baselines.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "knorm/status_macros.h"

namespace knorm {

absl::Status ValidateLpBallSpec(const LpBallSpec& spec) {
  if (spec.d < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("lp ball needs d >= 1; got ", spec.d));
  }
  if (std::isnan(spec.p) || spec.p < 1.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("lp ball needs p >= 1; got ", spec.p));
  }
  if (!std::isfinite(spec.r) || spec.r <= 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("lp ball radius must be finite and positive; got ",
                     spec.r));
  }
  return absl::OkStatus();
}

double LpNorm(const Point& x, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  for (double v : x) sum += std::pow(std::abs(v), p);
  return std::pow(sum, 1.0 / p);
}

Point LpBallSampleUnchecked(const LpBallSpec& spec, RngStream& rng) {
  Point y(spec.d);
  if (std::isinf(spec.p)) {
    for (double& v : y) v = rng.Uniform(-spec.r, spec.r);
    return y;
  }
  double total = 0.0;
  if (spec.p == 1.0) {
    for (double& v : y) {
      v = rng.Exponential();
      total += v;
      if (rng.Bernoulli()) v = -v;
    }
  } else if (spec.p == 2.0) {
    for (double& v : y) {
      // Density exp(-t^2) is N(0, 1/2).
      v = rng.Normal() * M_SQRT1_2;
      total += v * v;
    }
  } else {
    const double inv_p = 1.0 / spec.p;
    for (double& v : y) {
      const double g = rng.Gamma(inv_p);
      total += g;
      v = std::pow(g, inv_p);
      if (rng.Bernoulli()) v = -v;
    }
  }
  total += rng.Exponential();
  const double scale = spec.r / std::pow(total, 1.0 / spec.p);
  for (double& v : y) v *= scale;
  return y;
}

absl::StatusOr<Point> LpBallSample(const LpBallSpec& spec, RngStream& rng) {
  RETURN_IF_ERROR(ValidateLpBallSpec(spec));
  return LpBallSampleUnchecked(spec, rng);
}

double LpBallLogVolume(int d, double p, double r) {
  if (std::isinf(p)) return d * std::log(2.0 * r);
  return d * (std::log(2.0 * r) + std::lgamma(1.0 + 1.0 / p)) -
         std::lgamma(1.0 + d / p);
}

absl::StatusOr<double> MinEnclosingRadius(const BallSpec& ball, double p) {
  RETURN_IF_ERROR(ValidateBallSpec(ball));
  if (std::isnan(p) || p < 1.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("Enclosing radius needs p >= 1; got ", p));
  }
  if (ball.problem != Problem::kVote) {
    return std::isinf(p) ? 1.0 : std::pow(static_cast<double>(ball.k), 1.0 / p);
  }
  const int d = ball.d;
  if (std::isinf(p)) return d - 1.0;
  // (sum_{j=1}^{d-1} j^p)^(1/p) = (d-1) (sum (j/(d-1))^p)^(1/p).
  double sum = 0.0;
  for (int j = 1; j < d; ++j) sum += std::pow(j / (d - 1.0), p);
  return (d - 1.0) * std::pow(sum, 1.0 / p);
}

absl::StatusOr<double> PredictedAcceptance(const BallSpec& ball, double p) {
  ASSIGN_OR_RETURN(const double radius, MinEnclosingRadius(ball, p));
  ASSIGN_OR_RETURN(const double log_volume, BallLogVolume(ball));
  return std::exp(log_volume - LpBallLogVolume(ball.d, p, radius));
}

absl::StatusOr<RejectionResult> RejectionSample(const BallSpec& ball, double p,
                                                RngStream& rng,
                                                int64_t max_attempts) {
  ASSIGN_OR_RETURN(const double radius, MinEnclosingRadius(ball, p));
  const LpBallSpec enclosing{ball.d, p, radius};
  RejectionResult result;
  while (result.attempts < max_attempts) {
    ++result.attempts;
    Point candidate = LpBallSampleUnchecked(enclosing, rng);
    if (BallContains(ball, candidate)) {
      result.sample = std::move(candidate);
      return result;
    }
  }
  return absl::ResourceExhaustedError(absl::StrCat(
      "Rejection sampling for ", ProblemName(ball.problem), " d=", ball.d,
      " found no accepted point in ", result.attempts, " attempts"));
}

}  // namespace knorm
