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

// Noise mechanisms: the epsilon-DP K-norm mechanism over the Sum, Count and
// Vote balls, and rho-zCDP Gaussian noise shaped by closed-form minimum
// ellipses.

#ifndef KNORM_MECHANISMS_H_
#define KNORM_MECHANISMS_H_

#include <cstdint>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "knorm/ball.h"
#include "knorm/geometry.h"
#include "knorm/rng.h"

namespace knorm {

struct KNormConfig {
  BallSpec ball;
  double epsilon = 1.0;
  // Scale of the ball; a contribution bound b != 1 multiplies it.
  double sensitivity = 1.0;
  // The statistic T(X) that receives the noise.
  Point statistic;
};

// K-norm mechanism: output density proportional to
// exp(-epsilon * ||y - T(X)||_K / sensitivity). Draws T(X) + sensitivity * r
// * z with r ~ Gamma(d + 1, scale 1 / epsilon) and z uniform on the ball.
class KNormMechanism {
 public:
  // Fails on an invalid ball, a nonpositive or non-finite epsilon or
  // sensitivity, or a statistic whose length is not d.
  static absl::StatusOr<KNormMechanism> Create(KNormConfig config);

  const KNormConfig& config() const { return config_; }

  Point AddNoise(RngStream& rng) const;

 private:
  KNormMechanism(KNormConfig config, BallSampler sampler)
      : config_(std::move(config)), sampler_(std::move(sampler)) {}

  KNormConfig config_;
  BallSampler sampler_;
};

// One K-norm draw; builds the ball sampler on every call.
absl::StatusOr<Point> KNormSample(const KNormConfig& config, RngStream& rng);

// Origin-centered ellipse {x : x^T A x <= 1} whose principal axes are
// u = (1, ..., 1) / sqrt(d) with length a1 and the orthogonal complement of u
// with common length a2.
struct EllipseSpec {
  int d = 1;
  double a1 = 1.0;
  double a2 = 1.0;
};

absl::Status ValidateEllipseSpec(const EllipseSpec& e);

// Ball of radius r as an EllipseSpec.
EllipseSpec SphereEllipse(int d, double r);

// Minimum ellipse around B_count for 1 <= k <= d / 2, with
//   lambda = (k / d) (sqrt(k) + sqrt((d - k)(d - 1)))^2,
//   a1 = (lambda k^2 / d)^(1/4), a2 = (lambda k (d - k) / (d (d - 1)))^(1/4).
// Larger k is rejected as an unsupported regime.
absl::StatusOr<EllipseSpec> CountMinEllipse(int d, int k);

// Minimum ellipse around B_vote, d >= 2, with |w1| = (d - 1) sqrt(d) / 2,
// |w2| = sqrt(d (d^2 - 1) / 12), lambda = (|w1| + sqrt(d - 1) |w2|)^2,
//   a1 = (lambda |w1|^2)^(1/4), a2 = (lambda |w2|^2 / (d - 1))^(1/4).
absl::StatusOr<EllipseSpec> VoteMinEllipse(int d);

// E|Z|^2 for Z uniform in the ellipse: (a1^2 + (d - 1) a2^2) / (d + 2).
double EllipseExpectedSqNorm(const EllipseSpec& e);

// x^T A x = (u.x)^2 / a1^2 + (|x|^2 - (u.x)^2) / a2^2.
double EllipseQuadraticForm(const EllipseSpec& e, const Point& x);

// M y with M = a2 I + ((a1 - a2) / d) 1 1^T, the linear map taking the unit
// ball onto the ellipse.
Point EllipseTransform(const EllipseSpec& e, const Point& y);

struct CdpConfig {
  double rho = 1.0;
  EllipseSpec ellipse;
  Point statistic;
};

absl::Status ValidateCdpConfig(const CdpConfig& config);

// statistic + Z / sqrt(2 rho) with Z ~ N(0, M M^T): X ~ N(0, I_d),
// s = (1/d) sum a2 X_i, Z_i = a2 X_i + s (a1 / a2 - 1). M is never formed.
absl::StatusOr<Point> EllipticGaussianNoise(const CdpConfig& config,
                                            RngStream& rng);

// Same distribution as EllipticGaussianNoise, computed by `worker_count`
// threads. Coordinate i draws from RngStream::Substream(seed, {draw, i});
// workers fill disjoint coordinate blocks, the sum for s is reduced in index
// order by one thread, and the correction is applied in parallel. The result
// is bit-identical for every worker_count, and worker_count = 1 runs the
// same code on the calling thread.
absl::StatusOr<Point> ParallelEllipticNoise(const CdpConfig& config,
                                            int worker_count, uint64_t seed,
                                            uint64_t draw);

}  // namespace knorm

#endif  // KNORM_MECHANISMS_H_
