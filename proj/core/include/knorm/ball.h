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

// Identity of the three norm balls and a uniform sampler over any of them.

#ifndef KNORM_BALL_H_
#define KNORM_BALL_H_

#include "absl/strings/string_view.h"
#include <variant>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "knorm/count_sampler.h"
#include "knorm/exactcomb.h"
#include "knorm/geometry.h"
#include "knorm/rng.h"
#include "knorm/sum_sampler.h"
#include "knorm/vote_sampler.h"

namespace knorm {

enum class Problem { kSum, kCount, kVote };

absl::string_view ProblemName(Problem problem);
absl::StatusOr<Problem> ParseProblem(absl::string_view name);

// Unit ball of the norm induced by a problem's sensitivity space. `k` is the
// contribution bound and is ignored for Vote.
struct BallSpec {
  Problem problem = Problem::kSum;
  int d = 1;
  int k = 1;

  static BallSpec Sum(int d, int k) { return {Problem::kSum, d, k}; }
  static BallSpec Count(int d, int k) { return {Problem::kCount, d, k}; }
  static BallSpec Vote(int d) { return {Problem::kVote, d, 0}; }
};

// Sum and Count need 1 <= k <= d; Vote needs d >= 2.
absl::Status ValidateBallSpec(const BallSpec& ball);

// Membership with tolerance kMembershipTolerance.
bool BallContains(const BallSpec& ball, const Point& x);

// Exact volumes: 2^d sum_{i<=k} A[d][i-1] / d! for Sum, the sum of the
// orthant class weights for Count.
absl::StatusOr<BigRational> SumBallVolume(int d, int k);
absl::StatusOr<BigRational> CountBallVolume(int d, int k);

// ln vol(B_vote) = ln(d^(d - 3/2) (d - 1) sqrt(d)) = (d - 1) ln d + ln(d - 1).
double VoteBallLogVolume(int d);

// Natural log of the ball volume for any problem.
absl::StatusOr<double> BallLogVolume(const BallSpec& ball);

// Uniform sampler over any of the three balls.
class BallSampler {
 public:
  static absl::StatusOr<BallSampler> Create(const BallSpec& ball);

  const BallSpec& spec() const { return spec_; }
  Point Sample(RngStream& rng) const;

 private:
  using Impl = std::variant<SumSampler, CountSampler, VoteSampler>;
  BallSampler(BallSpec spec, Impl impl)
      : spec_(spec), impl_(std::move(impl)) {}

  BallSpec spec_;
  Impl impl_;
};

}  // namespace knorm

#endif  // KNORM_BALL_H_
