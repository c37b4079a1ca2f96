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
#include "knorm/ball.h"

#include <cmath>
#include <string>
#include <utility>

#include "absl/strings/str_cat.h"
#include "knorm/status_macros.h"

namespace knorm {
namespace {

double LogOfRational(const BigRational& q) {
  // Scale numerator and denominator down to doubles through their bit
  // lengths so that huge values do not overflow.
  const BigNat num = boost::multiprecision::numerator(q);
  const BigNat den = boost::multiprecision::denominator(q);
  auto log_of = [](const BigNat& n) {
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    const unsigned shift = bits > 60 ? bits - 60 : 0;
    return std::log(static_cast<double>(BigNat(n >> shift))) +
           shift * std::log(2.0);
  };
  return log_of(num) - log_of(den);
}

}  // namespace

absl::string_view ProblemName(Problem problem) {
  switch (problem) {
    case Problem::kSum:
      return "sum";
    case Problem::kCount:
      return "count";
    case Problem::kVote:
      return "vote";
  }
  return "unknown";
}

absl::StatusOr<Problem> ParseProblem(absl::string_view name) {
  if (name == "sum") return Problem::kSum;
  if (name == "count") return Problem::kCount;
  if (name == "vote") return Problem::kVote;
  return absl::InvalidArgumentError(absl::StrCat(
      "Unknown problem '", name, "'; expected sum, count or vote"));
}

absl::Status ValidateBallSpec(const BallSpec& ball) {
  if (ball.problem == Problem::kVote) {
    if (ball.d < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("Vote ball needs d >= 2; got ", ball.d));
    }
    return absl::OkStatus();
  }
  if (ball.d < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("d must be >= 1; got ", ball.d));
  }
  if (ball.k < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be >= 1; got ", ball.k));
  }
  if (ball.k > ball.d) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be <= d; got k=", ball.k, ", d=", ball.d));
  }
  return absl::OkStatus();
}

bool BallContains(const BallSpec& ball, const Point& x) {
  switch (ball.problem) {
    case Problem::kSum:
      return SumBallContains(x, ball.k);
    case Problem::kCount:
      return CountBallContains(x, ball.k);
    case Problem::kVote:
      return VoteBallContains(x);
  }
  return false;
}

absl::StatusOr<BigRational> SumBallVolume(int d, int k) {
  RETURN_IF_ERROR(ValidateBallSpec(BallSpec::Sum(d, k)));
  ASSIGN_OR_RETURN(const EulerianTable table, EulerianTable::Build(d));
  return BigRational(table.RowPrefixSum(d, k) << d, Factorial(d));
}

absl::StatusOr<BigRational> CountBallVolume(int d, int k) {
  ASSIGN_OR_RETURN(const CountSampler sampler, CountSampler::Create(d, k));
  BigRational total = 0;
  for (const BigRational& w : sampler.OrthantClassWeights()) total += w;
  return total;
}

double VoteBallLogVolume(int d) {
  return (d - 1.0) * std::log(static_cast<double>(d)) + std::log(d - 1.0);
}

absl::StatusOr<double> BallLogVolume(const BallSpec& ball) {
  RETURN_IF_ERROR(ValidateBallSpec(ball));
  switch (ball.problem) {
    case Problem::kSum: {
      ASSIGN_OR_RETURN(const BigRational v, SumBallVolume(ball.d, ball.k));
      return LogOfRational(v);
    }
    case Problem::kCount: {
      ASSIGN_OR_RETURN(const BigRational v, CountBallVolume(ball.d, ball.k));
      return LogOfRational(v);
    }
    case Problem::kVote:
      return VoteBallLogVolume(ball.d);
  }
  return absl::InternalError("Unhandled problem");
}

absl::StatusOr<BallSampler> BallSampler::Create(const BallSpec& ball) {
  RETURN_IF_ERROR(ValidateBallSpec(ball));
  switch (ball.problem) {
    case Problem::kSum: {
      ASSIGN_OR_RETURN(SumSampler s, SumSampler::Create(ball.d, ball.k));
      return BallSampler(ball, std::move(s));
    }
    case Problem::kCount: {
      ASSIGN_OR_RETURN(CountSampler s, CountSampler::Create(ball.d, ball.k));
      return BallSampler(ball, std::move(s));
    }
    case Problem::kVote: {
      ASSIGN_OR_RETURN(VoteSampler s, VoteSampler::Create(ball.d));
      return BallSampler(ball, std::move(s));
    }
  }
  return absl::InternalError("Unhandled problem");
}

Point BallSampler::Sample(RngStream& rng) const {
  return std::visit([&rng](const auto& s) { return s.Sample(rng); }, impl_);
}

}  // namespace knorm
