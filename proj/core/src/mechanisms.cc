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
#include "knorm/mechanisms.h"

#include <algorithm>
#include <barrier>
#include <cmath>
#include <thread>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "knorm/status_macros.h"

namespace knorm {
namespace {

absl::Status ValidatePositive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat(name, " must be finite and positive; got ", value));
  }
  return absl::OkStatus();
}

absl::Status ValidateStatistic(const Point& statistic, int d) {
  if (static_cast<int>(statistic.size()) != d) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Statistic has dimension ", statistic.size(), "; expected ", d));
  }
  for (double v : statistic) {
    if (!std::isfinite(v)) {
      return absl::InvalidArgumentError("Statistic entries must be finite");
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<KNormMechanism> KNormMechanism::Create(KNormConfig config) {
  RETURN_IF_ERROR(ValidatePositive(config.epsilon, "epsilon"));
  RETURN_IF_ERROR(ValidatePositive(config.sensitivity, "sensitivity"));
  ASSIGN_OR_RETURN(BallSampler sampler, BallSampler::Create(config.ball));
  RETURN_IF_ERROR(ValidateStatistic(config.statistic, config.ball.d));
  return KNormMechanism(std::move(config), std::move(sampler));
}

Point KNormMechanism::AddNoise(RngStream& rng) const {
  const int d = config_.ball.d;
  const double radius = rng.Gamma(d + 1.0) / config_.epsilon;
  const Point z = sampler_.Sample(rng);
  Point out = config_.statistic;
  const double scale = config_.sensitivity * radius;
  for (int i = 0; i < d; ++i) out[i] += scale * z[i];
  return out;
}

absl::StatusOr<Point> KNormSample(const KNormConfig& config, RngStream& rng) {
  ASSIGN_OR_RETURN(const KNormMechanism mechanism, KNormMechanism::Create(config));
  return mechanism.AddNoise(rng);
}

absl::Status ValidateEllipseSpec(const EllipseSpec& e) {
  if (e.d < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("Ellipse needs d >= 1; got ", e.d));
  }
  RETURN_IF_ERROR(ValidatePositive(e.a1, "a1"));
  RETURN_IF_ERROR(ValidatePositive(e.a2, "a2"));
  return absl::OkStatus();
}

EllipseSpec SphereEllipse(int d, double r) { return {d, r, r}; }

absl::StatusOr<EllipseSpec> CountMinEllipse(int d, int k) {
  if (d < 2 || k < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Count ellipse needs d >= 2 and k >= 1; got d=", d, ", k=", k));
  }
  if (2 * k > d) {
    return absl::InvalidArgumentError(absl::StrCat(
        "unsupported regime: the Count minimum ellipse needs k <= d/2; got d=",
        d, ", k=", k));
  }
  const double dd = d;
  const double kk = k;
  const double root = std::sqrt(kk) + std::sqrt((dd - kk) * (dd - 1.0));
  const double lambda = kk / dd * root * root;
  EllipseSpec e;
  e.d = d;
  e.a1 = std::pow(lambda * kk * kk / dd, 0.25);
  e.a2 = std::pow(lambda * kk * (dd - kk) / (dd * (dd - 1.0)), 0.25);
  return e;
}

absl::StatusOr<EllipseSpec> VoteMinEllipse(int d) {
  if (d < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("Vote ellipse needs d >= 2; got ", d));
  }
  const double dd = d;
  const double w1 = (dd - 1.0) * std::sqrt(dd) / 2.0;
  const double w2 = std::sqrt(dd * (dd * dd - 1.0) / 12.0);
  const double root = w1 + std::sqrt(dd - 1.0) * w2;
  const double lambda = root * root;
  EllipseSpec e;
  e.d = d;
  e.a1 = std::pow(lambda * w1 * w1, 0.25);
  e.a2 = std::pow(lambda * w2 * w2 / (dd - 1.0), 0.25);
  return e;
}

double EllipseExpectedSqNorm(const EllipseSpec& e) {
  return (e.a1 * e.a1 + (e.d - 1.0) * e.a2 * e.a2) / (e.d + 2.0);
}

double EllipseQuadraticForm(const EllipseSpec& e, const Point& x) {
  double sum = 0.0;
  double sq = 0.0;
  for (double v : x) {
    sum += v;
    sq += v * v;
  }
  const double along_sq = sum * sum / e.d;
  const double across_sq = std::max(sq - along_sq, 0.0);
  return along_sq / (e.a1 * e.a1) + across_sq / (e.a2 * e.a2);
}

Point EllipseTransform(const EllipseSpec& e, const Point& y) {
  double sum = 0.0;
  for (double v : y) sum += v;
  const double shift = (e.a1 - e.a2) * sum / e.d;
  Point x(y.size());
  for (size_t i = 0; i < y.size(); ++i) x[i] = e.a2 * y[i] + shift;
  return x;
}

absl::Status ValidateCdpConfig(const CdpConfig& config) {
  RETURN_IF_ERROR(ValidatePositive(config.rho, "rho"));
  RETURN_IF_ERROR(ValidateEllipseSpec(config.ellipse));
  return ValidateStatistic(config.statistic, config.ellipse.d);
}

absl::StatusOr<Point> EllipticGaussianNoise(const CdpConfig& config,
                                            RngStream& rng) {
  RETURN_IF_ERROR(ValidateCdpConfig(config));
  const EllipseSpec& e = config.ellipse;
  const int d = e.d;
  std::vector<double> x(d);
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    x[i] = rng.Normal();
    s += e.a2 * x[i];
  }
  s /= d;
  const double correction = s * (-1.0 + e.a1 / e.a2);
  const double scale = 1.0 / std::sqrt(2.0 * config.rho);
  Point out = config.statistic;
  for (int i = 0; i < d; ++i) {
    out[i] += scale * (e.a2 * x[i] + correction);
  }
  return out;
}

absl::StatusOr<Point> ParallelEllipticNoise(const CdpConfig& config,
                                            int worker_count, uint64_t seed,
                                            uint64_t draw) {
  RETURN_IF_ERROR(ValidateCdpConfig(config));
  if (worker_count < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("worker_count must be >= 1; got ", worker_count));
  }
  const EllipseSpec& e = config.ellipse;
  const int d = e.d;
  const int workers = std::min(worker_count, d);
  const double scale = 1.0 / std::sqrt(2.0 * config.rho);
  std::vector<double> x(d);
  Point out = config.statistic;
  double correction = 0.0;

  // Manager step between the two phases: sum in index order, broadcast.
  auto reduce = [&]() noexcept {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += e.a2 * x[i];
    s /= d;
    correction = s * (-1.0 + e.a1 / e.a2);
  };
  std::barrier sync(workers, reduce);

  auto work = [&](int w) {
    const int begin = static_cast<int>(static_cast<int64_t>(d) * w / workers);
    const int end = static_cast<int>(static_cast<int64_t>(d) * (w + 1) / workers);
    for (int i = begin; i < end; ++i) {
      RngStream rng = RngStream::Substream(seed, {draw, static_cast<uint64_t>(i)});
      x[i] = rng.Normal();
    }
    sync.arrive_and_wait();
    for (int i = begin; i < end; ++i) {
      out[i] += scale * (e.a2 * x[i] + correction);
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (std::thread& t : threads) t.join();
  return out;
}

}  // namespace knorm
