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

#ifndef KNORM_COUNT_SAMPLER_H_
#define KNORM_COUNT_SAMPLER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "knorm/exactcomb.h"
#include "knorm/geometry.h"
#include "knorm/rng.h"
#include "knorm/sum_sampler.h"

namespace knorm {

// Orthant of R^d named by a sign per coordinate. `positives` is the number of
// +1 entries, the orthant class.
struct OrthantIndex {
  std::vector<int8_t> signs;
  int positives = 0;
};

// Uniform sampler for B_count = CH(V_+ u -V_+), where V_+ is the set of 0/1
// vectors with between 1 and k ones.
//
// An orthant class j (number of positive coordinates) is drawn with
// probability proportional to the class volume, then a uniform orthant of
// that class. Inside a mixed orthant the ball is a union of cross sections
// t * T_j x (1 - t) * T_{d-j}, where T_m is the positive orthant of the Sum
// ball in dimension m; t ~ Beta(j, d - j + 1), the positive block is drawn
// from the gauge-one boundary of T_j and the negative block from all of
// T_{d-j}.
class CountSampler {
 public:
  // Requires 1 <= k <= d. A shared table covering d may be supplied.
  static absl::StatusOr<CountSampler> Create(
      int d, int k, std::shared_ptr<const EulerianTable> table = nullptr);

  int d() const { return d_; }
  int k() const { return k_; }

  // Entry j (0..d) is the total volume of the C(d, j) orthants with j
  // positive coordinates:
  //   (sum_{i<=k} A[j][i-1] / j!) * (sum_{i<=k} A[d-j][i-1] / (d-j)!).
  // Exact; the entries sum to vol(B_count).
  const std::vector<BigRational>& OrthantClassWeights() const {
    return class_weights_;
  }

  // Class drawn by volume, then a uniform sign pattern with that many +1s.
  OrthantIndex SampleOrthant(RngStream& rng) const;

  // Uniform point of B_count restricted to orthant `orthant`. Fails if the
  // sign vector has the wrong length or entries other than +-1.
  absl::StatusOr<Point> SampleCrossSection(const OrthantIndex& orthant,
                                           RngStream& rng) const;

  // Uniform point of B_count.
  Point Sample(RngStream& rng) const;

 private:
  CountSampler() = default;

  Point CrossSection(const OrthantIndex& orthant, RngStream& rng) const;
  // Uniform point of the gauge-one boundary of T_j (dimension j >= 2).
  Point PositiveBoundary(int j, RngStream& rng) const;

  int d_ = 0;
  int k_ = 0;
  std::shared_ptr<const EulerianTable> table_;
  std::vector<BigRational> class_weights_;
  ExactDiscrete class_dist_;
  // orthant_k_[m] samples T_m with bound min(k, m); index 1..d.
  std::vector<std::optional<SumSampler>> orthant_k_;
  // orthant_km1_[m] samples T_m with bound min(k - 1, m) when k >= 2.
  std::vector<std::optional<SumSampler>> orthant_km1_;
  // Per class j: choice between the j unit faces (index 0) and the cut face
  // {sum = k} (index 1).
  std::vector<std::optional<ExactDiscrete>> face_dist_;
};

}  // namespace knorm

#endif  // KNORM_COUNT_SAMPLER_H_
