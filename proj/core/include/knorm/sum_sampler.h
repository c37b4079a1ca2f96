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

#ifndef KNORM_SUM_SAMPLER_H_
#define KNORM_SUM_SAMPLER_H_

#include <memory>

#include "absl/status/statusor.h"
#include "knorm/exactcomb.h"
#include "knorm/geometry.h"
#include "knorm/rng.h"

namespace knorm {

// Uniform sampler for B_sum = {x in R^d : |x|_inf <= 1, |x|_1 <= k}.
//
// The positive orthant is cut into the cube slices R_1, ..., R_k. A slice is
// drawn with probability proportional to its volume A[d][j-1] / d!, then a
// point of R_j is obtained by pushing a uniform point of the fundamental
// simplex through a uniform permutation with j - 1 ascents and the phi map.
// Random signs complete the sample. Per-sample cost is O(d^2), dominated by
// the permutation insertions.
class SumSampler {
 public:
  // Requires 1 <= k <= d. A shared table covering d may be supplied;
  // otherwise one is built.
  static absl::StatusOr<SumSampler> Create(
      int d, int k, std::shared_ptr<const EulerianTable> table = nullptr);

  int d() const { return d_; }
  int k() const { return k_; }
  const EulerianTable& table() const { return *table_; }

  // Slice index j in [1, k] with probability A[d][j-1] / sum_{i<=k} A[d][i-1].
  int SampleSliceIndex(RngStream& rng) const;

  // Uniform point of the open slice R_j, 1 <= j <= d. Not range checked.
  Point SampleSlice(int j, RngStream& rng) const;

  // Uniform point of B_sum intersected with the open positive orthant.
  Point SamplePositiveOrthant(RngStream& rng) const;

  // Uniform point of B_sum.
  Point Sample(RngStream& rng) const;

 private:
  SumSampler(int d, int k, std::shared_ptr<const EulerianTable> table,
             ExactDiscrete slices)
      : d_(d), k_(k), table_(std::move(table)), slices_(std::move(slices)) {}

  int d_;
  int k_;
  std::shared_ptr<const EulerianTable> table_;
  ExactDiscrete slices_;
};

}  // namespace knorm

#endif  // KNORM_SUM_SAMPLER_H_
