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
#include "knorm/sum_sampler.h"

#include <memory>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "knorm/status_macros.h"

namespace knorm {

absl::StatusOr<SumSampler> SumSampler::Create(
    int d, int k, std::shared_ptr<const EulerianTable> table) {
  if (d < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("Sum ball needs d >= 1; got ", d));
  }
  if (k < 1 || k > d) {
    return absl::InvalidArgumentError(
        absl::StrCat("Sum ball needs 1 <= k <= d; got d=", d, ", k=", k));
  }
  if (table == nullptr) {
    ASSIGN_OR_RETURN(EulerianTable built, EulerianTable::Build(d));
    table = std::make_shared<const EulerianTable>(std::move(built));
  } else if (table->d_max() < d) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Eulerian table covers d <= ", table->d_max(), "; need ", d));
  }
  std::vector<BigNat> weights;
  weights.reserve(k);
  for (int j = 1; j <= k; ++j) weights.push_back(table->At(d, j - 1));
  ASSIGN_OR_RETURN(ExactDiscrete slices, ExactDiscrete::Create(weights));
  return SumSampler(d, k, std::move(table), std::move(slices));
}

int SumSampler::SampleSliceIndex(RngStream& rng) const {
  return slices_.Sample(rng) + 1;
}

Point SumSampler::SampleSlice(int j, RngStream& rng) const {
  Point y(d_);
  while (true) {
    const Permutation sigma = table_->SampleUnchecked(d_, j - 1, rng);
    const Point x = SampleFundamentalSimplex(d_, rng);
    double prev = 0.0;
    bool interior = true;
    for (int i = 0; i < d_; ++i) {
      const double xi = x[sigma.entries()[i] - 1];
      y[i] = prev - xi + (prev < xi ? 1.0 : 0.0);
      interior = interior && y[i] > 0.0 && y[i] < 1.0;
      prev = xi;
    }
    // Rounding can land exactly on a cube face; such draws are resampled.
    if (interior) return y;
  }
}

Point SumSampler::SamplePositiveOrthant(RngStream& rng) const {
  if (k_ == d_) {
    Point y(d_);
    for (double& v : y) v = rng.UniformOpen();
    return y;
  }
  return SampleSlice(SampleSliceIndex(rng), rng);
}

Point SumSampler::Sample(RngStream& rng) const {
  if (k_ == d_) {
    Point y(d_);
    for (double& v : y) v = 2.0 * rng.UniformOpen() - 1.0;
    return y;
  }
  Point y = SamplePositiveOrthant(rng);
  for (double& v : y) {
    if (rng.Bernoulli()) v = -v;
  }
  return y;
}

}  // namespace knorm
