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
#include "knorm/count_sampler.h"

#include <algorithm>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "knorm/status_macros.h"

namespace knorm {

absl::StatusOr<CountSampler> CountSampler::Create(
    int d, int k, std::shared_ptr<const EulerianTable> table) {
  if (d < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("Count ball needs d >= 1; got ", d));
  }
  if (k < 1 || k > d) {
    return absl::InvalidArgumentError(
        absl::StrCat("Count ball needs 1 <= k <= d; got d=", d, ", k=", k));
  }
  if (table == nullptr) {
    ASSIGN_OR_RETURN(EulerianTable built, EulerianTable::Build(d));
    table = std::make_shared<const EulerianTable>(std::move(built));
  } else if (table->d_max() < d) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Eulerian table covers d <= ", table->d_max(), "; need ", d));
  }

  CountSampler sampler;
  sampler.d_ = d;
  sampler.k_ = k;
  sampler.table_ = table;

  // prefix[m] = sum_{i<=k} A[m][i-1], so vol(T_m) = prefix[m] / m!.
  std::vector<BigNat> prefix(d + 1);
  for (int m = 0; m <= d; ++m) prefix[m] = table->RowPrefixSum(m, k);

  // Class weights scaled by d! are the integers C(d, j) prefix[j] prefix[d-j].
  std::vector<BigNat> scaled(d + 1);
  const BigNat d_factorial = Factorial(d);
  for (int j = 0; j <= d; ++j) {
    scaled[j] = Binomial(d, j) * prefix[j] * prefix[d - j];
    sampler.class_weights_.push_back(BigRational(scaled[j], d_factorial));
  }
  ASSIGN_OR_RETURN(sampler.class_dist_, ExactDiscrete::Create(scaled));

  sampler.orthant_k_.resize(d + 1);
  sampler.orthant_km1_.resize(d + 1);
  for (int m = 1; m <= d; ++m) {
    ASSIGN_OR_RETURN(SumSampler s,
                     SumSampler::Create(m, std::min(k, m), table));
    sampler.orthant_k_[m].emplace(std::move(s));
    if (k >= 2) {
      ASSIGN_OR_RETURN(SumSampler s1,
                       SumSampler::Create(m, std::min(k - 1, m), table));
      sampler.orthant_km1_[m].emplace(std::move(s1));
    }
  }

  // Boundary of T_j: j unit faces {u_i = 1}, each with (j-1)-volume
  // prefix_{k-1}(j-1) / (j-1)!, and when k < j the cut face {sum u = k}.
  // Weighting faces by volume times distance to the origin gives the cone
  // volumes; the cut face's projected volume A[j-1][k-1] / (j-1)! carries the
  // factor k. The common 1 / (j-1)! is dropped.
  sampler.face_dist_.resize(d + 1);
  for (int j = 2; j < d; ++j) {
    const BigNat unit_faces = j * table->RowPrefixSum(j - 1, k - 1);
    const BigNat cut_face = k < j ? k * table->At(j - 1, k - 1) : BigNat(0);
    ASSIGN_OR_RETURN(ExactDiscrete faces,
                     ExactDiscrete::Create({unit_faces, cut_face}));
    sampler.face_dist_[j].emplace(std::move(faces));
  }
  return sampler;
}

OrthantIndex CountSampler::SampleOrthant(RngStream& rng) const {
  const int j = class_dist_.Sample(rng);
  std::vector<int> order(d_);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < j; ++i) {
    const int pick = i + static_cast<int>(rng.UniformInt(d_ - i));
    std::swap(order[i], order[pick]);
  }
  OrthantIndex orthant;
  orthant.signs.assign(d_, -1);
  orthant.positives = j;
  for (int i = 0; i < j; ++i) orthant.signs[order[i]] = 1;
  return orthant;
}

absl::StatusOr<Point> CountSampler::SampleCrossSection(
    const OrthantIndex& orthant, RngStream& rng) const {
  if (static_cast<int>(orthant.signs.size()) != d_) {
    return absl::InvalidArgumentError(
        absl::StrCat("Orthant has ", orthant.signs.size(),
                     " signs; sampler dimension is ", d_));
  }
  int positives = 0;
  for (int8_t s : orthant.signs) {
    if (s != 1 && s != -1) {
      return absl::InvalidArgumentError("Orthant signs must be +1 or -1");
    }
    positives += s == 1;
  }
  if (positives != orthant.positives) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Orthant declares ", orthant.positives, " positives but has ",
        positives));
  }
  return CrossSection(orthant, rng);
}

Point CountSampler::PositiveBoundary(int j, RngStream& rng) const {
  Point p(j);
  if (face_dist_[j]->Sample(rng) == 0) {
    const int unit = static_cast<int>(rng.UniformInt(j));
    const Point rest = orthant_km1_[j - 1]->SamplePositiveOrthant(rng);
    for (int i = 0, r = 0; i < j; ++i) p[i] = i == unit ? 1.0 : rest[r++];
    return p;
  }
  // The cut face projects onto the slice R_k one dimension down.
  const Point q = orthant_k_[j - 1]->SampleSlice(k_, rng);
  double sum = 0.0;
  for (int i = 0; i < j - 1; ++i) {
    p[i] = q[i];
    sum += q[i];
  }
  p[j - 1] = k_ - sum;
  return p;
}

Point CountSampler::CrossSection(const OrthantIndex& orthant,
                                 RngStream& rng) const {
  const int j = orthant.positives;
  if (j == 0 || j == d_) {
    Point p = orthant_k_[d_]->SamplePositiveOrthant(rng);
    if (j == 0) {
      for (double& v : p) v = -v;
    }
    return p;
  }
  const double t = rng.Beta(j, d_ - j + 1);
  const Point p1 = j == 1 ? Point{1.0} : PositiveBoundary(j, rng);
  const Point p2 = orthant_k_[d_ - j]->SamplePositiveOrthant(rng);
  Point x(d_);
  for (int i = 0, a = 0, b = 0; i < d_; ++i) {
    x[i] = orthant.signs[i] == 1 ? t * p1[a++] : -(1.0 - t) * p2[b++];
  }
  return x;
}

Point CountSampler::Sample(RngStream& rng) const {
  return CrossSection(SampleOrthant(rng), rng);
}

}  // namespace knorm
