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

// Continuous geometry primitives: simplex sampling, the fundamental simplex,
// permutation actions on points, the phi map onto cube slices, and membership
// oracles for the Sum, Count and Vote balls.

#ifndef KNORM_GEOMETRY_H_
#define KNORM_GEOMETRY_H_

#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "knorm/exactcomb.h"
#include "knorm/rng.h"

namespace knorm {

// Dense real vector; the unit of samples and noise.
using Point = std::vector<double>;

// Absolute tolerance of every membership oracle.
inline constexpr double kMembershipTolerance = 1e-9;

// Convex hull of affinely independent vertices in a common ambient space.
struct Simplex {
  std::vector<Point> vertices;

  // Simplex dimension, one less than the vertex count.
  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  int ambient_dimension() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices[0].size());
  }
};

// Checks that all vertices share a dimension and are affinely independent.
absl::Status ValidateSimplex(const Simplex& s);

// Barycentric weights of a uniform point in a simplex with `count` vertices:
// the gaps between sorted uniforms on [0, 1].
std::vector<double> SampleSimplexWeights(int count, RngStream& rng);

// Uniform point in `s`. Fails on a degenerate simplex.
absl::StatusOr<Point> SampleSimplex(const Simplex& s, RngStream& rng);

// Same as SampleSimplex without the affine-independence check.
Point SampleSimplexUnchecked(const Simplex& s, RngStream& rng);

// Sum of weights[i] * vertices[i].
Point Combine(const Simplex& s, const std::vector<double>& weights);

// Vertices f_0, ..., f_d with f_i = (0, ..., 0, 1, ..., 1) ending in i ones.
Simplex FundamentalSimplex(int d);

// Uniform point of the open fundamental simplex 0 < x_1 < ... < x_d < 1,
// drawn as sorted uniforms. Ties and endpoint values are resampled.
Point SampleFundamentalSimplex(int d, RngStream& rng);

// y_i = x_{sigma(i)}. Fails on a dimension mismatch.
absl::StatusOr<Point> ApplyPermutation(const Permutation& sigma,
                                       const Point& x);

// Stanley's map y_j = x_{j-1} - x_j + [x_{j-1} < x_j] with x_0 = 0. A point
// with j ascents (counting the leading 0 < x_1 as none) lands in the slice
// j < sum(y) < j + 1. Fails on a coordinate equal to 0 or 1, outside (0, 1),
// or tied with another coordinate.
absl::StatusOr<Point> PhiMap(const Point& x);

// PhiMap without input validation.
Point PhiMapUnchecked(const Point& x);

// Gauge of B_sum = {x : |x|_inf <= 1, |x|_1 <= k}.
double SumGauge(const Point& x, int k);

// Gauge of B_count = CH(V_+ u -V_+): g(x+) + g(x-) with
// g(u) = max(|u|_inf, |u|_1 / k) applied to the positive and negative parts.
double CountGauge(const Point& x, int k);

bool SumBallContains(const Point& x, int k);
bool CountBallContains(const Point& x, int k);

// Membership in CH(P_d u -P_d), d = x.size(), where P_d is the set of
// permutations of (0, 1, ..., d - 1). The ball is the cylinder swept by
// CH(P_d) along -(1, ..., 1); the point is shifted back onto the
// permutohedron hyperplane and tested for majorization.
bool VoteBallContains(const Point& x);

}  // namespace knorm

#endif  // KNORM_GEOMETRY_H_
