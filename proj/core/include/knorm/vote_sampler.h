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

#ifndef KNORM_VOTE_SAMPLER_H_
#define KNORM_VOTE_SAMPLER_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "knorm/geometry.h"
#include "knorm/rng.h"

namespace knorm {

// Step of a staircase path through the product of two simplices: advance in
// the first factor or in the second.
enum class Step : uint8_t { kFirst, kSecond };

using TypeVector = std::vector<Step>;

// Split of the coordinates {0, ..., d-1} (zero-based) into the block that
// carries the top |first| values of a facet of the permutohedron and the rest.
struct FacePartition {
  std::vector<int> first;
  std::vector<int> second;
};

// Unnormalized weights w_j, j = 1..d-1 (returned at index j - 1), of the
// pyramids over the facet classes of CH(P_d):
//   w_j = C(d, j) * j^(j - 3/2) (d - j)^(d - j - 3/2)
//         * sqrt(j (d - j)^2 + (d - j) j^2) / 2.
// Summing w_j / (d - 1) gives vol(CH(P_d)) = d^(d - 3/2). Values overflow
// to infinity for large d; see FaceClassLogWeights. Fails for d < 2.
absl::StatusOr<std::vector<double>> FaceClassWeights(int d);

// Natural logarithms of FaceClassWeights, finite for every d >= 2.
absl::StatusOr<std::vector<double>> FaceClassLogWeights(int d);

// Staircase simplex of the direct sum of `first` and `second` (simplices on
// disjoint coordinate supports of the same ambient space), translated by
// `offset`. Vertex i is first[a_i] + second[b_i] + offset where the path
// (a_i, b_i) starts at (0, 0) and follows `tv`. Requires tv to contain
// exactly dim(first) kFirst steps and dim(second) kSecond steps.
absl::StatusOr<Simplex> InterleavingSimplex(const Simplex& first,
                                            const Simplex& second,
                                            const Point& offset,
                                            const TypeVector& tv);

// Uniform sampler for B_vote = CH(P_d u -P_d), with P_d the permutations of
// (0, 1, ..., d - 1).
//
// CH(P_d) is star-triangulated from its center: a facet class j is drawn by
// pyramid volume, the facet is a product CH(P_j) x CH(P_{d-j}) triangulated
// recursively and combined through a uniform staircase, and the center is
// appended as apex. The ball is the cylinder CH(P_d) - [0, d - 1] * 1, so a
// uniform point of CH(P_d) is shifted along -1 by a uniform amount.
class VoteSampler {
 public:
  // Requires d >= 2.
  static absl::StatusOr<VoteSampler> Create(int d);

  int d() const { return d_; }

  // Random (d-1)-simplex of the triangulation of CH(P_d), drawn with
  // probability proportional to its volume. Vertices are listed staircase
  // first and apex last.
  Simplex SamplePermutohedronSimplex(RngStream& rng) const;

  // Uniform point of CH(P_d).
  Point SamplePermutohedron(RngStream& rng) const;

  // Uniform point of B_vote.
  Point Sample(RngStream& rng) const;

  // Facet class j in [1, n - 1] of CH(P_n), 2 <= n <= d.
  int SampleFaceClass(int n, RngStream& rng) const;

 private:
  explicit VoteSampler(int d) : d_(d) {}

  struct Level {
    int j;
    FacePartition partition;
    TypeVector tv;
  };
  Level SampleLevel(int n, RngStream& rng) const;
  Simplex SimplexRecursive(int n, RngStream& rng) const;
  void CombineRecursive(int n, const double* weights, double* out,
                        RngStream& rng) const;

  int d_;
  // cdf_[n][j - 1] = P(class <= j) for CH(P_n).
  std::vector<std::vector<double>> cdf_;
};

}  // namespace knorm

#endif  // KNORM_VOTE_SAMPLER_H_
