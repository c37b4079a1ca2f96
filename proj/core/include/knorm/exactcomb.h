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

// Exact combinatorics: Eulerian numbers, cube-slice volumes, exact discrete
// sampling over big-integer weights and uniform sampling of permutations with
// a prescribed number of ascents.

#ifndef KNORM_EXACTCOMB_H_
#define KNORM_EXACTCOMB_H_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "absl/status/statusor.h"
#include "knorm/rng.h"

namespace knorm {

using BigNat = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// n! as an exact integer. Requires n >= 0.
BigNat Factorial(int n);

// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
BigNat Binomial(int n, int k);

// Uniform integer in [0, n). Requires n > 0.
BigNat UniformBelow(const BigNat& n, RngStream& rng);

// Permutation of {1, ..., d} stored in one-line notation with 1-based values:
// entries()[i] is sigma(i + 1).
class Permutation {
 public:
  Permutation() = default;

  // Validates that `entries` is a bijection on {1, ..., entries.size()}.
  static absl::StatusOr<Permutation> FromEntries(std::vector<int> entries);
  static Permutation Identity(int d);

  int size() const { return static_cast<int>(entries_.size()); }
  // sigma(i) for 1-based position i.
  int operator()(int i) const { return entries_[i - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  // Number of positions i with sigma(i) < sigma(i + 1).
  int AscentCount() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {}
  friend Permutation SampleRandomPermutation(int d, RngStream& rng);
  friend class EulerianTable;

  std::vector<int> entries_;
};

// Uniform permutation of {1, ..., d} (Fisher-Yates). Returns the empty
// permutation for d < 1.
Permutation SampleRandomPermutation(int d, RngStream& rng);

// Exact sampler over a finite list of nonnegative integer weights. One draw
// compares a single uniform integer below the total against the exact
// cumulative sums, so no rounding enters the selection probabilities.
class ExactDiscrete {
 public:
  ExactDiscrete() = default;

  // Fails if `weights` is empty or sums to zero.
  static absl::StatusOr<ExactDiscrete> Create(std::vector<BigNat> weights);

  // Index i drawn with probability weights[i] / total().
  int Sample(RngStream& rng) const;

  int size() const { return static_cast<int>(cumulative_.size()); }
  const BigNat& total() const { return cumulative_.back(); }

 private:
  std::vector<BigNat> cumulative_;
  // Cumulative sums as machine words when the total fits in 64 bits.
  std::vector<uint64_t> small_cumulative_;
};

// Table of Eulerian numbers A[x][y], the number of permutations of {1..x}
// with exactly y ascents, for 0 <= x <= d_max. Immutable after construction
// and safe to share across threads.
class EulerianTable {
 public:
  // Requires d_max >= 1.
  static absl::StatusOr<EulerianTable> Build(int d_max);

  int d_max() const { return d_max_; }

  // A[x][y]; zero for y outside [0, max(x, 1)). Requires 0 <= x <= d_max.
  const BigNat& At(int x, int y) const;

  // Sum of A[x][y] for 0 <= y < count.
  BigNat RowPrefixSum(int x, int count) const;

  // Volume of the cube slice R_j = {y in (0,1)^d : j - 1 < sum(y) < j},
  // equal to A[d][j-1] / d!. Requires 1 <= j <= d <= d_max.
  absl::StatusOr<BigRational> SliceVolume(int d, int j) const;

  // Uniform permutation of {1..d} with exactly j ascents. Requires
  // 0 <= j <= d - 1 and d <= d_max.
  absl::StatusOr<Permutation> SampleFixedAscentPermutation(
      int d, int j, RngStream& rng) const;

  // Probability that a uniform member of S_{m,j} is obtained by inserting m
  // into a member of S_{m-1,j-1}, i.e. (m-j) A[m-1][j-1] / A[m][j].
  BigRational HeadsProbability(int m, int j) const;

 private:
  // Heads iff a uniform 128-bit word falls below `threshold`, which is
  // floor(P(heads) * 2^128). The absolute error of each coin is below
  // 2^-128. `kind` short-circuits the certain outcomes.
  struct Coin {
    enum Kind : uint8_t { kNever, kAlways, kCompare };
    Kind kind = kNever;
    uint128 threshold = 0;
  };

  EulerianTable() = default;

  bool FlipHeads(int m, int j, RngStream& rng) const;
  Permutation SampleUnchecked(int d, int j, RngStream& rng) const;

  int d_max_ = 0;
  std::vector<std::vector<BigNat>> rows_;
  // coins_[m][j] for 2 <= m <= d_max, 0 <= j < m.
  std::vector<std::vector<Coin>> coins_;

  friend class SumSampler;
};

}  // namespace knorm

#endif  // KNORM_EXACTCOMB_H_
