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
#include "knorm/exactcomb.h"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace knorm {
namespace {

const BigNat& Zero() {
  static const BigNat* const zero = new BigNat(0);
  return *zero;
}

}  // namespace

BigNat Factorial(int n) {
  BigNat result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigNat Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigNat result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigNat UniformBelow(const BigNat& n, RngStream& rng) {
  if (n <= std::numeric_limits<uint64_t>::max()) {
    return BigNat(rng.UniformInt(static_cast<uint64_t>(n)));
  }
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - 64 * (words - 1);
  const uint64_t top_mask =
      top_bits == 64 ? ~uint64_t{0} : (uint64_t{1} << top_bits) - 1;
  while (true) {
    BigNat candidate = rng() & top_mask;
    for (unsigned w = 1; w < words; ++w) {
      candidate <<= 64;
      candidate |= rng();
    }
    if (candidate < n) return candidate;
  }
}

absl::StatusOr<Permutation> Permutation::FromEntries(std::vector<int> entries) {
  const int d = static_cast<int>(entries.size());
  if (d == 0) {
    return absl::InvalidArgumentError("Permutation needs at least one entry");
  }
  std::vector<bool> seen(d + 1, false);
  for (int v : entries) {
    if (v < 1 || v > d || seen[v]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "Permutation entries must be a bijection on {1..", d, "}; got ", v));
    }
    seen[v] = true;
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::Identity(int d) {
  std::vector<int> entries(std::max(d, 0));
  for (int i = 0; i < d; ++i) entries[i] = i + 1;
  return Permutation(std::move(entries));
}

int Permutation::AscentCount() const {
  int ascents = 0;
  for (size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] < entries_[i + 1]) ++ascents;
  }
  return ascents;
}

Permutation SampleRandomPermutation(int d, RngStream& rng) {
  Permutation sigma = Permutation::Identity(d);
  std::vector<int>& e = sigma.entries_;
  for (int i = d - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.UniformInt(i + 1));
    std::swap(e[i], e[j]);
  }
  return sigma;
}

absl::StatusOr<ExactDiscrete> ExactDiscrete::Create(std::vector<BigNat> weights) {
  if (weights.empty()) {
    return absl::InvalidArgumentError("ExactDiscrete needs at least one weight");
  }
  ExactDiscrete dist;
  dist.cumulative_.reserve(weights.size());
  BigNat running = 0;
  for (const BigNat& w : weights) {
    if (w < 0) {
      return absl::InvalidArgumentError("ExactDiscrete weights must be >= 0");
    }
    running += w;
    dist.cumulative_.push_back(running);
  }
  if (running == 0) {
    return absl::InvalidArgumentError("ExactDiscrete weights sum to zero");
  }
  if (running <= std::numeric_limits<uint64_t>::max()) {
    for (const BigNat& c : dist.cumulative_) {
      dist.small_cumulative_.push_back(static_cast<uint64_t>(c));
    }
  }
  return dist;
}

int ExactDiscrete::Sample(RngStream& rng) const {
  if (!small_cumulative_.empty()) {
    const uint64_t u = rng.UniformInt(small_cumulative_.back());
    return static_cast<int>(
        std::upper_bound(small_cumulative_.begin(), small_cumulative_.end(), u) -
        small_cumulative_.begin());
  }
  const BigNat u = UniformBelow(cumulative_.back(), rng);
  return static_cast<int>(
      std::upper_bound(cumulative_.begin(), cumulative_.end(), u) -
      cumulative_.begin());
}

absl::StatusOr<EulerianTable> EulerianTable::Build(int d_max) {
  if (d_max < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("Eulerian table needs d_max >= 1; got ", d_max));
  }
  EulerianTable table;
  table.d_max_ = d_max;
  table.rows_.resize(d_max + 1);
  table.rows_[0] = {BigNat(1)};
  for (int x = 1; x <= d_max; ++x) {
    std::vector<BigNat>& row = table.rows_[x];
    row.resize(x);
    for (int y = 0; y < x; ++y) {
      row[y] = (y + 1) * table.At(x - 1, y);
      if (y >= 1) row[y] += (x - y) * table.At(x - 1, y - 1);
    }
  }

  table.coins_.resize(d_max + 1);
  for (int m = 2; m <= d_max; ++m) {
    table.coins_[m].resize(m);
    for (int j = 0; j < m; ++j) {
      const BigNat num = (m - j) * table.At(m - 1, j - 1);
      const BigNat& den = table.At(m, j);
      Coin& coin = table.coins_[m][j];
      if (num == 0) {
        coin.kind = Coin::kNever;
      } else if (num == den) {
        coin.kind = Coin::kAlways;
      } else {
        coin.kind = Coin::kCompare;
        const BigNat scaled = (num << 128) / den;
        coin.threshold = (static_cast<uint128>(static_cast<uint64_t>(
                              scaled >> 64))
                          << 64) |
                         static_cast<uint64_t>(scaled & ~uint64_t{0});
      }
    }
  }
  return table;
}

const BigNat& EulerianTable::At(int x, int y) const {
  const std::vector<BigNat>& row = rows_[x];
  if (y < 0 || y >= static_cast<int>(row.size())) return Zero();
  return row[y];
}

BigNat EulerianTable::RowPrefixSum(int x, int count) const {
  BigNat sum = 0;
  for (int y = 0; y < count; ++y) sum += At(x, y);
  return sum;
}

absl::StatusOr<BigRational> EulerianTable::SliceVolume(int d, int j) const {
  if (d < 1 || d > d_max_ || j < 1 || j > d) {
    return absl::OutOfRangeError(absl::StrCat(
        "SliceVolume needs 1 <= j <= d <= ", d_max_, "; got d=", d, ", j=", j));
  }
  return BigRational(At(d, j - 1), Factorial(d));
}

BigRational EulerianTable::HeadsProbability(int m, int j) const {
  return BigRational((m - j) * At(m - 1, j - 1), At(m, j));
}

bool EulerianTable::FlipHeads(int m, int j, RngStream& rng) const {
  const Coin& coin = coins_[m][j];
  switch (coin.kind) {
    case Coin::kNever:
      return false;
    case Coin::kAlways:
      return true;
    case Coin::kCompare:
      return rng.Uniform128() < coin.threshold;
  }
  return false;
}

absl::StatusOr<Permutation> EulerianTable::SampleFixedAscentPermutation(
    int d, int j, RngStream& rng) const {
  if (d < 1 || d > d_max_) {
    return absl::OutOfRangeError(absl::StrCat(
        "Permutation size must be in [1, ", d_max_, "]; got ", d));
  }
  if (j < 0 || j > d - 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Ascent count must be in [0, ", d - 1, "]; got ", j));
  }
  return SampleUnchecked(d, j, rng);
}

Permutation EulerianTable::SampleUnchecked(int d, int j, RngStream& rng) const {
  // Walk the recurrence from (d, j) down to (1, 0), recording for each m
  // whether m is inserted so as to create a new ascent.
  std::vector<bool> heads(d + 1, false);
  int remaining = j;
  for (int m = d; m >= 2; --m) {
    heads[m] = FlipHeads(m, remaining, rng);
    if (heads[m]) --remaining;
  }

  std::vector<int> perm;
  perm.reserve(d);
  perm.push_back(1);
  int ascents = 0;
  for (int m = 2; m <= d; ++m) {
    const int len = m - 1;
    // Gap g inserts before perm[g]; gap len appends.
    int gap = 0;
    if (heads[m]) {
      // Descent gaps or the end: each adds one ascent.
      const int choices = len - ascents;
      int r = static_cast<int>(rng.UniformInt(choices));
      gap = len;
      for (int g = 1; g < len; ++g) {
        if (perm[g - 1] > perm[g] && r-- == 0) {
          gap = g;
          break;
        }
      }
      ++ascents;
    } else {
      // Ascent gaps or the beginning: the ascent count is unchanged.
      const int choices = ascents + 1;
      int r = static_cast<int>(rng.UniformInt(choices));
      gap = 0;
      if (r > 0) {
        for (int g = 1; g < len; ++g) {
          if (perm[g - 1] < perm[g] && --r == 0) {
            gap = g;
            break;
          }
        }
      }
    }
    perm.insert(perm.begin() + gap, m);
  }
  return Permutation(std::move(perm));
}

}  // namespace knorm
