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
#include "knorm/geometry.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"

namespace knorm {
namespace {

// Relative pivot threshold for the affine-rank check.
constexpr double kRankTolerance = 1e-12;

// Rank of the rows of `m` by Gaussian elimination with partial pivoting.
int NumericalRank(std::vector<std::vector<double>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  double scale = 0.0;
  for (const auto& row : m) {
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) return 0;
  const double eps = kRankTolerance * scale;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    for (int r = rank + 1; r < rows; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    }
    if (std::abs(m[pivot][c]) <= eps) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      const double f = m[r][c] / m[rank][c];
      if (f == 0.0) continue;
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// One-orthant gauge max(|u|_inf, |u|_1 / k).
double OrthantGauge(double inf_norm, double l1_norm, int k) {
  return std::max(inf_norm, l1_norm / k);
}

}  // namespace

absl::Status ValidateSimplex(const Simplex& s) {
  if (s.vertices.empty()) {
    return absl::InvalidArgumentError("Simplex has no vertices");
  }
  const size_t n = s.vertices[0].size();
  if (n == 0) {
    return absl::InvalidArgumentError("Simplex vertices must be nonempty");
  }
  for (const Point& v : s.vertices) {
    if (v.size() != n) {
      return absl::InvalidArgumentError(
          "Simplex vertices have inconsistent dimensions");
    }
    for (double c : v) {
      if (!std::isfinite(c)) {
        return absl::InvalidArgumentError("Simplex vertex is not finite");
      }
    }
  }
  const int dim = s.dimension();
  if (dim > static_cast<int>(n)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Simplex has ", s.vertices.size(), " vertices in dimension ", n));
  }
  std::vector<std::vector<double>> diffs;
  diffs.reserve(dim);
  for (int i = 1; i <= dim; ++i) {
    std::vector<double> row(n);
    for (size_t c = 0; c < n; ++c) {
      row[c] = s.vertices[i][c] - s.vertices[0][c];
    }
    diffs.push_back(std::move(row));
  }
  if (NumericalRank(std::move(diffs)) != dim) {
    return absl::InvalidArgumentError(
        "Degenerate simplex: vertices are affinely dependent");
  }
  return absl::OkStatus();
}

std::vector<double> SampleSimplexWeights(int count, RngStream& rng) {
  std::vector<double> cuts(count + 1);
  cuts[0] = 0.0;
  cuts[count] = 1.0;
  for (int i = 1; i < count; ++i) cuts[i] = rng.Uniform();
  std::sort(cuts.begin() + 1, cuts.begin() + count);
  std::vector<double> weights(count);
  for (int i = 0; i < count; ++i) weights[i] = cuts[i + 1] - cuts[i];
  return weights;
}

Point Combine(const Simplex& s, const std::vector<double>& weights) {
  Point p(s.ambient_dimension(), 0.0);
  for (size_t i = 0; i < s.vertices.size(); ++i) {
    const double w = weights[i];
    const Point& v = s.vertices[i];
    for (size_t c = 0; c < p.size(); ++c) p[c] += w * v[c];
  }
  return p;
}

Point SampleSimplexUnchecked(const Simplex& s, RngStream& rng) {
  return Combine(s, SampleSimplexWeights(static_cast<int>(s.vertices.size()),
                                         rng));
}

absl::StatusOr<Point> SampleSimplex(const Simplex& s, RngStream& rng) {
  if (absl::Status status = ValidateSimplex(s); !status.ok()) return status;
  return SampleSimplexUnchecked(s, rng);
}

Simplex FundamentalSimplex(int d) {
  Simplex s;
  s.vertices.reserve(d + 1);
  for (int i = 0; i <= d; ++i) {
    Point f(d, 0.0);
    for (int c = d - i; c < d; ++c) f[c] = 1.0;
    s.vertices.push_back(std::move(f));
  }
  return s;
}

Point SampleFundamentalSimplex(int d, RngStream& rng) {
  Point x(d);
  if (d <= 0) return x;
  while (true) {
    for (double& v : x) v = rng.Uniform();
    std::sort(x.begin(), x.end());
    bool ok = x.front() > 0.0;
    for (int i = 1; ok && i < d; ++i) ok = x[i - 1] < x[i];
    if (ok) return x;
  }
}

absl::StatusOr<Point> ApplyPermutation(const Permutation& sigma,
                                       const Point& x) {
  if (sigma.size() != static_cast<int>(x.size())) {
    return absl::InvalidArgumentError(
        absl::StrCat("Permutation of size ", sigma.size(),
                     " applied to a point of dimension ", x.size()));
  }
  Point y(x.size());
  for (int i = 0; i < sigma.size(); ++i) y[i] = x[sigma.entries()[i] - 1];
  return y;
}

Point PhiMapUnchecked(const Point& x) {
  Point y(x.size());
  double prev = 0.0;
  for (size_t j = 0; j < x.size(); ++j) {
    y[j] = prev - x[j] + (prev < x[j] ? 1.0 : 0.0);
    prev = x[j];
  }
  return y;
}

absl::StatusOr<Point> PhiMap(const Point& x) {
  if (x.empty()) {
    return absl::InvalidArgumentError("PhiMap needs a nonempty point");
  }
  for (double v : x) {
    if (!(v > 0.0 && v < 1.0)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "PhiMap needs coordinates strictly inside (0, 1); got ", v));
    }
  }
  Point sorted = x;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return absl::InvalidArgumentError("PhiMap input has tied coordinates");
  }
  return PhiMapUnchecked(x);
}

double SumGauge(const Point& x, int k) {
  double inf_norm = 0.0;
  double l1_norm = 0.0;
  for (double v : x) {
    inf_norm = std::max(inf_norm, std::abs(v));
    l1_norm += std::abs(v);
  }
  return OrthantGauge(inf_norm, l1_norm, k);
}

double CountGauge(const Point& x, int k) {
  double pos_inf = 0.0, pos_l1 = 0.0, neg_inf = 0.0, neg_l1 = 0.0;
  for (double v : x) {
    if (v > 0) {
      pos_inf = std::max(pos_inf, v);
      pos_l1 += v;
    } else {
      neg_inf = std::max(neg_inf, -v);
      neg_l1 -= v;
    }
  }
  return OrthantGauge(pos_inf, pos_l1, k) + OrthantGauge(neg_inf, neg_l1, k);
}

bool SumBallContains(const Point& x, int k) {
  double l1_norm = 0.0;
  for (double v : x) {
    if (std::abs(v) > 1.0 + kMembershipTolerance) return false;
    l1_norm += std::abs(v);
  }
  return l1_norm <= k + kMembershipTolerance;
}

bool CountBallContains(const Point& x, int k) {
  return CountGauge(x, k) <= 1.0 + kMembershipTolerance;
}

bool VoteBallContains(const Point& x) {
  const int d = static_cast<int>(x.size());
  if (d == 0) return false;
  double sum = 0.0;
  for (double v : x) sum += v;
  const double top_total = 0.5 * d * (d - 1.0);
  const double c = (top_total - sum) / d;
  if (c < -kMembershipTolerance || c > d - 1.0 + kMembershipTolerance) {
    return false;
  }
  Point y(x);
  for (double& v : y) v += c;
  std::sort(y.begin(), y.end(), std::greater<double>());
  double prefix = 0.0;
  double bound = 0.0;
  for (int m = 1; m <= d; ++m) {
    prefix += y[m - 1];
    bound += d - m;
    if (prefix > bound + kMembershipTolerance) return false;
  }
  return std::abs(prefix - bound) <= kMembershipTolerance * d;
}

}  // namespace knorm
