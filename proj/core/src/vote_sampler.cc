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
#include "knorm/vote_sampler.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace knorm {
namespace {

// (x - 3/2) ln x, the log of x^(x - 3/2).
double PowerTerm(double x) { return (x - 1.5) * std::log(x); }

// Staircase vertices without validation.
Simplex Staircase(const Simplex& first, const Simplex& second,
                  const Point& offset, const TypeVector& tv) {
  const int n = first.ambient_dimension();
  Simplex out;
  out.vertices.reserve(tv.size() + 1);
  size_t a = 0;
  size_t b = 0;
  for (size_t s = 0; s <= tv.size(); ++s) {
    Point v(n);
    for (int c = 0; c < n; ++c) {
      v[c] = first.vertices[a][c] + second.vertices[b][c] + offset[c];
    }
    out.vertices.push_back(std::move(v));
    if (s < tv.size()) {
      if (tv[s] == Step::kFirst) {
        ++a;
      } else {
        ++b;
      }
    }
  }
  return out;
}

std::vector<bool> Support(const Simplex& s) {
  std::vector<bool> support(s.ambient_dimension(), false);
  for (const Point& v : s.vertices) {
    for (size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0.0) support[c] = true;
    }
  }
  return support;
}

}  // namespace

absl::StatusOr<std::vector<double>> FaceClassLogWeights(int d) {
  if (d < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("Face classes need d >= 2; got ", d));
  }
  std::vector<double> logs(d - 1);
  const double log_d_factorial = std::lgamma(d + 1.0);
  for (int j = 1; j < d; ++j) {
    const double a = j;
    const double b = d - j;
    // Each pair is formed as f(a) + f(b) so that w_j and w_{d-j} are
    // bit-identical.
    const double log_binomial =
        log_d_factorial - (std::lgamma(a + 1.0) + std::lgamma(b + 1.0));
    const double log_volume = PowerTerm(a) + PowerTerm(b);
    const double log_altitude = 0.5 * std::log(a * b * d) - std::log(2.0);
    logs[j - 1] = log_binomial + log_volume + log_altitude;
  }
  return logs;
}

absl::StatusOr<std::vector<double>> FaceClassWeights(int d) {
  absl::StatusOr<std::vector<double>> logs = FaceClassLogWeights(d);
  if (!logs.ok()) return logs.status();
  for (double& w : *logs) w = std::exp(w);
  return logs;
}

absl::StatusOr<Simplex> InterleavingSimplex(const Simplex& first,
                                            const Simplex& second,
                                            const Point& offset,
                                            const TypeVector& tv) {
  if (first.vertices.empty() || second.vertices.empty()) {
    return absl::InvalidArgumentError("Interleaving needs nonempty simplices");
  }
  const int n = first.ambient_dimension();
  if (second.ambient_dimension() != n || static_cast<int>(offset.size()) != n) {
    return absl::InvalidArgumentError(
        "Interleaving operands must share one ambient dimension");
  }
  for (const Simplex* s : {&first, &second}) {
    for (const Point& v : s->vertices) {
      if (static_cast<int>(v.size()) != n) {
        return absl::InvalidArgumentError(
            "Interleaving operand has inconsistent vertex dimensions");
      }
    }
  }
  const int first_steps = static_cast<int>(
      std::count(tv.begin(), tv.end(), Step::kFirst));
  const int second_steps = static_cast<int>(tv.size()) - first_steps;
  if (first_steps != first.dimension() || second_steps != second.dimension()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Type vector has ", first_steps, " first and ", second_steps,
        " second steps; simplices have dimensions ", first.dimension(), " and ",
        second.dimension()));
  }
  const std::vector<bool> s1 = Support(first);
  const std::vector<bool> s2 = Support(second);
  for (int c = 0; c < n; ++c) {
    if (s1[c] && s2[c]) {
      return absl::InvalidArgumentError(
          absl::StrCat("Interleaving supports overlap at coordinate ", c));
    }
  }
  return Staircase(first, second, offset, tv);
}

absl::StatusOr<VoteSampler> VoteSampler::Create(int d) {
  if (d < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("Vote ball needs d >= 2; got ", d));
  }
  VoteSampler sampler(d);
  sampler.cdf_.resize(d + 1);
  for (int n = 2; n <= d; ++n) {
    absl::StatusOr<std::vector<double>> logs = FaceClassLogWeights(n);
    if (!logs.ok()) return logs.status();
    const double shift = *std::max_element(logs->begin(), logs->end());
    std::vector<double>& cdf = sampler.cdf_[n];
    cdf.resize(n - 1);
    double total = 0.0;
    for (int i = 0; i < n - 1; ++i) {
      total += std::exp((*logs)[i] - shift);
      cdf[i] = total;
    }
    for (double& c : cdf) c /= total;
    cdf.back() = 1.0;
  }
  return sampler;
}

int VoteSampler::SampleFaceClass(int n, RngStream& rng) const {
  const std::vector<double>& cdf = cdf_[n];
  const double u = rng.Uniform();
  const int index = static_cast<int>(
      std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
  return std::min(index, n - 2) + 1;
}

VoteSampler::Level VoteSampler::SampleLevel(int n, RngStream& rng) const {
  Level level;
  level.j = SampleFaceClass(n, rng);
  const int j = level.j;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.UniformInt(i + 1)]);
  }
  level.partition.first.assign(order.begin(), order.begin() + j);
  level.partition.second.assign(order.begin() + j, order.end());

  // Uniform (j - 1)-subset of the n - 2 steps are first-factor steps.
  const int steps = n - 2;
  std::vector<int> positions(steps);
  std::iota(positions.begin(), positions.end(), 0);
  level.tv.assign(steps, Step::kSecond);
  for (int i = 0; i < j - 1; ++i) {
    const int pick = i + static_cast<int>(rng.UniformInt(steps - i));
    std::swap(positions[i], positions[pick]);
    level.tv[positions[i]] = Step::kFirst;
  }
  return level;
}

Simplex VoteSampler::SimplexRecursive(int n, RngStream& rng) const {
  if (n == 1) return Simplex{{Point{0.0}}};
  const Level level = SampleLevel(n, rng);
  const int j = level.j;
  const Simplex child1 = SimplexRecursive(j, rng);
  const Simplex child2 = SimplexRecursive(n - j, rng);

  Simplex embedded1;
  for (const Point& u : child1.vertices) {
    Point v(n, 0.0);
    for (int t = 0; t < j; ++t) v[level.partition.first[t]] = u[t];
    embedded1.vertices.push_back(std::move(v));
  }
  Simplex embedded2;
  for (const Point& w : child2.vertices) {
    Point v(n, 0.0);
    for (int t = 0; t < n - j; ++t) v[level.partition.second[t]] = w[t];
    embedded2.vertices.push_back(std::move(v));
  }
  Point offset(n, 0.0);
  for (int c : level.partition.first) offset[c] = n - j;

  Simplex out = Staircase(embedded1, embedded2, offset, level.tv);
  out.vertices.push_back(Point(n, 0.5 * (n - 1)));
  return out;
}

void VoteSampler::CombineRecursive(int n, const double* weights, double* out,
                                   RngStream& rng) const {
  if (n == 1) {
    out[0] = 0.0;
    return;
  }
  const Level level = SampleLevel(n, rng);
  const int j = level.j;

  // Push the staircase weights down onto the vertices of each factor.
  std::vector<double> beta1(j, 0.0);
  std::vector<double> beta2(n - j, 0.0);
  double staircase_mass = 0.0;
  int a = 0;
  int b = 0;
  for (int s = 0; s < n - 1; ++s) {
    beta1[a] += weights[s];
    beta2[b] += weights[s];
    staircase_mass += weights[s];
    if (s < n - 2) {
      if (level.tv[s] == Step::kFirst) {
        ++a;
      } else {
        ++b;
      }
    }
  }
  const double apex = 0.5 * (n - 1) * weights[n - 1];

  std::vector<double> out1(j);
  std::vector<double> out2(n - j);
  CombineRecursive(j, beta1.data(), out1.data(), rng);
  CombineRecursive(n - j, beta2.data(), out2.data(), rng);
  const double shift1 = (n - j) * staircase_mass + apex;
  for (int t = 0; t < j; ++t) out[level.partition.first[t]] = out1[t] + shift1;
  for (int t = 0; t < n - j; ++t) {
    out[level.partition.second[t]] = out2[t] + apex;
  }
}

Simplex VoteSampler::SamplePermutohedronSimplex(RngStream& rng) const {
  return SimplexRecursive(d_, rng);
}

Point VoteSampler::SamplePermutohedron(RngStream& rng) const {
  // Barycentric weights are drawn first; the triangulation choices are then
  // made while the weighted vertex sum is accumulated, which avoids forming
  // the d x d vertex matrix.
  const std::vector<double> weights = SampleSimplexWeights(d_, rng);
  Point p(d_);
  CombineRecursive(d_, weights.data(), p.data(), rng);
  return p;
}

Point VoteSampler::Sample(RngStream& rng) const {
  Point z = SamplePermutohedron(rng);
  const double shift = rng.Uniform() * (d_ - 1);
  for (double& v : z) v -= shift;
  return z;
}

}  // namespace knorm
