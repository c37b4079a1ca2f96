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
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "absl/status/status.h"
#include "boost/math/distributions/beta.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "knorm/ball.h"
#include "knorm/geometry.h"
#include "testing/oracles.h"
#include "testing/stats.h"
#include "testing/status_matchers.h"

namespace knorm {
namespace {

using ::knorm::testing::BallVertices;
using ::knorm::testing::ChiSquarePValue;
using ::knorm::testing::EhrhartVolume;
using ::knorm::testing::GridHistogram;
using ::knorm::testing::KsPValue;
using ::knorm::testing::KsTwoSamplePValue;
using ::knorm::testing::RejectionOracle;
using ::knorm::testing::StatusIs;
using ::knorm::testing::TotalVariation;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

constexpr int kDraws = 100000;

OrthantIndex MakeOrthant(std::vector<int8_t> signs) {
  OrthantIndex orthant;
  orthant.positives = static_cast<int>(std::count(signs.begin(), signs.end(), 1));
  orthant.signs = std::move(signs);
  return orthant;
}

BigRational Total(const std::vector<BigRational>& weights) {
  BigRational total = 0;
  for (const BigRational& w : weights) total += w;
  return total;
}

TEST(CountSamplerTest, CreateValidates) {
  EXPECT_THAT(CountSampler::Create(0, 1),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("d >= 1")));
  EXPECT_THAT(CountSampler::Create(3, 4),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("k")));
}

TEST(OrthantClassWeightsTest, Examples) {
  ASSERT_OK_AND_ASSIGN(const CountSampler d2k1, CountSampler::Create(2, 1));
  EXPECT_THAT(d2k1.OrthantClassWeights(),
              ElementsAre(BigRational(1, 2), BigRational(1), BigRational(1, 2)));
  EXPECT_EQ(Total(d2k1.OrthantClassWeights()), 2);
  ASSERT_OK_AND_ASSIGN(const CountSampler d2k2, CountSampler::Create(2, 2));
  // CH([0,1]^2 u [-1,0]^2) is a hexagon: the cube minus two corner
  // triangles in the mixed orthants.
  EXPECT_EQ(Total(d2k2.OrthantClassWeights()), 3);
  ASSERT_OK_AND_ASSIGN(const CountSampler d3k1, CountSampler::Create(3, 1));
  EXPECT_EQ(Total(d3k1.OrthantClassWeights()), BigRational(4, 3));
}

TEST(OrthantClassWeightsTest, TotalMatchesLatticePointVolume) {
  for (int d = 1; d <= 4; ++d) {
    for (int k = 1; k <= d; ++k) {
      ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(d, k));
      EXPECT_EQ(Total(sampler.OrthantClassWeights()),
                EhrhartVolume(BallVertices(BallSpec::Count(d, k))))
          << "d=" << d << " k=" << k;
    }
  }
}

TEST(OrthantClassWeightsTest, SymmetricInClass) {
  ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(30, 7));
  const std::vector<BigRational>& w = sampler.OrthantClassWeights();
  for (int j = 0; j <= 30; ++j) EXPECT_EQ(w[j], w[30 - j]);
}

std::vector<int64_t> ClassCounts(const CountSampler& sampler, int draws,
                                 RngStream& rng) {
  std::vector<int64_t> counts(sampler.d() + 1, 0);
  for (int i = 0; i < draws; ++i) ++counts[sampler.SampleOrthant(rng).positives];
  return counts;
}

TEST(SampleOrthantTest, ClassFrequencies) {
  RngStream rng(1);
  ASSERT_OK_AND_ASSIGN(const CountSampler d2k1, CountSampler::Create(2, 1));
  EXPECT_GT(ChiSquarePValue(ClassCounts(d2k1, kDraws, rng), {0.25, 0.5, 0.25}), 0.001);
  ASSERT_OK_AND_ASSIGN(const CountSampler d1k1, CountSampler::Create(1, 1));
  EXPECT_GT(ChiSquarePValue(ClassCounts(d1k1, kDraws, rng), {0.5, 0.5}), 0.001);
  ASSERT_OK_AND_ASSIGN(const CountSampler d3k1, CountSampler::Create(3, 1));
  EXPECT_GT(ChiSquarePValue(ClassCounts(d3k1, kDraws, rng),
                            {1.0 / 8, 3.0 / 8, 3.0 / 8, 1.0 / 8}),
            0.001);
}

TEST(SampleOrthantTest, SignPatternUniformWithinClass) {
  ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(4, 2));
  RngStream rng(2);
  std::map<std::vector<int8_t>, int64_t> counts;
  for (int i = 0; i < kDraws; ++i) {
    const OrthantIndex orthant = sampler.SampleOrthant(rng);
    ASSERT_EQ(std::count(orthant.signs.begin(), orthant.signs.end(), 1),
              orthant.positives);
    if (orthant.positives == 2) ++counts[orthant.signs];
  }
  ASSERT_EQ(counts.size(), 6u);
  std::vector<int64_t> observed;
  for (const auto& [signs, c] : counts) observed.push_back(c);
  EXPECT_GT(ChiSquarePValue(observed, std::vector<double>(6, 1.0 / 6)), 0.001);
}

TEST(SampleCrossSectionTest, Validates) {
  ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(3, 1));
  RngStream rng(3);
  EXPECT_THAT(sampler.SampleCrossSection(MakeOrthant({1, -1}), rng),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("2 signs")));
  EXPECT_THAT(sampler.SampleCrossSection(MakeOrthant({1, 0, -1}), rng),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("+1 or -1")));
  OrthantIndex wrong = MakeOrthant({1, 1, -1});
  wrong.positives = 1;
  EXPECT_THAT(sampler.SampleCrossSection(wrong, rng),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("declares")));
}

TEST(SampleCrossSectionTest, MixedTriangleCentroid) {
  ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(2, 1));
  RngStream rng(4);
  double m0 = 0.0;
  double m1 = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const Point x = *sampler.SampleCrossSection(MakeOrthant({1, -1}), rng);
    ASSERT_GE(x[0], 0.0);
    ASSERT_LE(x[1], 0.0);
    ASSERT_LE(x[0] - x[1], 1.0 + 1e-12);
    m0 += x[0] / kDraws;
    m1 += x[1] / kDraws;
  }
  EXPECT_NEAR(m0, 1.0 / 3, 0.01);
  EXPECT_NEAR(m1, -1.0 / 3, 0.01);
}

// One-orthant gauge max(|u|_inf, |u|_1 / k) of the positive part.
double PositiveGauge(const Point& x, int k) {
  double linf = 0.0;
  double l1 = 0.0;
  for (double v : x) {
    if (v <= 0.0) continue;
    linf = std::max(linf, v);
    l1 += v;
  }
  return std::max(linf, l1 / k);
}

TEST(SampleCrossSectionTest, PositiveGaugeIsBeta) {
  RngStream rng(5);
  struct Case {
    int d;
    int k;
    std::vector<int8_t> signs;
  };
  for (const Case& c : {Case{3, 1, {1, -1, -1}}, Case{3, 2, {1, -1, -1}},
                        Case{5, 2, {1, 1, 1, -1, -1}}, Case{6, 6, {1, 1, -1, -1, -1, -1}}}) {
    ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(c.d, c.k));
    const OrthantIndex orthant = MakeOrthant(c.signs);
    std::vector<double> t;
    for (int i = 0; i < kDraws; ++i) {
      t.push_back(PositiveGauge(*sampler.SampleCrossSection(orthant, rng), c.k));
    }
    const boost::math::beta_distribution<double> beta(orthant.positives,
                                                     c.d - orthant.positives + 1);
    EXPECT_GT(KsPValue(t, [&](double x) {
                return boost::math::cdf(beta, std::clamp(x, 0.0, 1.0));
              }),
              0.001)
        << "d=" << c.d << " k=" << c.k;
  }
}

// Fraction of cross-section samples whose positive block lies on the cut
// face sum = k t rather than on a unit face max = t.
double CutFaceShare(int d, int k, const std::vector<int8_t>& signs, RngStream& rng) {
  const CountSampler sampler = *CountSampler::Create(d, k);
  const OrthantIndex orthant = MakeOrthant(signs);
  int cut = 0;
  for (int i = 0; i < kDraws; ++i) {
    const Point x = *sampler.SampleCrossSection(orthant, rng);
    double linf = 0.0;
    double l1 = 0.0;
    for (double v : x) {
      if (v > 0.0) {
        linf = std::max(linf, v);
        l1 += v;
      }
    }
    cut += l1 / k > linf * (1.0 + 1e-12);
  }
  return static_cast<double>(cut) / kDraws;
}

TEST(SampleCrossSectionTest, NoCutFaceWhenKAtLeastJ) {
  RngStream rng(6);
  EXPECT_EQ(CutFaceShare(4, 3, {1, 1, 1, -1}, rng), 0.0);
}

TEST(SampleCrossSectionTest, CutFaceShareMatchesConeVolumes) {
  // T_3 with k = 2: three unit faces x_i = 1 (area 1/2, distance 1) and the
  // triangle x1 + x2 + x3 = 2 (area sqrt(3)/2, distance 2/sqrt(3)). Cone
  // volumes 1/6 each and 1/3 give a cut-face share of 2/5.
  RngStream rng(7);
  const double share = CutFaceShare(4, 2, {1, 1, 1, -1}, rng);
  EXPECT_NEAR(share, 0.4, 4 * std::sqrt(0.24 / kDraws));
}

TEST(CountSamplerTest, SignSupportSeparation) {
  ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(7, 3));
  RngStream rng(8);
  for (int i = 0; i < 20000; ++i) {
    const OrthantIndex orthant = sampler.SampleOrthant(rng);
    const Point x = *sampler.SampleCrossSection(orthant, rng);
    for (int c = 0; c < 7; ++c) {
      if (orthant.signs[c] > 0) {
        ASSERT_GE(x[c], 0.0);
      } else {
        ASSERT_LE(x[c], 0.0);
      }
    }
  }
}

TEST(CountSamplerTest, AllSamplesInBall) {
  RngStream rng(9);
  for (const auto& [d, k] : {std::pair{1, 1}, {2, 1}, {5, 2}, {10, 3}, {10, 10}, {60, 17}}) {
    ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(d, k));
    for (int i = 0; i < 10000; ++i) {
      ASSERT_TRUE(CountBallContains(sampler.Sample(rng), k)) << d << "," << k;
    }
  }
}

TEST(CountSamplerTest, MatchesRejectionOracle) {
  ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(2, 1));
  RngStream rng(10);
  RejectionOracle oracle(BallSpec::Count(2, 1), 10);
  constexpr int kMany = 1000000;
  std::vector<Point> direct, rejected;
  for (int i = 0; i < kMany; ++i) {
    direct.push_back(sampler.Sample(rng));
    rejected.push_back(oracle.Sample());
  }
  EXPECT_LT(TotalVariation(GridHistogram(direct, -1.0, 1.0, 8),
                           GridHistogram(rejected, -1.0, 1.0, 8)),
            0.02);
}

TEST(CountSamplerTest, ClassOccupancyMatchesExactWeights) {
  RngStream rng(11);
  for (int d : {3, 5, 8}) {
    for (int k = 1; k <= d; ++k) {
      ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(d, k));
      const std::vector<BigRational>& w = sampler.OrthantClassWeights();
      const BigRational total = Total(w);
      std::vector<double> p;
      for (const BigRational& v : w) p.push_back(static_cast<double>(v / total));
      std::vector<int64_t> counts(d + 1, 0);
      for (int i = 0; i < kDraws; ++i) {
        const Point x = sampler.Sample(rng);
        ++counts[std::count_if(x.begin(), x.end(), [](double v) { return v > 0.0; })];
      }
      EXPECT_GT(ChiSquarePValue(counts, p), 0.001) << "d=" << d << " k=" << k;
    }
  }
}

TEST(CountSamplerTest, CentralSymmetry) {
  ASSERT_OK_AND_ASSIGN(const CountSampler sampler, CountSampler::Create(5, 2));
  RngStream rng(12);
  const Point direction = {0.3, -1.0, 0.7, 0.2, 0.5};
  std::vector<double> plus, minus;
  for (int i = 0; i < kDraws; ++i) {
    const Point a = sampler.Sample(rng);
    const Point b = sampler.Sample(rng);
    double pa = 0.0;
    double pb = 0.0;
    for (int c = 0; c < 5; ++c) {
      pa += direction[c] * a[c];
      pb += direction[c] * b[c];
    }
    plus.push_back(pa);
    minus.push_back(-pb);
  }
  EXPECT_GT(KsTwoSamplePValue(plus, minus), 0.001);
}

}  // namespace
}  // namespace knorm
