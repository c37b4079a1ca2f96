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

#include "testing/oracles.h"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/stats.h"

namespace knorm::testing {
namespace {

using ::testing::DoubleNear;
using ::testing::Optional;
using ::testing::SizeIs;

TEST(AllPermutationsTest, EnumeratesFactorialManyDistinct) {
  EXPECT_THAT(AllPermutations(1), SizeIs(1));
  EXPECT_THAT(AllPermutations(4), SizeIs(24));
  EXPECT_EQ(AllPermutations(3)[0], (std::vector<int>{1, 2, 3}));
}

TEST(CountAscentsTest, SmallCases) {
  EXPECT_EQ(CountAscents({3, 2, 1}), 0);
  EXPECT_EQ(CountAscents({1, 2, 3}), 2);
  EXPECT_EQ(CountAscents({2, 1, 3}), 1);
}

TEST(BallVerticesTest, Counts) {
  // 3^d - 1 sign patterns restricted to at most k nonzeros.
  EXPECT_THAT(BallVertices(BallSpec::Sum(3, 3)), SizeIs(26));
  EXPECT_THAT(BallVertices(BallSpec::Sum(3, 1)), SizeIs(6));
  // 2 (2^d - 1) single-signed patterns.
  EXPECT_THAT(BallVertices(BallSpec::Count(3, 3)), SizeIs(14));
  EXPECT_THAT(BallVertices(BallSpec::Vote(3)), SizeIs(12));
}

TEST(LpGaugeTest, CrossPolytopeIsL1Norm) {
  const std::vector<Point> vertices = BallVertices(BallSpec::Sum(3, 1));
  EXPECT_THAT(LpGauge(vertices, {0.2, -0.3, 0.1}), Optional(DoubleNear(0.6, 1e-12)));
  EXPECT_THAT(LpGauge(vertices, {2.0, 0.0, 0.0}), Optional(DoubleNear(2.0, 1e-12)));
  EXPECT_THAT(LpGauge(vertices, {0.0, 0.0, 0.0}), Optional(DoubleNear(0.0, 1e-12)));
}

TEST(LpGaugeTest, CubeIsLinfNorm) {
  const std::vector<Point> vertices = BallVertices(BallSpec::Sum(3, 3));
  std::mt19937_64 engine(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Point x = {u(engine), u(engine), u(engine)};
    const double linf = std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2])});
    EXPECT_THAT(LpGauge(vertices, x), Optional(DoubleNear(linf, 1e-10)));
  }
}

TEST(LpGaugeTest, OutsideConeIsNullopt) {
  // A segment through the origin spans only one direction.
  const std::vector<Point> vertices = {{1.0, 0.0}, {-1.0, 0.0}};
  EXPECT_EQ(LpGauge(vertices, {0.0, 1.0}), std::nullopt);
}

TEST(EhrhartVolumeTest, KnownPolytopes) {
  EXPECT_EQ(EhrhartVolume(BallVertices(BallSpec::Sum(2, 2))), BigRational(4));
  EXPECT_EQ(EhrhartVolume(BallVertices(BallSpec::Sum(3, 3))), BigRational(8));
  // Cross-polytopes: 2^d / d!.
  EXPECT_EQ(EhrhartVolume(BallVertices(BallSpec::Sum(3, 1))), BigRational(4, 3));
  EXPECT_EQ(EhrhartVolume(BallVertices(BallSpec::Sum(4, 1))), BigRational(2, 3));
}

TEST(ChiSquarePValueTest, PerfectFitAndGrossMisfit) {
  EXPECT_NEAR(ChiSquarePValue({100, 100, 100}, {1.0 / 3, 1.0 / 3, 1.0 / 3}),
              1.0, 1e-12);
  EXPECT_LT(ChiSquarePValue({200, 50, 50}, {1.0 / 3, 1.0 / 3, 1.0 / 3}), 1e-6);
}

TEST(KolmogorovPValueTest, ReferenceValues) {
  // Tabulated asymptotic quantiles: P(K > 1.358) = 0.05, P(K > 1.628) = 0.01.
  EXPECT_NEAR(KolmogorovPValue(1.3581 / std::sqrt(1e8), 1e8), 0.05, 1e-3);
  EXPECT_NEAR(KolmogorovPValue(1.6276 / std::sqrt(1e8), 1e8), 0.01, 1e-3);
}

TEST(KsPValueTest, DetectsUniformAndShiftedUniform) {
  std::mt19937_64 engine(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> samples(20000);
  for (double& s : samples) s = u(engine);
  const auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_GT(KsPValue(samples, cdf), 0.001);
  for (double& s : samples) s = std::min(1.0, s + 0.03);
  EXPECT_LT(KsPValue(samples, cdf), 1e-6);
}

TEST(KsTwoSamplePValueTest, SameAndDifferentDistributions) {
  std::mt19937_64 engine(12);
  std::normal_distribution<double> n01(0.0, 1.0);
  std::vector<double> a(20000), b(20000), c(20000);
  for (double& v : a) v = n01(engine);
  for (double& v : b) v = n01(engine);
  for (double& v : c) v = 1.1 * n01(engine);
  EXPECT_GT(KsTwoSamplePValue(a, b), 0.001);
  EXPECT_LT(KsTwoSamplePValue(a, c), 0.001);
}

TEST(GridHistogramTest, IndexesCoordinateZeroFastest) {
  const std::vector<int64_t> h =
      GridHistogram({{0.1, 0.9}, {0.9, 0.1}, {0.9, 0.9}}, 0.0, 1.0, 2);
  EXPECT_EQ(h, (std::vector<int64_t>{0, 1, 1, 1}));
}

TEST(TotalVariationTest, DisjointAndEqual) {
  EXPECT_DOUBLE_EQ(TotalVariation({1, 0}, {0, 5}), 1.0);
  EXPECT_DOUBLE_EQ(TotalVariation({2, 2}, {5, 5}), 0.0);
}

TEST(RejectionOracleTest, SamplesStayInsideBall) {
  RejectionOracle oracle(BallSpec::Vote(3), 5);
  EXPECT_DOUBLE_EQ(oracle.half_width(), 2.0);
  const std::vector<Point> vertices = BallVertices(BallSpec::Vote(3));
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(HullContains(vertices, oracle.Sample(), 1e-9));
  }
}

}  // namespace
}  // namespace knorm::testing
