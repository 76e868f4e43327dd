// Copyright 2026 The sticksoup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sticksoup/errors.hpp"
#include "sticksoup/measures.hpp"
#include "sticksoup/soup.hpp"

namespace sticksoup {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(MuHit, Examples) {
  EXPECT_NEAR(mu_hit(2, SegmentShape{1}, AtLeast{1}).value(), 8 / kPi, 1e-12);
  EXPECT_NEAR(mu_hit(0.5, SegmentShape{1}, Below{1}).value(), 4 / kPi, 1e-12);
  EXPECT_TRUE(mu_hit(1, BallShape{1}, AtLeast{1}).is_infinite());
}

TEST(MuHit, InfiniteRanges) {
  EXPECT_TRUE(mu_hit(2, BallShape{1}, Below{1}).is_infinite());
  EXPECT_TRUE(mu_hit(0.5, BallShape{1}, Below{1}).is_infinite());
  EXPECT_TRUE(mu_hit(1, SegmentShape{1}, AtLeast{1}).is_infinite());
  EXPECT_TRUE(mu_hit(2, SegmentShape{1}, Below{1}).is_infinite());
  EXPECT_THROW(mu_hit(2, SegmentShape{1}, Below{1}).value(), InfiniteMeasureError);
}

TEST(MuHit, BallAgreesWithSoupClosedForm) {
  for (double alpha : {1.5, 2.0, 3.0}) {
    EXPECT_NEAR(mu_hit(alpha, BallShape{0.7}, AtLeast{0.4}).value(),
                expected_hit_count_disk(alpha, 1.0, 0.4, 0.7), 1e-12);
  }
}

TEST(MuHit, LinearInSegmentLengthAndDecreasingInR) {
  const double base = mu_hit(2.3, SegmentShape{1}, AtLeast{0.5}).value();
  EXPECT_NEAR(mu_hit(2.3, SegmentShape{3.5}, AtLeast{0.5}).value(), 3.5 * base, 1e-12 * base);
  double prev = kInfinity;
  for (double r : {0.1, 0.2, 0.5, 1.0, 4.0}) {
    const double v = mu_hit(2.3, SegmentShape{1}, AtLeast{r}).value();
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(MuDoubleCircle, Examples) {
  EXPECT_NEAR(mu_double_circle(2).value(), 2 * kPi, 1e-12);
  EXPECT_TRUE(mu_double_circle(1).is_infinite());
  EXPECT_TRUE(mu_double_circle(3).is_infinite());
  EXPECT_TRUE(mu_double_circle(0.5).is_infinite());
}

TEST(MuDoubleCircle, NumericBranchAtAlphaTwo) {
  EXPECT_NEAR(mu_double_circle_numeric(2.0), 2 * kPi, 1e-9);
}

TEST(MuDoubleCircle, OracleReproducesAlphaTwo) {
  EXPECT_NEAR(testing::double_hit_measure_oracle(2.0), 2 * kPi, 1e-7);
}

TEST(MuDoubleCircle, AgreesWithOracle) {
  // Frozen from the independent oracle.
  constexpr double kOracleAlpha25 = 6.992153478112319;
  const double oracle = testing::double_hit_measure_oracle(2.5);
  EXPECT_NEAR(oracle, kOracleAlpha25, 1e-12);
  EXPECT_NEAR(mu_double_circle(2.5).value(), oracle, 1e-6 * oracle);
  for (double alpha : {1.2, 1.5, 2.2, 2.8, 2.95}) {
    const double o = testing::double_hit_measure_oracle(alpha);
    EXPECT_NEAR(mu_double_circle(alpha).value(), o, 1e-6 * o) << alpha;
  }
}

TEST(AnnulusCrossing, Examples) {
  const auto b = annulus_crossing_bounds(2, 1, 2);
  EXPECT_NEAR(b.lower, kPi / 4 + 4, 1e-12);
  EXPECT_NEAR(b.upper, 4 * kPi + 16, 1e-12);
  const auto far = annulus_crossing_bounds(2, 1, 1e9);
  EXPECT_LT(far.lower, 1e-7);
  EXPECT_LT(far.upper, 1e-7);
  EXPECT_THROW(annulus_crossing_bounds(2, 1, 1), ArgumentError);
}

TEST(AnnulusCrossing, OrderedAndHomogeneous) {
  for (double alpha : {1.2, 2.0, 3.5}) {
    for (double ratio : {1.1, 2.0, 10.0, 100.0}) {
      const auto b = annulus_crossing_bounds(alpha, 1.0, ratio);
      EXPECT_LE(b.lower, b.upper);
      const double c = 3.7;
      const auto s = annulus_crossing_bounds(alpha, c, c * ratio);
      const double factor = std::pow(c, 2.0 - alpha);
      EXPECT_NEAR(s.lower, factor * b.lower, 1e-12 * s.lower);
      EXPECT_NEAR(s.upper, factor * b.upper, 1e-12 * s.upper);
    }
  }
}

TEST(Decorrelation, Examples) {
  EXPECT_EQ(decorrelation_bound(2, 1, 1, 2), 2.0);
  EXPECT_NEAR(decorrelation_bound(2, 1, 1, 100), 4 * (4 * kPi / (99.0 * 99.0) + 16 / 99.0), 1e-12);
  EXPECT_NEAR(decorrelation_bound(2, 1, 1, 100), 0.651593, 1e-6);
  for (double u : {0.01, 1.0, 50.0}) EXPECT_LE(decorrelation_bound(2, u, 1, 1.5), 2.0);
}

TEST(Lr1Measure, ScaleInvariantAtAlphaTwo) {
  const auto a = lr1_measure(2.0, 1.0, 2.0, 20000, 7);
  const auto b = lr1_measure(2.0, 10.0, 2.0, 20000, 8);
  EXPECT_GT(a.measure, 0.0);
  EXPECT_LT(std::abs(a.measure - b.measure),
            kZ95 * (a.measure_std_error + b.measure_std_error));
}

TEST(Lr1Measure, DecreasesWithAspectRatio) {
  double prev = kInfinity;
  for (double k : {0.5, 1.0, 2.0, 4.0}) {
    const auto e = lr1_measure(2.0, 1.0, k, 20000, 11);
    EXPECT_LT(e.measure, prev + kZ95 * e.measure_std_error);
    prev = e.measure;
  }
}

TEST(Lr1Measure, DeterministicAndValidated) {
  const auto a = lr1_measure(2.0, 1.0, 1.0, 500, 3);
  const auto b = lr1_measure(2.0, 1.0, 1.0, 500, 3);
  EXPECT_EQ(a.measure, b.measure);
  EXPECT_EQ(a.crossing_fraction.successes, b.crossing_fraction.successes);
  EXPECT_NEAR(a.probability(1.0), 1.0 - std::exp(-a.measure), 1e-15);
  EXPECT_THROW(lr1_measure(2.0, 1.0, 1.0, 0, 3), ArgumentError);
}

TEST(Lr1Measure, SquareMeasureWithinProposalBounds) {
  // A stick meeting both vertical sides of the unit square meets the segment
  // {0} x [0, 1] and has R >= 1/2.
  const auto e = lr1_measure(2.0, 1.0, 1.0, 20000, 19);
  EXPECT_LT(e.measure, mu_hit(2.0, SegmentShape{1.0}, AtLeast{0.5}).value());
  EXPECT_LE(e.measure, e.total_measure);
}

}  // namespace
}  // namespace sticksoup
