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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "sticksoup/errors.hpp"
#include "sticksoup/soup.hpp"

namespace sticksoup {
namespace {

constexpr double kPi = std::numbers::pi;

struct CountStats {
  double mean = 0.0;
  double std_error = 0.0;
};

template <typename Count>
CountStats count_stats(int n, Count&& count) {
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = count(i);
    sum += k;
    sum_sq += k * k;
  }
  const double mean = sum / n;
  const double var = (sum_sq - n * mean * mean) / (n - 1);
  return {mean, std::sqrt(var / n)};
}

// CDF of the radius of a stick hitting a disk of radius a, from the density
// proportional to alpha R^(-1-alpha) (pi a^2 + 4 a R) on [r, inf).
double hit_radius_cdf(double alpha, double a, double r, double x) {
  const auto mass = [&](double lo, double hi) {
    const double disk = kPi * a * a * (std::pow(lo, -alpha) - std::pow(hi, -alpha));
    const double side =
        4.0 * a * alpha / (alpha - 1.0) * (std::pow(lo, 1.0 - alpha) - std::pow(hi, 1.0 - alpha));
    return disk + side;
  };
  return mass(r, x) / mass(r, kInfinity);
}

double ks_statistic(std::vector<double> xs, double alpha, double a, double r) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = hit_radius_cdf(alpha, a, r, xs[i]);
    d = std::max({d, f - i / n, (i + 1) / n - f});
  }
  return d;
}

TEST(ExpectedHitCount, ClosedFormValues) {
  EXPECT_NEAR(expected_hit_count_disk(2, 1, 1, 1), kPi + 8, 1e-12);
  EXPECT_NEAR(expected_hit_count_disk(2, 1, 0.5, 1), 4 * kPi + 16, 1e-12);
  EXPECT_NEAR(expected_hit_count_disk(2, 1, 100, 1), kPi * 1e-4 + 0.08, 1e-15);
  EXPECT_THROW(expected_hit_count_disk(1, 1, 1, 1), InfiniteMeasureError);
}

TEST(ExpectedHitCount, MatchesQuadratureOracle) {
  for (double alpha : {1.5, 2.0, 2.7}) {
    for (double r : {0.1, 1.0, 3.0}) {
      const double oracle = testing::disk_hits_by_quadrature(alpha, 1.3, r, 0.8);
      EXPECT_NEAR(expected_hit_count_disk(alpha, 1.3, r, 0.8), oracle, 1e-7 * oracle)
          << alpha << " " << r;
    }
  }
}

TEST(ExpectedHitCount, ScaleInvariantAtAlphaTwo) {
  for (double c : {0.01, 0.5, 3.0, 1e3}) {
    EXPECT_NEAR(expected_hit_count_disk(2, 0.7, 0.3 * c, 1.1 * c), expected_hit_count_disk(2, 0.7, 0.3, 1.1),
                1e-12 * expected_hit_count_disk(2, 0.7, 0.3, 1.1));
  }
}

TEST(BandCount, ParkerCowanValues) {
  EXPECT_NEAR(expected_count_band_convex(2, 1, 0.5, 2, kPi, 2 * kPi), 3.75 * kPi + 12, 1e-12);
  EXPECT_NEAR(expected_count_band_convex(2, 1, 1, kInfinity, kPi, 2 * kPi), kPi + 8, 1e-12);
  EXPECT_NEAR(expected_count_band_convex(2, 1, 1, 1 + 1e-12, kPi, 2 * kPi), 0.0, 1e-9);
  EXPECT_THROW(expected_count_band_convex(2, 1, 2, 1, kPi, 2 * kPi), ArgumentError);
}

TEST(BandCount, MatchesQuadratureOracle) {
  const double oracle = testing::disk_hits_by_quadrature(2.0, 1.0, 0.5, 2.0, 1.0);
  EXPECT_NEAR(oracle, 23.780972450961723, 1e-9);
  EXPECT_NEAR(expected_count_band_convex(2, 1, 0.5, 2, kPi, 2 * kPi), oracle, 1e-9);
  const double other = testing::disk_hits_by_quadrature(2.5, 0.4, 0.2, 7.0, 1.5);
  EXPECT_NEAR(expected_count_band_convex(2.5, 0.4, 0.2, 7.0, kPi * 2.25, 3 * kPi), other, 1e-8 * other);
}

TEST(SampleConfiguration, MeanCountMatchesClosedForm) {
  const SoupParams params{1.0, 2.0, 0};
  const auto stats = count_stats(10000, [&](int i) {
    return static_cast<double>(
        sample_configuration(params, {{0, 0}, 1.0}, 1.0, trial_seed(3, i)).sticks.size());
  });
  EXPECT_LT(std::abs(stats.mean - (kPi + 8)), 3 * stats.std_error);
}

TEST(SampleConfiguration, LargeRMinMeanCount) {
  const SoupParams params{1.0, 2.0, 0};
  const auto stats = count_stats(20000, [&](int i) {
    return static_cast<double>(
        sample_configuration(params, {{0, 0}, 1.0}, 100.0, trial_seed(4, i)).sticks.size());
  });
  EXPECT_LT(std::abs(stats.mean - 0.0803141592653589), 3 * stats.std_error);
}

TEST(SampleConfiguration, EveryStickMeetsWindowAndRespectsRMin) {
  const SoupParams params{2.0, 2.0, 0};
  const DiskWindow w{{3, -1}, 2.5};
  for (int i = 0; i < 200; ++i) {
    const Configuration c = sample_configuration(params, w, 0.2, trial_seed(9, i));
    for (const Stick& s : c.sticks) {
      EXPECT_GE(s.radius(), 0.2);
      EXPECT_TRUE(segment_meets_disk(stick_to_segment(s), w.center, w.radius * (1 + 1e-12)));
    }
  }
}

TEST(SampleConfiguration, Deterministic) {
  const SoupParams params{1.0, 2.0, 0};
  const auto c1 = sample_configuration(params, {{0, 0}, 1.0}, 0.1, 12345);
  const auto c2 = sample_configuration(params, {{0, 0}, 1.0}, 0.1, 12345);
  EXPECT_EQ(c1.sticks, c2.sticks);
  EXPECT_FALSE(c1.sticks.empty());
}

TEST(SampleConfiguration, RejectsInvalidArguments) {
  EXPECT_THROW(sample_configuration({1.0, 1.0, 0}, {{0, 0}, 1}, 1, 1), InfiniteMeasureError);
  EXPECT_THROW(sample_configuration({1.0, 2.0, 0}, {{0, 0}, 1}, 0, 1), ArgumentError);
  EXPECT_THROW(sample_configuration({1.0, 2.0, 0}, {{0, 0}, 1}, -1, 1), ArgumentError);
}

TEST(SampleHitRadius, KolmogorovSmirnovAgainstDensity) {
  for (double alpha : {2.0, 1.6}) {
    Rng rng(77);
    std::vector<double> xs(100000);
    for (double& x : xs) x = sample_hit_radius(rng, alpha, 1.0, 1.0);
    EXPECT_LT(ks_statistic(xs, alpha, 1.0, 1.0), 1.628 / std::sqrt(1e5)) << alpha;
  }
}

TEST(SampleHitRadius, KsDetectsWrongExponent) {
  Rng rng(78);
  std::vector<double> xs(100000);
  for (double& x : xs) x = sample_hit_radius(rng, 2.2, 1.0, 1.0);
  EXPECT_GT(ks_statistic(xs, 2.0, 1.0, 1.0), 1.628 / std::sqrt(1e5));
}

TEST(SampleCircleHits, SticksMeetCircleAndMeanMatchesDiskSampler) {
  const SoupParams params{1.0, 2.0, 0};
  const DiskWindow w{{0, 0}, 1.0};
  const double r_min = 0.05;
  const auto circle = count_stats(4000, [&](int i) {
    const Configuration c = sample_circle_hits(params, w, r_min, trial_seed(21, i));
    for (const Stick& s : c.sticks) {
      const RadialRange range = radial_range(stick_to_segment(s), w.center);
      EXPECT_LE(range.min, 1.0 + 1e-12);
      EXPECT_GE(range.max, 1.0 - 1e-12);
      EXPECT_GE(s.radius(), r_min);
    }
    return static_cast<double>(c.sticks.size());
  });
  const auto disk = count_stats(4000, [&](int i) {
    const Configuration c = sample_configuration(params, w, r_min, trial_seed(22, i));
    return static_cast<double>(std::count_if(c.sticks.begin(), c.sticks.end(), [&](const Stick& s) {
      const RadialRange range = radial_range(stick_to_segment(s), w.center);
      return range.min <= 1.0 && range.max >= 1.0;
    }));
  });
  const double se = std::hypot(circle.std_error, disk.std_error);
  EXPECT_LT(std::abs(circle.mean - disk.mean), 3.5 * se);
}

TEST(Restrict, IdentityAndSubset) {
  const auto c = sample_configuration({1.0, 2.0, 0}, {{0, 0}, 2.0}, 0.1, 99);
  EXPECT_EQ(restrict_configuration(c, 0.1).sticks, c.sticks);
  const auto r = restrict_configuration(c, 0.2);
  EXPECT_EQ(r.r_min, 0.2);
  std::vector<Stick> expected;
  for (const Stick& s : c.sticks) {
    if (s.radius() >= 0.2) expected.push_back(s);
  }
  EXPECT_EQ(r.sticks, expected);
  EXPECT_LT(r.sticks.size(), c.sticks.size());
  EXPECT_THROW(restrict_configuration(c, 0.05), ArgumentError);
}

TEST(Homothety, ScalesSticksWindowAndIntensity) {
  Configuration c;
  c.params = {1.0, 2.5, 0};
  c.window = {{0, 0}, 3.0};
  c.r_min = 0.5;
  c.sticks = {Stick({1, 0}, 1, 0)};
  const auto id = apply_homothety(c, 1.0);
  EXPECT_EQ(id.sticks, c.sticks);
  EXPECT_EQ(id.window.radius, 3.0);
  const auto d = apply_homothety(c, 2.0);
  ASSERT_EQ(d.sticks.size(), 1u);
  EXPECT_EQ(d.sticks[0], Stick({2, 0}, 2, 0));
  EXPECT_EQ(d.window.radius, 6.0);
  EXPECT_EQ(d.r_min, 1.0);
  EXPECT_NEAR(d.params.u, std::pow(2.0, -0.5), 1e-15);
  EXPECT_THROW(apply_homothety(c, 0.0), ArgumentError);
}

TEST(Jsonl, RoundTrip) {
  const auto c = sample_configuration({0.7, 2.0, 5}, {{1, 2}, 1.5}, 0.3, 4242);
  std::stringstream ss;
  write_configuration_jsonl(ss, c);
  const auto back = read_configuration_jsonl(ss);
  EXPECT_EQ(back.sticks, c.sticks);
  EXPECT_EQ(back.r_min, c.r_min);
  EXPECT_EQ(back.seed, c.seed);
  EXPECT_EQ(back.window.radius, c.window.radius);
  EXPECT_EQ(back.params.u, c.params.u);
}

TEST(Jsonl, RejectsMalformedInput) {
  std::stringstream empty;
  EXPECT_THROW(read_configuration_jsonl(empty), ArgumentError);
  std::stringstream bad("{not json}\n");
  EXPECT_THROW(read_configuration_jsonl(bad), ArgumentError);
}

TEST(Seeds, TrialSeedsDistinct) {
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
  EXPECT_EQ(trial_seed(7, 3), trial_seed(7, 3));
}

}  // namespace
}  // namespace sticksoup
