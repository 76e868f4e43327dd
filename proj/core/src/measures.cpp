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

#include "sticksoup/measures.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "sticksoup/errors.hpp"
#include "sticksoup/geometry.hpp"
#include "sticksoup/rng.hpp"
#include "sticksoup/soup.hpp"

namespace sticksoup {

namespace {

constexpr double kPi = std::numbers::pi;

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 60);
}

// 4x - 2 asin x - 2x sqrt(1 - x^2); the series avoids cancellation for small x.
double double_hit_kernel(double x) {
  if (x < 1e-2) {
    const double x2 = x * x;
    return x * x2 * (2.0 / 3.0 + x2 * (1.0 / 10.0 + x2 * (1.0 / 28.0 + x2 * (5.0 / 288.0))));
  }
  return 4.0 * x - 2.0 * std::asin(x) - 2.0 * x * std::sqrt(1.0 - x * x);
}

void require_band(double alpha, double l1, double l2) {
  if (!(alpha > 1.0)) throw ArgumentError("alpha must exceed 1");
  if (!(l1 > 0.0) || !(l1 < l2)) throw ArgumentError("need 0 < l1 < l2");
}

}  // namespace

ExtendedReal ExtendedReal::finite(double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) throw ArgumentError("finite measure must be >= 0");
  ExtendedReal e;
  e.infinite_ = false;
  e.value_ = v;
  return e;
}

double ExtendedReal::value() const {
  if (infinite_) throw InfiniteMeasureError("measure is infinite");
  return value_;
}

ExtendedReal mu_hit(double alpha, const HitShape& shape, const RadiusRange& range) {
  if (!(alpha > 0.0)) throw ArgumentError("alpha must be positive");
  const double a = std::visit([](const auto& s) {
    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, SegmentShape>) {
      return s.length;
    } else {
      return s.radius;
    }
  }, shape);
  const double r = std::visit([](const auto& x) { return x.r; }, range);
  if (!(a > 0.0) || !(r > 0.0)) throw ArgumentError("shape size and r must be positive");

  const bool ball = std::holds_alternative<BallShape>(shape);
  const bool at_least = std::holds_alternative<AtLeast>(range);
  if (ball) {
    if (!at_least || alpha <= 1.0) return ExtendedReal::infinite();
    return ExtendedReal::finite(kPi * a * a * std::pow(r, -alpha) +
                                4.0 * alpha / (alpha - 1.0) * a * std::pow(r, 1.0 - alpha));
  }
  if (at_least) {
    if (alpha <= 1.0) return ExtendedReal::infinite();
    return ExtendedReal::finite(4.0 / kPi * alpha / (alpha - 1.0) * a * std::pow(r, 1.0 - alpha));
  }
  if (alpha >= 1.0) return ExtendedReal::infinite();
  return ExtendedReal::finite(4.0 / kPi * alpha / (1.0 - alpha) * a * std::pow(r, 1.0 - alpha));
}

double mu_double_circle_numeric(double alpha) {
  if (!(alpha > 1.0 && alpha < 3.0)) {
    throw InfiniteMeasureError("double circle hits have infinite measure outside (1, 3)");
  }
  // x = t^k with k = 1 / (3 - alpha) turns the x^(2 - alpha) head into a bounded integrand.
  const double k = 1.0 / (3.0 - alpha);
  auto g = [alpha, k](double t) {
    const double x = std::pow(t, k);
    if (x < 1e-60) return 2.0 / 3.0 * alpha * k;
    return double_hit_kernel(x) * alpha * std::pow(x, -1.0 - alpha) * k * x / t;
  };
  const double first = adaptive_simpson(g, 0.0, 1.0, 1e-11);
  const double second = 4.0 * alpha / (alpha - 1.0) - kPi;
  return first + second;
}

ExtendedReal mu_double_circle(double alpha) {
  if (!(alpha > 0.0)) throw ArgumentError("alpha must be positive");
  if (alpha == 2.0) return ExtendedReal::finite(2.0 * kPi);
  if (alpha <= 1.0 || alpha >= 3.0) return ExtendedReal::infinite();
  return ExtendedReal::finite(mu_double_circle_numeric(alpha));
}

CrossingBounds annulus_crossing_bounds(double alpha, double l1, double l2) {
  require_band(alpha, l1, l2);
  const double c = 4.0 * alpha / (alpha - 1.0);
  const double h = 0.5 * (l2 - l1);
  return {kPi * l1 * l1 * std::pow(l2, -alpha) + c * l1 * std::pow(l2, 1.0 - alpha),
          kPi * l1 * l1 * std::pow(h, -alpha) + c * l1 * std::pow(h, 1.0 - alpha)};
}

double decorrelation_bound(double alpha, double u, double l1, double l2) {
  if (!(u > 0.0)) throw ArgumentError("u must be positive");
  return std::min(2.0, 4.0 * u * annulus_crossing_bounds(alpha, l1, l2).upper);
}

double Lr1Estimate::probability(double u) const { return 1.0 - std::exp(-u * measure); }

Lr1Estimate lr1_measure(double alpha, double l, double k, std::int64_t trials,
                        std::uint64_t master_seed) {
  if (!(l > 0.0) || !(k > 0.0)) throw ArgumentError("l and k must be positive");
  if (!(alpha > 1.0)) throw ArgumentError("alpha must exceed 1");
  if (trials <= 0) throw ArgumentError("lr1_measure needs at least one trial");

  const double width = k * l;
  const Box box({0.0, 0.0}, {width, l});
  const DiskWindow window{box.center(), 0.5 * box.diagonal()};
  const double r_min = 0.5 * width;
  const Segment left({0.0, 0.0}, {0.0, l});
  const Segment right({width, 0.0}, {width, l});

  Rng rng(trial_seed(master_seed, 0));
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    const Segment s = stick_to_segment(sample_hitting_stick(rng, alpha, window, r_min));
    if (segment_intersection(s, left).intersects() && segment_intersection(s, right).intersects()) {
      ++hits;
    }
  }

  Lr1Estimate e;
  e.crossing_fraction = make_estimate(hits, trials, master_seed,
                                      {{"alpha", alpha}, {"l", l}, {"k", k}});
  e.total_measure = expected_hit_count_disk(alpha, 1.0, r_min, window.radius);
  e.measure = e.total_measure * e.crossing_fraction.estimate;
  e.measure_std_error = e.total_measure * e.crossing_fraction.std_error;
  return e;
}

nlohmann::json to_json(const Lr1Estimate& e, double u) {
  return {{"crossing_fraction", to_json(e.crossing_fraction)},
          {"total_measure", e.total_measure},
          {"measure", e.measure},
          {"measure_std_error", e.measure_std_error},
          {"u", u},
          {"probability", e.probability(u)},
          {"probability_ci_low", 1.0 - std::exp(-u * e.total_measure * e.crossing_fraction.ci_low)},
          {"probability_ci_high",
           1.0 - std::exp(-u * e.total_measure * e.crossing_fraction.ci_high)}};
}

}  // namespace sticksoup
