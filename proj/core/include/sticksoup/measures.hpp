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

#pragma once

// Closed-form and numerically integrated stick measures.

#include <cstdint>
#include <variant>

#include "sticksoup/report.hpp"

namespace sticksoup {

/// A nonnegative real or +infinity.
class ExtendedReal {
 public:
  static ExtendedReal infinite() { return ExtendedReal(); }
  static ExtendedReal finite(double v);

  bool is_infinite() const { return infinite_; }
  /// Throws InfiniteMeasureError when infinite.
  double value() const;

  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  ExtendedReal() = default;
  bool infinite_ = true;
  double value_ = 0.0;
};

struct SegmentShape {
  double length = 1.0;
};
struct BallShape {
  double radius = 1.0;
};
using HitShape = std::variant<SegmentShape, BallShape>;

struct AtLeast {
  double r = 1.0;
};
struct Below {
  double r = 1.0;
};
using RadiusRange = std::variant<AtLeast, Below>;

/// Measure of the sticks with radius in the range that meet the shape.
ExtendedReal mu_hit(double alpha, const HitShape& shape, const RadiusRange& range);

/// Measure of the sticks meeting the unit circle in exactly two points. For
/// a circle of radius l multiply by l^(2 - alpha).
ExtendedReal mu_double_circle(double alpha);

/// The same quantity by quadrature, also at alpha = 2; finite only in (1, 3).
double mu_double_circle_numeric(double alpha);

struct CrossingBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bounds on the measure of the sticks meeting both boundary circles of the
/// annulus with radii l1 < l2.
CrossingBounds annulus_crossing_bounds(double alpha, double l1, double l2);

/// min(2, 4 u upper), bounding the covariance of [-1, 1]-valued functions
/// measurable inside B(l1) and outside B(l2) respectively.
double decorrelation_bound(double alpha, double u, double l1, double l2);

/// Importance-sampling estimate of the measure of sticks meeting both vertical
/// sides of [0, k l] x [0, l].
struct Lr1Estimate {
  EstimateReport crossing_fraction;  // among sticks hitting the circumscribed disk
  double total_measure = 0.0;        // measure of that proposal set
  double measure = 0.0;
  double measure_std_error = 0.0;

  /// 1 - exp(-u measure).
  double probability(double u) const;
};

Lr1Estimate lr1_measure(double alpha, double l, double k, std::int64_t trials,
                        std::uint64_t master_seed);

nlohmann::json to_json(const Lr1Estimate& e, double u);

}  // namespace sticksoup
