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

// Sampling of the truncated stick soup restricted to a disk window, the nested
// truncation coupling, homotheties, and the closed-form mean counts the
// samplers are built from.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include <nlohmann/json.hpp>

#include "sticksoup/geometry.hpp"
#include "sticksoup/rng.hpp"

namespace sticksoup {

struct SoupParams {
  double u = 1.0;       // intensity
  double alpha = 2.0;   // tail exponent; 2 is the scale-invariant soup
  std::uint64_t master_seed = 0;

  void validate() const;
};

struct DiskWindow {
  Point center;
  double radius = 1.0;
};

/// Which sticks a configuration holds relative to its window.
enum class WindowCoverage {
  kDisk,    // every stick of the truncated soup meeting the closed disk
  kCircle,  // only the sticks meeting the window's boundary circle
};

/// A finite sampled realization of the truncated soup inside a window. Sticks
/// keep their sampling order, so indices are stable under restriction.
struct Configuration {
  SoupParams params;
  DiskWindow window;
  double r_min = 1.0;
  std::vector<Stick> sticks;
  std::uint64_t seed = 0;
  WindowCoverage coverage = WindowCoverage::kDisk;

  std::vector<Segment> segments() const;
};

/// Mean number of sticks with R >= r meeting a disk of radius a:
/// u (pi a^2 r^-alpha + 4 alpha/(alpha-1) a r^(1-alpha)). Throws
/// InfiniteMeasureError for alpha <= 1.
double expected_hit_count_disk(double alpha, double u, double r, double a);

/// Mean number of sticks with R in [r, t) meeting a convex set of the given
/// area and perimeter; t may be +infinity.
double expected_count_band_convex(double alpha, double u, double r, double t, double area,
                                  double perimeter);

/// One radius from the density proportional to alpha R^-(1+alpha) (pi a^2 + 4 a R)
/// on [r_min, inf), by choosing a Pareto component and inverting its CDF.
double sample_hit_radius(Rng& rng, double alpha, double a, double r_min);

/// One stick from the normalized law of sticks with R >= r_min meeting the window.
Stick sample_hitting_stick(Rng& rng, double alpha, const DiskWindow& window, double r_min);

/// Exact draw of every stick of the soup truncated at r_min whose segment meets
/// the closed window disk. Deterministic in (params, window, r_min, trial_seed).
Configuration sample_configuration(const SoupParams& params, const DiskWindow& window,
                                   double r_min, std::uint64_t trial_seed);

/// Exact draw of the sticks with R >= r_min meeting the window's boundary
/// circle. Proposals come from a band or stadium superset of the hit set and
/// are thinned, so small r_min stays cheap: the cost grows like 1/r_min rather
/// than 1/r_min^2.
Configuration sample_circle_hits(const SoupParams& params, const DiskWindow& window,
                                 double r_min, std::uint64_t trial_seed);

/// Keeps the sticks with radius >= r_new, preserving order.
Configuration restrict_configuration(const Configuration& c, double r_new);

/// (z, R, V) -> (ratio z, ratio R, V). Window and r_min scale too and the
/// intensity annotation becomes u ratio^(2 - alpha).
Configuration apply_homothety(const Configuration& c, double ratio);

/// JSON Lines: one header object, then one {cx, cy, r, v} object per stick.
/// `extra_header` fields are merged into the header line.
void write_configuration_jsonl(std::ostream& os, const Configuration& c,
                               const nlohmann::json& extra_header = nlohmann::json::object());
Configuration read_configuration_jsonl(std::istream& is);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace sticksoup
