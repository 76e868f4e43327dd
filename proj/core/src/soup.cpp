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

#include "sticksoup/soup.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "sticksoup/errors.hpp"

namespace sticksoup {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite_alpha(double alpha) {
  if (!(alpha > 1.0)) {
    throw InfiniteMeasureError("the hit measure of a disk is infinite for alpha <= 1");
  }
}

void require_window(const DiskWindow& w) {
  if (!is_finite(w.center) || !(w.radius > 0.0) || !std::isfinite(w.radius)) {
    throw ArgumentError("window radius must be positive and finite");
  }
}

// Pareto(shape, scale) by inversion; 1 - U keeps the base in (0, 1].
double pareto(Rng& rng, double shape, double scale) {
  return scale * std::pow(1.0 - uniform01(rng), -1.0 / shape);
}

double sample_direction(Rng& rng) { return kPi / 2.0 - kPi * uniform01(rng); }

// Uniform point in the stadium: the Minkowski sum of the window disk with a
// segment of half-length R at angle V, i.e. the exact set of centers of sticks
// (z, R, V) that meet the disk.
Point sample_stadium_center(Rng& rng, const DiskWindow& w, double radius, double direction) {
  const double a = w.radius;
  const Point d{std::cos(direction), std::sin(direction)};
  const Point n{-d.y, d.x};
  const double rect = 4.0 * a * radius;
  const double caps = kPi * a * a;
  if (uniform01(rng) * (rect + caps) < rect) {
    const double along = (2.0 * uniform01(rng) - 1.0) * radius;
    const double across = (2.0 * uniform01(rng) - 1.0) * a;
    return w.center + along * d + across * n;
  }
  const double rho = a * std::sqrt(uniform01(rng));
  const double phi = 2.0 * kPi * uniform01(rng);
  const Point p{rho * std::cos(phi), rho * std::sin(phi)};
  return w.center + p + (dot(p, d) >= 0.0 ? radius : -radius) * d;
}

Stick draw_hitting_stick(Rng& rng, double alpha, const DiskWindow& w, double r_min) {
  const double radius = sample_hit_radius(rng, alpha, w.radius, r_min);
  const double direction = sample_direction(rng);
  return Stick(sample_stadium_center(rng, w, radius, direction), radius, direction);
}

bool meets_circle(const Stick& s, Point c, double rho) {
  const RadialRange range = radial_range(stick_to_segment(s), c);
  return range.min <= rho && rho <= range.max;
}

}  // namespace

void SoupParams::validate() const {
  if (!(u > 0.0) || !std::isfinite(u)) throw ArgumentError("intensity u must be positive");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ArgumentError("alpha must be positive");
}

std::vector<Segment> Configuration::segments() const {
  std::vector<Segment> out;
  out.reserve(sticks.size());
  for (const Stick& s : sticks) out.push_back(stick_to_segment(s));
  return out;
}

double expected_hit_count_disk(double alpha, double u, double r, double a) {
  require_finite_alpha(alpha);
  if (!(u > 0.0) || !(r > 0.0) || !(a > 0.0)) throw ArgumentError("u, r and a must be positive");
  return u * (kPi * a * a * std::pow(r, -alpha) +
              4.0 * alpha / (alpha - 1.0) * a * std::pow(r, 1.0 - alpha));
}

double expected_count_band_convex(double alpha, double u, double r, double t, double area,
                                  double perimeter) {
  if (!(alpha > 0.0) || !(u > 0.0) || !(r > 0.0)) {
    throw ArgumentError("alpha, u and r must be positive");
  }
  if (!(r < t)) throw ArgumentError("band requires r < t");
  if (area < 0.0 || perimeter < 0.0) throw ArgumentError("area and perimeter must be nonnegative");
  const bool unbounded = std::isinf(t);
  if (unbounded && alpha <= 1.0 && perimeter > 0.0) {
    throw InfiniteMeasureError("unbounded band has infinite perimeter term for alpha <= 1");
  }
  const double mass = std::pow(r, -alpha) - (unbounded ? 0.0 : std::pow(t, -alpha));
  double power_integral = 0.0;  // int_r^t x^-alpha dx
  if (alpha == 1.0) {
    power_integral = std::log(t / r);
  } else {
    const double upper = unbounded ? 0.0 : std::pow(t, 1.0 - alpha);
    power_integral = (std::pow(r, 1.0 - alpha) - upper) / (alpha - 1.0);
  }
  return u * mass * area + 2.0 * alpha * u / kPi * power_integral * perimeter;
}

double sample_hit_radius(Rng& rng, double alpha, double a, double r_min) {
  // Component masses of Z = pi a^2 r^-alpha + 4 a alpha/(alpha-1) r^(1-alpha).
  const double area_mass = kPi * a * a * std::pow(r_min, -alpha);
  const double length_mass = 4.0 * a * alpha / (alpha - 1.0) * std::pow(r_min, 1.0 - alpha);
  if (uniform01(rng) * (area_mass + length_mass) < area_mass) return pareto(rng, alpha, r_min);
  return pareto(rng, alpha - 1.0, r_min);
}

Stick sample_hitting_stick(Rng& rng, double alpha, const DiskWindow& window, double r_min) {
  require_finite_alpha(alpha);
  require_window(window);
  if (!(r_min > 0.0)) throw ArgumentError("r_min must be positive");
  return draw_hitting_stick(rng, alpha, window, r_min);
}

Configuration sample_configuration(const SoupParams& params, const DiskWindow& window,
                                   double r_min, std::uint64_t trial_seed) {
  params.validate();
  require_finite_alpha(params.alpha);
  require_window(window);
  if (!(r_min > 0.0) || !std::isfinite(r_min)) throw ArgumentError("r_min must be positive");

  Rng rng(trial_seed);
  const double mean = expected_hit_count_disk(params.alpha, params.u, r_min, window.radius);
  const auto count = std::poisson_distribution<long long>(mean)(rng);

  Configuration c{params, window, r_min, {}, trial_seed, WindowCoverage::kDisk};
  c.sticks.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    c.sticks.push_back(draw_hitting_stick(rng, params.alpha, window, r_min));
  }
  return c;
}

Configuration sample_circle_hits(const SoupParams& params, const DiskWindow& window,
                                 double r_min, std::uint64_t trial_seed) {
  params.validate();
  require_finite_alpha(params.alpha);
  require_window(window);
  if (!(r_min > 0.0) || !std::isfinite(r_min)) throw ArgumentError("r_min must be positive");

  const double alpha = params.alpha;
  const double rho = window.radius;
  // Below the crossover the band rho - R <= |z - c| <= rho + R (area 4 pi rho R)
  // is the smaller superset of centers; above it the stadium is.
  const double crossover = kPi * rho / (4.0 * kPi - 4.0);
  const double band_hi = std::max(r_min, crossover);
  const double k = alpha - 1.0;
  const double band_mass =
      r_min < crossover
          ? 4.0 * kPi * rho * alpha / k * (std::pow(r_min, -k) - std::pow(crossover, -k))
          : 0.0;
  const double stadium_mass =
      kPi * rho * rho * std::pow(band_hi, -alpha) + 4.0 * rho * alpha / k * std::pow(band_hi, -k);

  Rng rng(trial_seed);
  const auto proposals =
      std::poisson_distribution<long long>(params.u * (band_mass + stadium_mass))(rng);

  Configuration c{params, window, r_min, {}, trial_seed, WindowCoverage::kCircle};
  for (long long i = 0; i < proposals; ++i) {
    double radius = 0.0;
    Point center;
    double direction = 0.0;
    if (uniform01(rng) * (band_mass + stadium_mass) < band_mass) {
      // R with density proportional to R^-alpha on [r_min, crossover).
      const double lo = std::pow(r_min, -k);
      const double hi = std::pow(crossover, -k);
      radius = std::pow(lo - uniform01(rng) * (lo - hi), -1.0 / k);
      direction = sample_direction(rng);
      const double inner = rho - radius;
      const double outer = rho + radius;
      const double s = std::sqrt(inner * inner + uniform01(rng) * (outer * outer - inner * inner));
      const double phi = 2.0 * kPi * uniform01(rng);
      center = window.center + Point{s * std::cos(phi), s * std::sin(phi)};
    } else {
      radius = sample_hit_radius(rng, alpha, rho, band_hi);
      direction = sample_direction(rng);
      center = sample_stadium_center(rng, window, radius, direction);
    }
    Stick stick(center, radius, direction);
    if (meets_circle(stick, window.center, rho)) c.sticks.push_back(stick);
  }
  return c;
}

Configuration restrict_configuration(const Configuration& c, double r_new) {
  if (!(r_new >= c.r_min)) {
    throw ArgumentError("restriction below r_min needs a fresh sample");
  }
  Configuration out = c;
  out.r_min = r_new;
  out.sticks.clear();
  for (const Stick& s : c.sticks) {
    if (s.radius() >= r_new) out.sticks.push_back(s);
  }
  return out;
}

Configuration apply_homothety(const Configuration& c, double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw ArgumentError("ratio must be positive");
  Configuration out = c;
  out.params.u = c.params.u * std::pow(ratio, 2.0 - c.params.alpha);
  out.window = {ratio * c.window.center, ratio * c.window.radius};
  out.r_min = ratio * c.r_min;
  out.sticks.clear();
  out.sticks.reserve(c.sticks.size());
  for (const Stick& s : c.sticks) {
    out.sticks.emplace_back(ratio * s.center(), ratio * s.radius(), s.direction());
  }
  return out;
}

void write_configuration_jsonl(std::ostream& os, const Configuration& c,
                               const nlohmann::json& extra_header) {
  nlohmann::json header = extra_header;
  header["u"] = c.params.u;
  header["alpha"] = c.params.alpha;
  header["r_min"] = c.r_min;
  header["window_cx"] = c.window.center.x;
  header["window_cy"] = c.window.center.y;
  header["window_a"] = c.window.radius;
  header["seed"] = c.seed;
  if (c.coverage == WindowCoverage::kCircle) header["coverage"] = "circle";
  os << header.dump() << '\n';
  for (const Stick& s : c.sticks) {
    nlohmann::json line{{"cx", s.center().x}, {"cy", s.center().y}, {"r", s.radius()},
                        {"v", s.direction()}};
    os << line.dump() << '\n';
  }
}

Configuration read_configuration_jsonl(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ArgumentError("empty configuration stream");
  Configuration c;
  try {
    const auto header = nlohmann::json::parse(line);
    c.params.u = header.at("u").get<double>();
    c.params.alpha = header.at("alpha").get<double>();
    c.r_min = header.at("r_min").get<double>();
    c.window = {{header.at("window_cx").get<double>(), header.at("window_cy").get<double>()},
                header.at("window_a").get<double>()};
    c.seed = header.at("seed").get<std::uint64_t>();
    c.params.master_seed = header.value("master_seed", std::uint64_t{0});
    if (header.value("coverage", std::string("disk")) == "circle") {
      c.coverage = WindowCoverage::kCircle;
    }
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      const auto s = nlohmann::json::parse(line);
      c.sticks.emplace_back(Point{s.at("cx").get<double>(), s.at("cy").get<double>()},
                            s.at("r").get<double>(), s.at("v").get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed configuration JSONL: ") + e.what());
  }
  return c;
}

}  // namespace sticksoup
