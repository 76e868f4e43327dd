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

#include "sticksoup/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "sticksoup/errors.hpp"

namespace sticksoup {

Stick::Stick(Point center, double radius, double direction)
    : center_(center), radius_(radius), direction_(direction) {
  if (!is_finite(center) || !std::isfinite(radius) || !(radius > 0.0)) {
    throw ArgumentError("stick radius must be positive and finite");
  }
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (!(direction > -half_pi && direction <= half_pi)) {
    throw ArgumentError("stick direction must lie in (-pi/2, pi/2]");
  }
}

Segment::Segment(Point a, Point b) : a_(a), b_(b) {
  if (!is_finite(a) || !is_finite(b)) throw ArgumentError("segment endpoints must be finite");
  if (a == b) throw ArgumentError("degenerate segment");
}

Box::Box(Point min, Point max) : min_(min), max_(max) {
  if (!is_finite(min) || !is_finite(max) || !(min.x < max.x) || !(min.y < max.y)) {
    throw ArgumentError("box requires min < max in both coordinates");
  }
}

Annulus::Annulus(Point center, double inner, double outer)
    : center_(center), inner_(inner), outer_(outer) {
  if (!is_finite(center) || !(inner > 0.0) || !(inner < outer) || !std::isfinite(outer)) {
    throw ArgumentError("annulus requires 0 < inner < outer");
  }
}

Polyline::Polyline(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ArgumentError("polyline needs at least one vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_finite(vertices_[i])) throw ArgumentError("polyline vertex is not finite");
    if (i > 0 && vertices_[i] == vertices_[i - 1]) {
      throw ArgumentError("polyline has repeated consecutive vertex " + std::to_string(i));
    }
  }
}

double Polyline::length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < vertices_.size(); ++i) total += distance(vertices_[i - 1], vertices_[i]);
  return total;
}

Segment stick_to_segment(const Stick& s) {
  const Point half{s.radius() * std::cos(s.direction()), s.radius() * std::sin(s.direction())};
  return Segment(s.center() - half, s.center() + half);
}

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  const Point r = s1.direction();
  const Point s = s2.direction();
  const Point q = s2.a() - s1.a();
  const double len_r = norm(r);
  const double len_s = norm(s);
  const double scale = std::max(len_r, len_s);
  const double denom = cross(r, s);

  SegmentIntersection out;
  if (std::abs(denom) <= kRelTol * len_r * len_s) {
    // Parallel: only collinear segments can meet.
    if (std::abs(cross(q, r)) > kRelTol * len_r * scale) return out;
    const double rr = dot(r, r);
    const double u0 = dot(q, r) / rr;
    const double u1 = dot(q + s, r) / rr;
    const double lo = std::max(0.0, std::min(u0, u1));
    const double hi = std::min(1.0, std::max(u0, u1));
    const double tol_t = kRelTol * scale / len_r;
    if (hi - lo > tol_t) {
      out.kind = SegmentIntersection::Kind::kOverlap;
      out.t1 = lo;
      out.point = s1.at(lo);
      return out;
    }
    if (hi - lo < -tol_t) return out;
    const double t = std::clamp(0.5 * (lo + hi), 0.0, 1.0);
    out.kind = SegmentIntersection::Kind::kPoint;
    out.t1 = t;
    out.point = s1.at(t);
    out.t2 = std::clamp(dot(out.point - s2.a(), s) / dot(s, s), 0.0, 1.0);
    return out;
  }

  const double t = cross(q, s) / denom;
  const double u = cross(q, r) / denom;
  const double tol_t = kRelTol * scale / len_r;
  const double tol_u = kRelTol * scale / len_s;
  if (t < -tol_t || t > 1.0 + tol_t || u < -tol_u || u > 1.0 + tol_u) return out;
  out.kind = SegmentIntersection::Kind::kPoint;
  out.t1 = std::clamp(t, 0.0, 1.0);
  out.t2 = std::clamp(u, 0.0, 1.0);
  out.point = s1.at(out.t1);
  return out;
}

namespace {

// Roots of |a + t d - c|^2 = radius^2 as (lo, hi); nullopt when the line misses
// the circle. A tangency within tolerance returns lo == hi.
std::optional<std::pair<double, double>> line_circle_roots(const Segment& seg, Point c,
                                                           double radius) {
  const Point d = seg.direction();
  const Point f = seg.a() - c;
  const double A = dot(d, d);
  const double B = dot(f, d);
  const double C = dot(f, f) - radius * radius;
  // h = radius^2 - (distance from c to the supporting line)^2
  const double h = (B * B - A * C) / A;
  const double tol = 2.0 * kRelTol * radius * radius;
  if (h < -tol) return std::nullopt;
  if (h <= tol) {
    const double t = -B / A;
    return std::pair{t, t};
  }
  const double root = std::sqrt(h / A);
  const double mid = -B / A;
  return std::pair{mid - root, mid + root};
}

}  // namespace

std::vector<double> segment_circle_params(const Segment& s, Point center, double radius) {
  if (!(radius > 0.0)) throw ArgumentError("circle radius must be positive");
  std::vector<double> out;
  const auto roots = line_circle_roots(s, center, radius);
  if (!roots) return out;
  constexpr double tau = kRelTol;
  auto keep = [&](double t) {
    if (t >= -tau && t <= 1.0 + tau) out.push_back(std::clamp(t, 0.0, 1.0));
  };
  keep(roots->first);
  if (roots->second != roots->first) keep(roots->second);
  return out;
}

std::vector<Point> segment_circle_intersections(const Segment& s, Point center, double radius) {
  std::vector<Point> out;
  for (double t : segment_circle_params(s, center, radius)) out.push_back(s.at(t));
  return out;
}

std::optional<ClippedSegment> clip_to_box(const Segment& s, const Box& b) {
  const Point a = s.a();
  const Point d = s.direction();
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {a.x - b.min().x, b.max().x - a.x, a.y - b.min().y, b.max().y - a.y};
  const std::uint8_t side[4] = {kSideLeft, kSideRight, kSideBottom, kSideTop};

  double t0 = 0.0;
  double t1 = 1.0;
  std::uint8_t entry = kSideNone;
  std::uint8_t exit = kSideNone;
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0.0) {
      if (q[k] < 0.0) return std::nullopt;
      continue;
    }
    const double r = q[k] / p[k];
    if (p[k] < 0.0) {
      if (r > t1) return std::nullopt;
      if (r > t0) {
        t0 = r;
        entry = side[k];
      }
    } else {
      if (r < t0) return std::nullopt;
      if (r < t1) {
        t1 = r;
        exit = side[k];
      }
    }
  }
  if (!(t1 > t0)) return std::nullopt;

  auto snap = [&](Point pt, std::uint8_t on) {
    if (on == kSideLeft) pt.x = b.min().x;
    if (on == kSideRight) pt.x = b.max().x;
    if (on == kSideBottom) pt.y = b.min().y;
    if (on == kSideTop) pt.y = b.max().y;
    pt.x = std::clamp(pt.x, b.min().x, b.max().x);
    pt.y = std::clamp(pt.y, b.min().y, b.max().y);
    return pt;
  };
  auto sides_of = [&](Point pt) {
    std::uint8_t f = kSideNone;
    if (pt.x == b.min().x) f |= kSideLeft;
    if (pt.x == b.max().x) f |= kSideRight;
    if (pt.y == b.min().y) f |= kSideBottom;
    if (pt.y == b.max().y) f |= kSideTop;
    return f;
  };
  const Point p0 = snap(t0 == 0.0 ? a : s.at(t0), entry);
  const Point p1 = snap(t1 == 1.0 ? s.b() : s.at(t1), exit);
  if (p0 == p1) return std::nullopt;
  return ClippedSegment{Segment(p0, p1), t0, t1, sides_of(p0), sides_of(p1)};
}

std::optional<Segment> clip_segment_to_box(const Segment& s, const Box& b) {
  auto c = clip_to_box(s, b);
  if (!c) return std::nullopt;
  return c->segment;
}

std::vector<RingPiece> clip_to_ring(const Segment& s, Point center, double inner, double outer) {
  std::vector<RingPiece> out;
  const auto o = line_circle_roots(s, center, outer);
  if (!o || o->first == o->second) return out;
  const double tin = std::max(0.0, o->first);
  const double tout = std::min(1.0, o->second);
  if (!(tout > tin)) return out;
  const bool in_on_outer = o->first >= 0.0;
  const bool out_on_outer = o->second <= 1.0;

  const auto i = line_circle_roots(s, center, inner);
  if (!i || i->first == i->second || i->second <= tin || i->first >= tout) {
    out.push_back({tin, tout, false, in_on_outer, false, out_on_outer});
    return out;
  }
  if (i->first > tin) out.push_back({tin, i->first, false, in_on_outer, true, false});
  if (i->second < tout) out.push_back({i->second, tout, true, false, false, out_on_outer});
  return out;
}

std::optional<RingPiece> clip_to_disk(const Segment& s, Point center, double radius) {
  const auto o = line_circle_roots(s, center, radius);
  if (!o) return std::nullopt;
  const double tin = std::max(0.0, o->first);
  const double tout = std::min(1.0, o->second);
  if (!(tout > tin)) return std::nullopt;
  return RingPiece{tin, tout, false, o->first >= 0.0, false, o->second <= 1.0};
}

double point_segment_distance(Point p, const Segment& s) {
  const Point d = s.direction();
  const double t = std::clamp(dot(p - s.a(), d) / dot(d, d), 0.0, 1.0);
  return distance(p, s.at(t));
}

RadialRange radial_range(const Segment& s, Point c) {
  return {point_segment_distance(c, s), std::max(distance(s.a(), c), distance(s.b(), c))};
}

bool segment_meets_disk(const Segment& s, Point center, double radius) {
  return point_segment_distance(center, s) <= radius;
}

bool segment_meets_box(const Segment& s, const Box& b) {
  const Point a = s.a();
  const Point d = s.direction();
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {a.x - b.min().x, b.max().x - a.x, a.y - b.min().y, b.max().y - a.y};
  double t0 = 0.0;
  double t1 = 1.0;
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0.0) {
      if (q[k] < 0.0) return false;
      continue;
    }
    const double r = q[k] / p[k];
    if (p[k] < 0.0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
    if (t0 > t1) return false;
  }
  return true;
}

}  // namespace sticksoup
