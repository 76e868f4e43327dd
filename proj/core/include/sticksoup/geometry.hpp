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

// Planar primitives shared by every module: points, sticks, segments, boxes,
// annuli and polylines, with double precision and a relative coincidence
// tolerance.

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sticksoup {

/// Relative tolerance for coincidence tests, scaled by the size of the scene.
inline constexpr double kRelTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// A stick of the soup: center z, half-length R and direction V in (-pi/2, pi/2].
class Stick {
 public:
  Stick(Point center, double radius, double direction);

  Point center() const { return center_; }
  double radius() const { return radius_; }
  double direction() const { return direction_; }

  friend bool operator==(const Stick&, const Stick&) = default;

 private:
  Point center_;
  double radius_;
  double direction_;
};

/// Closed segment [a, b] with a != b.
class Segment {
 public:
  Segment(Point a, Point b);

  Point a() const { return a_; }
  Point b() const { return b_; }
  Point direction() const { return b_ - a_; }
  double length() const { return distance(a_, b_); }
  Point at(double t) const { return a_ + t * (b_ - a_); }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point a_;
  Point b_;
};

/// Axis-aligned closed box.
class Box {
 public:
  Box(Point min, Point max);

  Point min() const { return min_; }
  Point max() const { return max_; }
  double width() const { return max_.x - min_.x; }
  double height() const { return max_.y - min_.y; }
  double diagonal() const { return std::hypot(width(), height()); }
  Point center() const { return 0.5 * (min_ + max_); }
  bool contains(Point p) const {
    return p.x >= min_.x && p.x <= max_.x && p.y >= min_.y && p.y <= max_.y;
  }

 private:
  Point min_;
  Point max_;
};

/// D(z; inner, outer) = { w : inner < |w - z| <= outer }.
class Annulus {
 public:
  Annulus(Point center, double inner, double outer);

  Point center() const { return center_; }
  double inner() const { return inner_; }
  double outer() const { return outer_; }

 private:
  Point center_;
  double inner_;
  double outer_;
};

struct Disk {
  Point center;
  double radius = 1.0;
};

/// Ordered vertex list; consecutive vertices are distinct.
class Polyline {
 public:
  Polyline() = default;
  explicit Polyline(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const Point& front() const { return vertices_.front(); }
  const Point& back() const { return vertices_.back(); }
  double length() const;

 private:
  std::vector<Point> vertices_;
};

Segment stick_to_segment(const Stick& s);

struct SegmentIntersection {
  enum class Kind { kNone, kPoint, kOverlap };
  Kind kind = Kind::kNone;
  Point point;      // valid for kPoint
  double t1 = 0.0;  // parameter of `point` along the first segment
  double t2 = 0.0;  // parameter along the second segment

  bool intersects() const { return kind != Kind::kNone; }
};

/// Intersection of two closed segments. Boundary contact counts. Collinear
/// segments sharing a sub-segment of positive length report kOverlap.
SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

/// Parameters t in [0, 1] where the segment meets the circle, ascending.
/// A tangential contact within tolerance yields a single parameter.
std::vector<double> segment_circle_params(const Segment& s, Point center, double radius);

std::vector<Point> segment_circle_intersections(const Segment& s, Point center,
                                                double radius);

enum BoxSide : std::uint8_t {
  kSideNone = 0,
  kSideBottom = 1,
  kSideRight = 2,
  kSideTop = 4,
  kSideLeft = 8,
};

struct ClippedSegment {
  Segment segment;
  double t0 = 0.0;  // parameter range kept from the input segment
  double t1 = 1.0;
  std::uint8_t side0 = kSideNone;  // sides the clipped endpoints lie on
  std::uint8_t side1 = kSideNone;
};

/// Like clip_segment_to_box but also reports which box sides the clipped
/// endpoints lie on; endpoints on a side are snapped exactly onto it.
std::optional<ClippedSegment> clip_to_box(const Segment& s, const Box& b);

std::optional<Segment> clip_segment_to_box(const Segment& s, const Box& b);

/// Pieces of the segment inside the closed annulus ring inner <= |w - c| <= outer
/// (up to two pieces), as parameter intervals, with flags for endpoints on the
/// inner or outer circle.
struct RingPiece {
  double t0 = 0.0;
  double t1 = 1.0;
  bool start_on_inner = false;
  bool start_on_outer = false;
  bool end_on_inner = false;
  bool end_on_outer = false;
};
std::vector<RingPiece> clip_to_ring(const Segment& s, Point center, double inner,
                                    double outer);

/// Part of the segment inside the closed disk, as a ring piece whose inner
/// flags are always false.
std::optional<RingPiece> clip_to_disk(const Segment& s, Point center, double radius);

double point_segment_distance(Point p, const Segment& s);

/// Minimum and maximum of |w - c| over w in the segment.
struct RadialRange {
  double min = 0.0;
  double max = 0.0;
};
RadialRange radial_range(const Segment& s, Point c);

bool segment_meets_disk(const Segment& s, Point center, double radius);
bool segment_meets_box(const Segment& s, const Box& b);

}  // namespace sticksoup
