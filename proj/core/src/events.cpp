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

#include "sticksoup/events.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sticksoup/errors.hpp"
#include "sticksoup/spatial_index.hpp"

namespace sticksoup {

namespace {

void clip_into(const Segment& s, int stick, const Box& b, std::vector<ClusterPiece>& out) {
  if (auto c = clip_to_box(s, b)) {
    out.push_back({stick, c->segment, static_cast<std::uint8_t>(c->side0 | c->side1)});
  }
}

void clip_into(const Segment& s, int stick, const Annulus& a, std::vector<ClusterPiece>& out) {
  for (const RingPiece& p : clip_to_ring(s, a.center(), a.inner(), a.outer())) {
    const Point p0 = s.at(p.t0);
    const Point p1 = s.at(p.t1);
    if (p0 == p1) continue;
    std::uint8_t flags = 0;
    if (p.start_on_inner || p.end_on_inner) flags |= kTouchInner;
    if (p.start_on_outer || p.end_on_outer) flags |= kTouchOuter;
    out.push_back({stick, Segment(p0, p1), flags});
  }
}

void clip_into(const Segment& s, int stick, const Disk& d, std::vector<ClusterPiece>& out) {
  if (auto p = clip_to_disk(s, d.center, d.radius)) {
    const Point p0 = s.at(p->t0);
    const Point p1 = s.at(p->t1);
    if (p0 == p1) return;
    const bool touches = p->start_on_outer || p->end_on_outer;
    out.push_back({stick, Segment(p0, p1), touches ? kTouchBoundary : std::uint8_t{0}});
  }
}

// Sticks that cannot reach the region are skipped before clipping.
bool may_meet(const Segment& s, const Region& region) {
  return std::visit(
      [&](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Box>) {
          return segment_meets_box(s, r);
        } else if constexpr (std::is_same_v<T, Annulus>) {
          const RadialRange rr = radial_range(s, r.center());
          return rr.min <= r.outer() && rr.max >= r.inner();
        } else {
          return segment_meets_disk(s, r.center, r.radius);
        }
      },
      region);
}

void require_inside_window(const Configuration& c, Point center, double radius,
                           const char* what) {
  if (c.coverage != WindowCoverage::kDisk) {
    throw ArgumentError(std::string(what) + " needs a configuration covering the full window disk");
  }
  const double reach = distance(center, c.window.center) + radius;
  if (reach > c.window.radius * (1.0 + kRelTol)) {
    throw ArgumentError(std::string(what) + " extends beyond the sampling window");
  }
}

// Sticks meeting the annulus A_j, as radial ranges about the center.
struct Radial {
  std::vector<RadialRange> ranges;
};

Radial radial_ranges(const Configuration& c, Point center) {
  Radial r;
  r.ranges.reserve(c.sticks.size());
  for (const Stick& s : c.sticks) r.ranges.push_back(radial_range(stick_to_segment(s), center));
  return r;
}

// Smallest distance to the center reached by the sticks meeting A_j, or +inf
// when A_j is not hit.
double closest_approach(const Radial& r, int j) {
  const double lo = std::ldexp(1.0, j - 1);
  const double hi = std::ldexp(1.0, j);
  double best = std::numeric_limits<double>::infinity();
  for (const RadialRange& rr : r.ranges) {
    if (rr.max >= lo && rr.min <= hi) best = std::min(best, rr.min);
  }
  return best;
}

// Largest n < j with 2^n < reach, i.e. A_n not hit; INT_MIN when none exists.
int deepest_unhit(double reach, int j) {
  if (!(reach > 0.0)) return std::numeric_limits<int>::min();
  if (std::isinf(reach)) return j - 1;
  int n = static_cast<int>(std::ceil(std::log2(reach))) - 1;
  while (std::ldexp(1.0, n) >= reach) --n;
  while (std::ldexp(1.0, n + 1) < reach) ++n;
  return std::min(n, j - 1);
}

}  // namespace

std::vector<int> ClusterPartition::clusters_of_stick(int stick) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].stick == stick) out.push_back(cluster_of_piece[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ClusterPartition::any_cluster_touches(std::uint8_t flags) const {
  return std::any_of(cluster_touches.begin(), cluster_touches.end(),
                     [&](std::uint8_t t) { return (t & flags) == flags; });
}

ClusterPartition covered_components(std::span<const Segment> sticks, const Region& region) {
  ClusterPartition out;
  for (std::size_t i = 0; i < sticks.size(); ++i) {
    if (!may_meet(sticks[i], region)) continue;
    std::visit([&](const auto& r) { clip_into(sticks[i], static_cast<int>(i), r, out.pieces); },
               region);
  }

  const std::size_t n = out.pieces.size();
  std::vector<Segment> segs;
  segs.reserve(n);
  for (const ClusterPiece& p : out.pieces) segs.push_back(p.segment);

  DisjointSets sets(n);
  for (const auto& [i, j] : candidate_pairs(segs)) {
    if (sets.find(i) == sets.find(j)) continue;
    if (segment_intersection(segs[i], segs[j]).intersects()) sets.unite(i, j);
  }

  std::vector<int> label(n, -1);
  out.cluster_of_piece.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const int root = sets.find(static_cast<int>(i));
    if (label[root] < 0) {
      label[root] = static_cast<int>(out.cluster_touches.size());
      out.cluster_touches.push_back(0);
      out.representative.push_back(static_cast<int>(i));
    }
    out.cluster_of_piece[i] = label[root];
    out.cluster_touches[label[root]] |= out.pieces[i].touches;
  }
  return out;
}

ClusterPartition covered_components(const Configuration& c, const Region& region) {
  const std::vector<Segment> segs = c.segments();
  return covered_components(segs, region);
}

bool arm_event(const Configuration& c, const Annulus& annulus) {
  require_inside_window(c, annulus.center(), annulus.outer(), "annulus");
  return covered_components(c, annulus).any_cluster_touches(kTouchInner | kTouchOuter);
}

bool lr1_event(const Configuration& c, const Box& box) {
  const double half_diag = 0.5 * box.diagonal();
  require_inside_window(c, box.center(), half_diag, "box");
  for (const Stick& s : c.sticks) {
    const auto clipped = clip_to_box(stick_to_segment(s), box);
    if (!clipped) continue;
    const bool left = (clipped->side0 & kSideLeft) || (clipped->side1 & kSideLeft);
    const bool right = (clipped->side0 & kSideRight) || (clipped->side1 & kSideRight);
    if (left && right) return true;
  }
  return false;
}

int double_intersection_count(const Configuration& c, Point center, double radius) {
  if (!(radius > 0.0)) throw ArgumentError("circle radius must be positive");
  if (c.coverage == WindowCoverage::kCircle) {
    if (!(center == c.window.center) ||
        std::abs(radius - c.window.radius) > kRelTol * c.window.radius) {
      throw ArgumentError("circle-coverage configurations only resolve their window boundary");
    }
  } else {
    require_inside_window(c, center, radius, "circle");
  }
  int count = 0;
  for (const Stick& s : c.sticks) {
    if (segment_circle_params(stick_to_segment(s), center, radius).size() == 2) ++count;
  }
  return count;
}

int double_intersection_count(const Configuration& c, double radius) {
  return double_intersection_count(c, c.window.center, radius);
}

int truncation_floor(double r_min) {
  if (!(r_min > 0.0)) throw ArgumentError("r_min must be positive");
  return static_cast<int>(std::ceil(std::log2(r_min))) + 2;
}

InvasionRecord invasion_sequence(const Configuration& c, int m) {
  return invasion_sequence(c, m, c.window.center);
}

InvasionRecord invasion_sequence(const Configuration& c, int m, Point center) {
  if (m < 1) throw ArgumentError("invasion needs m >= 1");
  const int floor = truncation_floor(c.r_min);
  if (m <= floor) throw ArgumentError("r_min too large to resolve annulus index m");
  require_inside_window(c, center, std::ldexp(1.0, m), "invasion annuli");

  const Radial radial = radial_ranges(c, center);
  InvasionRecord rec;
  rec.indices.push_back(m);
  int current = m;
  while (current >= 1 && current >= floor) {
    int next = deepest_unhit(closest_approach(radial, current), current);
    if (next < floor) next = floor - 1;
    rec.steps.push_back(current - next);
    rec.indices.push_back(next);
    if (next >= 1) rec.stopping_time = static_cast<int>(rec.indices.size()) - 1;
    current = next;
  }
  rec.truncated = current >= 1;
  return rec;
}

int y_statistic(const Configuration& c, int j) { return y_statistic(c, j, c.window.center); }

int y_statistic(const Configuration& c, int j, Point center) {
  require_inside_window(c, center, std::ldexp(1.0, j), "annulus A_j");
  const Radial radial = radial_ranges(c, center);
  const int d = deepest_unhit(closest_approach(radial, j), j);
  if (d == std::numeric_limits<int>::min()) {
    throw DegeneracyError("a stick passes through the annulus center");
  }
  return j - d;
}

}  // namespace sticksoup
