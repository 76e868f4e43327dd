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

#include "sticksoup/exploration.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "sticksoup/errors.hpp"
#include "sticksoup/spatial_index.hpp"

namespace sticksoup {

namespace {

constexpr double kCoincidence = 1e-9;   // in box diagonals
constexpr double kAngleTol = 1e-12;     // radians

std::string describe(Point p) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

// A straight carrier (stick or box side) and the vertices placed along it.
struct Carrier {
  Point origin;
  Point unit;
  EdgeLabel label = EdgeLabel::kStick;
  int stick = -1;
  std::vector<std::pair<double, int>> stops;  // (arc length, vertex)
};

class Builder {
 public:
  explicit Builder(const Box& box) : eps_(kCoincidence * box.diagonal()) { a_.box = box; }

  int add_vertex(Point p, std::uint8_t sides) {
    a_.vertices.push_back(p);
    a_.vertex_sides.push_back(sides);
    a_.vertex_sticks.emplace_back();
    return static_cast<int>(a_.vertices.size()) - 1;
  }

  Arrangement build(std::span<const Segment> segments, std::span<const int> ids) {
    const Box& b = a_.box;
    const Point c0 = b.min();
    const Point c1{b.max().x, b.min().y};
    const Point c2 = b.max();
    const Point c3{b.min().x, b.max().y};
    const int v0 = add_vertex(c0, kSideBottom | kSideLeft);
    const int v1 = add_vertex(c1, kSideBottom | kSideRight);
    const int v2 = add_vertex(c2, kSideTop | kSideRight);
    const int v3 = add_vertex(c3, kSideTop | kSideLeft);
    const double w = b.width();
    const double h = b.height();
    carriers_.push_back({c0, {1.0, 0.0}, EdgeLabel::kBoxBottom, -1, {{0.0, v0}, {w, v1}}});
    carriers_.push_back({c1, {0.0, 1.0}, EdgeLabel::kBoxRight, -1, {{0.0, v1}, {h, v2}}});
    carriers_.push_back({c3, {1.0, 0.0}, EdgeLabel::kBoxTop, -1, {{0.0, v3}, {w, v2}}});
    carriers_.push_back({c0, {0.0, 1.0}, EdgeLabel::kBoxLeft, -1, {{0.0, v0}, {h, v3}}});

    for (std::size_t i = 0; i < segments.size(); ++i) add_stick(segments[i], ids[i]);
    intersect_sticks();
    split_carriers();
    build_rotation();
    a_.start_dart = 0;  // first bottom edge leaves the lower-left corner
    return std::move(a_);
  }

 private:
  void add_on_sides(Point p, std::uint8_t sides, int v) {
    const Box& b = a_.box;
    if (sides & kSideBottom) carriers_[0].stops.push_back({p.x - b.min().x, v});
    if (sides & kSideRight) carriers_[1].stops.push_back({p.y - b.min().y, v});
    if (sides & kSideTop) carriers_[2].stops.push_back({p.x - b.min().x, v});
    if (sides & kSideLeft) carriers_[3].stops.push_back({p.y - b.min().y, v});
  }

  void check_interior_endpoint(Point p) const {
    const Box& b = a_.box;
    const double gap = std::min({p.x - b.min().x, b.max().x - p.x, p.y - b.min().y,
                                 b.max().y - p.y});
    if (gap < eps_) {
      throw DegeneracyError("stick endpoint " + describe(p) + " lies within tolerance of a box side");
    }
  }

  void add_stick(const Segment& s, int id) {
    if (!segment_meets_box(s, a_.box)) return;
    const auto clipped = clip_to_box(s, a_.box);
    if (!clipped) return;
    if (clipped->side0 & clipped->side1) {
      throw DegeneracyError("stick " + std::to_string(id) + " runs along a box side");
    }
    const Segment& seg = clipped->segment;
    if (clipped->side0 == kSideNone) check_interior_endpoint(seg.a());
    if (clipped->side1 == kSideNone) check_interior_endpoint(seg.b());

    const int va = add_vertex(seg.a(), clipped->side0);
    const int vb = add_vertex(seg.b(), clipped->side1);
    add_on_sides(seg.a(), clipped->side0, va);
    add_on_sides(seg.b(), clipped->side1, vb);
    const double len = seg.length();
    carriers_.push_back({seg.a(), (1.0 / len) * seg.direction(), EdgeLabel::kStick, id,
                         {{0.0, va}, {len, vb}}});
    a_.sticks.push_back(id);
    a_.clipped.push_back(seg);
  }

  void intersect_sticks() {
    constexpr std::size_t first_stick = 4;
    for (const auto& [i, j] : candidate_pairs(a_.clipped)) {
      const Segment& s1 = a_.clipped[i];
      const Segment& s2 = a_.clipped[j];
      const SegmentIntersection x = segment_intersection(s1, s2);
      if (x.kind == SegmentIntersection::Kind::kNone) continue;
      if (x.kind == SegmentIntersection::Kind::kOverlap) {
        throw DegeneracyError("sticks " + std::to_string(a_.sticks[i]) + " and " +
                              std::to_string(a_.sticks[j]) + " overlap");
      }
      const int v = add_vertex(x.point, kSideNone);
      carriers_[first_stick + i].stops.push_back({x.t1 * s1.length(), v});
      carriers_[first_stick + j].stops.push_back({x.t2 * s2.length(), v});
    }
  }

  void split_carriers() {
    for (Carrier& c : carriers_) {
      std::sort(c.stops.begin(), c.stops.end());
      for (std::size_t k = 0; k < c.stops.size(); ++k) {
        const int v = c.stops[k].second;
        if (c.stick >= 0) {
          auto& list = a_.vertex_sticks[v];
          if (std::find(list.begin(), list.end(), c.stick) == list.end()) list.push_back(c.stick);
        }
        if (k == 0) continue;
        const int u = c.stops[k - 1].second;
        if (c.stops[k].first - c.stops[k - 1].first < eps_) {
          throw DegeneracyError("vertices " + describe(a_.vertices[u]) + " and " +
                                describe(a_.vertices[v]) + " coincide within tolerance");
        }
        a_.edges.push_back({u, v, c.label, c.stick});
      }
    }
  }

  void build_rotation() {
    const int n_vertices = static_cast<int>(a_.vertices.size());
    const int n_darts = a_.dart_count();
    a_.dart_angle.resize(n_darts);
    std::vector<int> degree(n_vertices + 1, 0);
    for (int d = 0; d < n_darts; ++d) {
      const Point from = a_.vertices[a_.origin(d)];
      const Point to = a_.vertices[a_.target(d)];
      a_.dart_angle[d] = std::atan2(to.y - from.y, to.x - from.x);
      ++degree[a_.origin(d) + 1];
    }
    a_.rotation_begin.assign(n_vertices + 1, 0);
    for (int v = 0; v < n_vertices; ++v) a_.rotation_begin[v + 1] = a_.rotation_begin[v] + degree[v + 1];
    a_.rotation.assign(n_darts, -1);
    std::vector<int> fill(a_.rotation_begin.begin(), a_.rotation_begin.end() - 1);
    for (int d = 0; d < n_darts; ++d) a_.rotation[fill[a_.origin(d)]++] = d;

    a_.rotation_pos.assign(n_darts, -1);
    for (int v = 0; v < n_vertices; ++v) {
      auto first = a_.rotation.begin() + a_.rotation_begin[v];
      auto last = a_.rotation.begin() + a_.rotation_begin[v + 1];
      std::sort(first, last, [&](int x, int y) { return a_.dart_angle[x] < a_.dart_angle[y]; });
      const int deg = a_.degree(v);
      for (int k = 0; k < deg; ++k) {
        const int d = a_.rotation[a_.rotation_begin[v] + k];
        a_.rotation_pos[d] = k;
        if (deg > 1) {
          const int e = a_.rotation[a_.rotation_begin[v] + (k + 1) % deg];
          double gap = a_.dart_angle[e] - a_.dart_angle[d];
          if (k + 1 == deg) gap += 2.0 * std::numbers::pi;
          if (gap < kAngleTol) {
            throw DegeneracyError("edges at vertex " + describe(a_.vertices[v]) +
                                  " leave in the same direction");
          }
        }
      }
    }
  }

  Arrangement a_;
  double eps_;
  std::vector<Carrier> carriers_;
};

void require_box_in_window(const Configuration& c, const Box& box) {
  if (c.coverage != WindowCoverage::kDisk) {
    throw ArgumentError("exploration needs a configuration covering the full window disk");
  }
  const double reach = distance(box.center(), c.window.center) + 0.5 * box.diagonal();
  if (reach > c.window.radius * (1.0 + kRelTol)) {
    throw ArgumentError("box extends beyond the sampling window");
  }
}

void add_unique(std::vector<int>& list, std::vector<char>& seen, int stick) {
  if (stick < 0) return;
  if (static_cast<std::size_t>(stick) >= seen.size()) seen.resize(stick + 1, 0);
  if (seen[stick]) return;
  seen[stick] = 1;
  list.push_back(stick);
}

}  // namespace

Arrangement build_arrangement(std::span<const Segment> segments, std::span<const int> ids,
                              const Box& box) {
  if (segments.size() != ids.size()) throw ArgumentError("segments and ids differ in length");
  return Builder(box).build(segments, ids);
}

Arrangement build_arrangement(const Configuration& c, const Box& box) {
  require_box_in_window(c, box);
  const std::vector<Segment> segs = c.segments();
  std::vector<int> ids(segs.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return build_arrangement(segs, ids, box);
}

ExplorationResult trace_exploration(const Arrangement& a) {
  ExplorationResult r;
  std::vector<char> used(a.dart_count(), 0);
  std::vector<char> seen;
  std::vector<Point> points{a.vertices[a.origin(a.start_dart)]};
  r.path_vertices.push_back(a.origin(a.start_dart));

  int d = a.start_dart;
  while (true) {
    if (used[d]) {
      throw InvariantViolation("exploration revisited dart " + std::to_string(d));
    }
    used[d] = 1;
    r.dart_log.push_back(d);
    add_unique(r.sticks_touched, seen, a.edge_of(d).stick);
    const int v = a.target(d);
    for (int s : a.vertex_sticks[v]) add_unique(r.sticks_touched, seen, s);
    points.push_back(a.vertices[v]);
    r.path_vertices.push_back(v);

    const std::uint8_t sides = a.vertex_sides[v];
    if (sides & kSideTop) {
      r.outcome = ExplorationOutcome::kTop;
      break;
    }
    if (sides & kSideRight) {
      r.outcome = ExplorationOutcome::kRight;
      break;
    }

    const int back = Arrangement::twin(d);
    const int begin = a.rotation_begin[v];
    const int deg = a.degree(v);
    const int pos = a.rotation_pos[back];
    int next = back;
    for (int k = 1; k < deg; ++k) {
      const int cand = a.rotation[begin + (pos - k + deg) % deg];
      if (a.edge_of(cand).label == EdgeLabel::kBoxLeft) continue;
      next = cand;
      break;
    }
    d = next;
  }
  r.path = Polyline(std::move(points));
  return r;
}

std::vector<int> bottom_cluster(const Configuration& c, const Box& box) {
  require_box_in_window(c, box);
  std::vector<int> ids;
  std::vector<Segment> pieces;
  std::vector<std::uint8_t> sides;
  for (std::size_t i = 0; i < c.sticks.size(); ++i) {
    const Segment s = stick_to_segment(c.sticks[i]);
    if (!segment_meets_box(s, box)) continue;
    if (auto clipped = clip_to_box(s, box)) {
      ids.push_back(static_cast<int>(i));
      pieces.push_back(clipped->segment);
      sides.push_back(clipped->side0 | clipped->side1);
    }
  }

  const int n = static_cast<int>(pieces.size());
  std::vector<char> reached(n, 0);
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    if (sides[i] & kSideBottom) {
      reached[i] = 1;
      queue.push_back(i);
    }
  }
  if (!queue.empty()) {
    const SegmentGrid grid(pieces);
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      grid.for_each_neighbor(i, [&](int j) {
        if (reached[j]) return;
        if (segment_intersection(pieces[i], pieces[j]).intersects()) {
          reached[j] = 1;
          queue.push_back(j);
        }
      });
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (reached[i]) out.push_back(ids[i]);
  }
  return out;
}

Exploration explore(const Configuration& c, const Box& box) {
  const std::vector<int> ids = bottom_cluster(c, box);
  std::vector<Segment> segs;
  segs.reserve(ids.size());
  for (int i : ids) segs.push_back(stick_to_segment(c.sticks[i]));
  Exploration e{build_arrangement(segs, ids, box), {}};
  e.result = trace_exploration(e.arrangement);
  return e;
}

Polyline last_left_subpath(const ExplorationResult& r, const Box& box) {
  const auto& v = r.path.vertices();
  std::size_t start = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].x == box.min().x) start = i;
  }
  return Polyline(std::vector<Point>(v.begin() + static_cast<std::ptrdiff_t>(start), v.end()));
}

PathAnnotation annotate_path(const ExplorationResult& r, const Arrangement& a) {
  PathAnnotation out;
  out.segment_stick.reserve(r.dart_log.size());
  for (int d : r.dart_log) out.segment_stick.push_back(a.edge_of(d).stick);
  out.vertex_sticks.reserve(r.path_vertices.size());
  for (int v : r.path_vertices) out.vertex_sticks.push_back(a.vertex_sticks[v]);
  return out;
}

namespace {

enum class Zone { kInside, kRing, kOutside, kOnInner, kOnOuter };

struct Token {
  Zone zone;
  Point point;
  int segment = -1;  // segment the token lies on, or -1
  int vertex = -1;   // path vertex index, or -1
};

Zone classify(Point p, const Annulus& ann, bool snap) {
  const double rho = distance(p, ann.center());
  if (snap) {
    if (std::abs(rho - ann.inner()) <= kRelTol * ann.inner()) return Zone::kOnInner;
    if (std::abs(rho - ann.outer()) <= kRelTol * ann.outer()) return Zone::kOnOuter;
  }
  if (rho < ann.inner()) return Zone::kInside;
  if (rho > ann.outer()) return Zone::kOutside;
  return Zone::kRing;
}

bool on_circle(Zone z) { return z == Zone::kOnInner || z == Zone::kOnOuter; }

std::vector<Token> tokenize(const Polyline& p, const Annulus& ann) {
  const auto& v = p.vertices();
  std::vector<Zone> vertex_zone;
  for (const Point& q : v) vertex_zone.push_back(classify(q, ann, true));

  std::vector<Token> out;
  out.push_back({vertex_zone[0], v[0], -1, 0});
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Segment seg(v[i], v[i + 1]);
    std::vector<std::pair<double, Zone>> cuts;
    for (double t : segment_circle_params(seg, ann.center(), ann.inner())) {
      cuts.push_back({t, Zone::kOnInner});
    }
    for (double t : segment_circle_params(seg, ann.center(), ann.outer())) {
      cuts.push_back({t, Zone::kOnOuter});
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    const int si = static_cast<int>(i);
    auto push_open = [&](double t0, double t1) {
      const Point mid = seg.at(0.5 * (t0 + t1));
      out.push_back({classify(mid, ann, false), mid, si, -1});
    };
    double prev = 0.0;
    for (const auto& [t, zone] : cuts) {
      // A crossing at a segment end is already represented by its vertex token.
      if (t <= kRelTol && vertex_zone[i] == zone) continue;
      if (t >= 1.0 - kRelTol && vertex_zone[i + 1] == zone) continue;
      push_open(prev, t);
      out.push_back({zone, seg.at(t), si, -1});
      prev = t;
    }
    push_open(prev, 1.0);
    out.push_back({vertex_zone[i + 1], v[i + 1], -1, static_cast<int>(i + 1)});
  }
  return out;
}

}  // namespace

TraversalReport count_traversals(const Polyline& p, const Annulus& annulus,
                                 const PathAnnotation* annotation) {
  TraversalReport report;
  if (p.empty()) return report;
  const std::vector<Token> tokens = tokenize(p, annulus);

  bool open = false;  // after a boundary point, still inside the ring
  bool moved = false; // the open run has entered the ring
  Zone start_zone = Zone::kRing;
  std::vector<Point> points;
  std::vector<int> sticks;

  auto note_stick = [&](int s) {
    if (s >= 0 && std::find(sticks.begin(), sticks.end(), s) == sticks.end()) sticks.push_back(s);
  };

  for (const Token& tok : tokens) {
    if (on_circle(tok.zone)) {
      if (open && moved && tok.zone != start_zone) {
        points.push_back(tok.point);
        Arm arm;
        arm.direction =
            start_zone == Zone::kOnOuter ? ArmDirection::kEntering : ArmDirection::kExiting;
        std::vector<Point> clean;
        for (const Point& q : points) {
          if (clean.empty() || !(clean.back() == q)) clean.push_back(q);
        }
        arm.path = Polyline(std::move(clean));
        std::sort(sticks.begin(), sticks.end());
        arm.sticks_used = sticks;
        report.arms.push_back(std::move(arm));
      }
      open = true;
      moved = false;
      start_zone = tok.zone;
      points.assign(1, tok.point);
      sticks.clear();
      continue;
    }
    if (tok.zone != Zone::kRing) {
      open = false;
      continue;
    }
    if (!open) continue;
    moved = true;
    if (tok.vertex >= 0) {
      points.push_back(tok.point);
      if (annotation && static_cast<std::size_t>(tok.vertex) < annotation->vertex_sticks.size()) {
        for (int s : annotation->vertex_sticks[tok.vertex]) note_stick(s);
      }
    } else if (annotation && tok.segment >= 0 &&
               static_cast<std::size_t>(tok.segment) < annotation->segment_stick.size()) {
      note_stick(annotation->segment_stick[tok.segment]);
    }
  }
  report.k = static_cast<int>(report.arms.size());
  return report;
}

bool polyline_crosses_segment(const Polyline& p, const Segment& s) {
  const auto& v = p.vertices();
  const Point z = s.a();
  const Point d = s.direction();
  const double len = s.length();
  double extent = len;
  for (const Point& q : v) extent = std::max(extent, distance(q, z));
  const double tol = kRelTol * extent;
  const double tau = tol / len;

  auto offset = [&](Point q) { return cross(d, q - z) / len; };
  auto side = [&](Point q) {
    const double o = offset(q);
    return std::abs(o) <= tol ? 0 : (o > 0.0 ? 1 : -1);
  };
  auto in_open = [&](Point q) {
    const double t = dot(q - z, d) / (len * len);
    return t > tau && t < 1.0 - tau;
  };

  const std::size_t n = v.size();
  std::vector<int> sgn(n);
  for (std::size_t i = 0; i < n; ++i) sgn[i] = side(v[i]);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (sgn[i] != 0 && sgn[i + 1] != 0 && sgn[i] != sgn[i + 1]) {
      const double oi = offset(v[i]);
      const double oj = offset(v[i + 1]);
      const Point x = v[i] + (oi / (oi - oj)) * (v[i + 1] - v[i]);
      if (in_open(x)) return true;
    }
  }
  for (std::size_t j = 0; j < n;) {
    if (sgn[j] != 0) {
      ++j;
      continue;
    }
    std::size_t k = j;
    while (k + 1 < n && sgn[k + 1] == 0) ++k;
    bool inside = true;
    for (std::size_t m = j; m <= k; ++m) inside = inside && in_open(v[m]);
    if (inside && j > 0 && k + 1 < n && sgn[j - 1] != sgn[k + 1]) return true;
    j = k + 1;
  }
  return false;
}

double box_dimension(const Polyline& p, std::span<const double> scales) {
  if (p.size() < 2) throw ArgumentError("box dimension needs at least two vertices");
  std::vector<double> distinct(scales.begin(), scales.end());
  for (double s : distinct) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ArgumentError("scales must be positive");
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) throw ArgumentError("box dimension needs two distinct scales");

  const auto& v = p.vertices();
  Point lo = v[0];
  Point hi = v[0];
  for (const Point& q : v) {
    lo = {std::min(lo.x, q.x), std::min(lo.y, q.y)};
    hi = {std::max(hi.x, q.x), std::max(hi.y, q.y)};
  }

  std::vector<double> xs;
  std::vector<double> ys;
  for (double s : distinct) {
    const long long nx = std::max(1LL, static_cast<long long>(std::ceil((hi.x - lo.x) / s)));
    const long long ny = std::max(1LL, static_cast<long long>(std::ceil((hi.y - lo.y) / s)));
    auto col = [&](double x) {
      return std::clamp(static_cast<long long>(std::floor((x - lo.x) / s)), 0LL, nx - 1);
    };
    auto row = [&](double y) {
      return std::clamp(static_cast<long long>(std::floor((y - lo.y) / s)), 0LL, ny - 1);
    };
    std::vector<long long> cells;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      Point a = v[i];
      Point b = v[i + 1];
      if (b.x < a.x) std::swap(a, b);
      const long long c0 = col(a.x);
      const long long c1 = col(b.x);
      for (long long c = c0; c <= c1; ++c) {
        double ya = a.y;
        double yb = b.y;
        if (c0 != c1) {
          const double xa = std::clamp(lo.x + static_cast<double>(c) * s, a.x, b.x);
          const double xb = std::clamp(lo.x + static_cast<double>(c + 1) * s, a.x, b.x);
          const double slope = (b.y - a.y) / (b.x - a.x);
          ya = a.y + slope * (xa - a.x);
          yb = a.y + slope * (xb - a.x);
        }
        for (long long r = row(std::min(ya, yb)); r <= row(std::max(ya, yb)); ++r) {
          cells.push_back(r * nx + c);
        }
      }
    }
    std::sort(cells.begin(), cells.end());
    const auto count = std::unique(cells.begin(), cells.end()) - cells.begin();
    xs.push_back(std::log(1.0 / s));
    ys.push_back(std::log(static_cast<double>(count)));
  }

  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / n;
    my += ys[i] / n;
  }
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

bool hits_all_balls(const Polyline& p, std::span<const Ball> balls) {
  const auto& v = p.vertices();
  for (const Ball& ball : balls) {
    double best = v.empty() ? std::numeric_limits<double>::infinity() : distance(v[0], ball.center);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      best = std::min(best, point_segment_distance(ball.center, Segment(v[i], v[i + 1])));
    }
    if (best > ball.radius) return false;
  }
  return true;
}

}  // namespace sticksoup
