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

// Planar arrangement of clipped sticks and box sides, the wall-following
// exploration path, and analyses of traced curves.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sticksoup/geometry.hpp"
#include "sticksoup/soup.hpp"

namespace sticksoup {

enum class EdgeLabel : std::uint8_t { kStick, kBoxBottom, kBoxRight, kBoxTop, kBoxLeft };

/// Dart 2e runs from `from` to `to`; dart 2e + 1 is its twin. For stick edges
/// `from` precedes `to` along the clipped stick.
struct ArrangementEdge {
  int from = -1;
  int to = -1;
  EdgeLabel label = EdgeLabel::kStick;
  int stick = -1;  // configuration index, -1 for box sides
};

struct Arrangement {
  Box box{{0.0, 0.0}, {1.0, 1.0}};
  std::vector<Point> vertices;
  std::vector<std::uint8_t> vertex_sides;        // BoxSide bits
  std::vector<std::vector<int>> vertex_sticks;   // sticks through each vertex
  std::vector<ArrangementEdge> edges;
  std::vector<double> dart_angle;
  std::vector<int> rotation_begin;  // CSR offsets per vertex
  std::vector<int> rotation;        // outgoing darts, counter-clockwise by angle
  std::vector<int> rotation_pos;    // index of each dart within its origin's rotation
  std::vector<int> sticks;          // configuration indices present
  std::vector<Segment> clipped;     // clipped segment of each entry of `sticks`
  int start_dart = -1;              // eastbound bottom dart leaving the lower-left corner

  static int twin(int dart) { return dart ^ 1; }
  const ArrangementEdge& edge_of(int dart) const { return edges[dart >> 1]; }
  int origin(int dart) const { return dart & 1 ? edges[dart >> 1].to : edges[dart >> 1].from; }
  int target(int dart) const { return dart & 1 ? edges[dart >> 1].from : edges[dart >> 1].to; }
  int dart_count() const { return static_cast<int>(2 * edges.size()); }
  int degree(int vertex) const { return rotation_begin[vertex + 1] - rotation_begin[vertex]; }
};

/// All sticks of the configuration meeting the box. The box must lie inside
/// the window disk. Throws DegeneracyError when distinct vertices fall within
/// 1e-9 box diagonals of each other along a segment, when sticks overlap, or
/// when a stick runs along a side.
Arrangement build_arrangement(const Configuration& c, const Box& box);

/// Same over explicit segments; `ids` gives the stick index reported for each.
Arrangement build_arrangement(std::span<const Segment> segments, std::span<const int> ids,
                              const Box& box);

enum class ExplorationOutcome { kRight, kTop };

struct ExplorationResult {
  Polyline path;
  ExplorationOutcome outcome = ExplorationOutcome::kRight;
  std::vector<int> dart_log;
  std::vector<int> path_vertices;  // arrangement vertex of each path point
  std::vector<int> sticks_touched; // in order of first touch
};

/// Wall-following walk from the lower-left corner that keeps the covered set
/// on its right: at each vertex take the first outgoing dart clockwise from
/// the reverse of the incoming one. Left-side darts are never taken, so a
/// stick ending on the left side is a dead end. Stops at the first vertex on
/// the top or right side.
ExplorationResult trace_exploration(const Arrangement& a);

/// Sticks connected to the bottom side through chains of intersecting clipped
/// sticks. The trace never leaves their union with the box sides.
std::vector<int> bottom_cluster(const Configuration& c, const Box& box);

struct Exploration {
  Arrangement arrangement;
  ExplorationResult result;
};

/// Builds the arrangement of the bottom cluster only and traces it. The trace
/// equals the one over the full arrangement.
Exploration explore(const Configuration& c, const Box& box);

/// Suffix of the path from its last point on the left side of the box.
Polyline last_left_subpath(const ExplorationResult& r, const Box& box);

/// Edge and vertex stick incidences along a traced path, used to attribute
/// arm pieces to sticks.
struct PathAnnotation {
  std::vector<int> segment_stick;                // per path segment; -1 for box sides
  std::vector<std::vector<int>> vertex_sticks;   // per path vertex
};

PathAnnotation annotate_path(const ExplorationResult& r, const Arrangement& a);

enum class ArmDirection { kEntering, kExiting };

struct Arm {
  ArmDirection direction = ArmDirection::kEntering;
  Polyline path;
  std::vector<int> sticks_used;  // empty without an annotation
};

struct TraversalReport {
  int k = 0;
  std::vector<Arm> arms;
};

/// Maximal sub-paths strictly inside the open annulus whose two endpoints lie
/// on different boundary circles.
TraversalReport count_traversals(const Polyline& p, const Annulus& annulus,
                                 const PathAnnotation* annotation = nullptr);

/// Whether the polyline crosses the open segment: it arrives in one open
/// half-plane of the supporting line and leaves in the other through a point
/// of the open segment, possibly after running along it.
bool polyline_crosses_segment(const Polyline& p, const Segment& s);

/// Least-squares slope of log(occupied cells) against log(1/scale).
double box_dimension(const Polyline& p, std::span<const double> scales);

struct Ball {
  Point center;
  double radius = 1.0;
};

bool hits_all_balls(const Polyline& p, std::span<const Ball> balls);

}  // namespace sticksoup
