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

// Connectivity of the covered set inside a region, and the events built on
// it: arm events, single-stick left-right crossings, double circle hits and
// the invasion sequence.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "sticksoup/geometry.hpp"
#include "sticksoup/soup.hpp"

namespace sticksoup {

using Region = std::variant<Box, Annulus, Disk>;

/// Boundary flags of a cluster piece. Boxes use the BoxSide bits; annuli use
/// kTouchInner / kTouchOuter; disks use kTouchBoundary.
inline constexpr std::uint8_t kTouchInner = 1;
inline constexpr std::uint8_t kTouchOuter = 2;
inline constexpr std::uint8_t kTouchBoundary = 1;

/// A maximal piece of one stick inside the region. Annuli can cut a stick in two.
struct ClusterPiece {
  int stick = -1;
  Segment segment;
  std::uint8_t touches = 0;
};

struct ClusterPartition {
  std::vector<ClusterPiece> pieces;
  std::vector<int> cluster_of_piece;
  std::vector<std::uint8_t> cluster_touches;
  std::vector<int> representative;  // first piece of each cluster

  int cluster_count() const { return static_cast<int>(cluster_touches.size()); }
  std::vector<int> clusters_of_stick(int stick) const;
  bool any_cluster_touches(std::uint8_t flags) const;
};

/// Connected components of the union of the sticks clipped to the closed region.
ClusterPartition covered_components(std::span<const Segment> sticks, const Region& region);
ClusterPartition covered_components(const Configuration& c, const Region& region);

/// Some connected component of the sticks clipped to the closed annulus meets
/// both boundary circles. The annulus must lie inside the window.
bool arm_event(const Configuration& c, const Annulus& annulus);

/// A single stick meets both vertical sides of the box.
bool lr1_event(const Configuration& c, const Box& box);

/// Number of sticks meeting the circle in two distinct points. The circle
/// must lie inside the window, or be the window boundary of a circle-coverage
/// configuration.
int double_intersection_count(const Configuration& c, Point center, double radius);
int double_intersection_count(const Configuration& c, double radius);

/// Smallest annulus index that is fully resolved under truncation at r_min:
/// ceil(log2 r_min) + 2.
int truncation_floor(double r_min);

struct InvasionRecord {
  std::vector<int> indices;  // I_0 = m, I_1, ...
  std::vector<int> steps;    // L_j = I_{j-1} - I_j
  int stopping_time = 0;     // T = max{ j : I_j >= 1 }
  bool truncated = false;    // stopped at the truncation floor, not below 1
};

/// Invasion sequence through the dyadic annuli A_j = D(center; 2^(j-1), 2^j).
/// D_j is the largest n < j with A_n not hit by the sticks meeting A_j,
/// searched down to the truncation floor; a search that reaches the floor
/// without success yields floor - 1.
InvasionRecord invasion_sequence(const Configuration& c, int m);
InvasionRecord invasion_sequence(const Configuration& c, int m, Point center);

/// Y = j - D_j with D_j computed exactly for the given configuration. It agrees
/// with the untruncated soup on {Y >= 3} when r_min <= 2^(j-3).
int y_statistic(const Configuration& c, int j);
int y_statistic(const Configuration& c, int j, Point center);

}  // namespace sticksoup
