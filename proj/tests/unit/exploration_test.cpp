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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sticksoup/errors.hpp"
#include "sticksoup/events.hpp"
#include "sticksoup/exploration.hpp"
#include "sticksoup/soup.hpp"
#include "topology_checks.hpp"

namespace sticksoup {
namespace {

constexpr double kPi = std::numbers::pi;
const Box kUnit({0, 0}, {1, 1});

Configuration hand_built(std::vector<Stick> sticks) {
  Configuration c;
  c.params = {1.0, 2.0, 0};
  c.window = {{0.5, 0.5}, 2.0};
  c.r_min = 0.01;
  c.sticks = std::move(sticks);
  return c;
}

Stick through(Point p, Point q) {
  const Point d = q - p;
  double v = std::atan2(d.y, d.x);
  if (v <= -kPi / 2) v += kPi;
  if (v > kPi / 2) v -= kPi;
  return Stick(0.5 * (p + q), 0.5 * norm(d), v);
}

Configuration unit_box_sample(double u, double r_min, std::uint64_t seed) {
  return sample_configuration({u, 2.0, 0}, {{0.5, 0.5}, std::sqrt(0.5)}, r_min, seed);
}

void ExpectPoint(Point p, Point q) {
  EXPECT_NEAR(p.x, q.x, 1e-12);
  EXPECT_NEAR(p.y, q.y, 1e-12);
}

TEST(BuildArrangement, EmptyConfiguration) {
  const Arrangement a = build_arrangement(hand_built({}), kUnit);
  EXPECT_EQ(a.vertices.size(), 4u);
  EXPECT_EQ(a.edges.size(), 4u);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(a.degree(v), 2);
  ExpectPoint(a.vertices[a.origin(a.start_dart)], {0, 0});
  EXPECT_EQ(a.edge_of(a.start_dart).label, EdgeLabel::kBoxBottom);
}

TEST(BuildArrangement, InteriorStickIsIsolatedEdge) {
  const Arrangement a = build_arrangement(hand_built({through({0.3, 0.4}, {0.6, 0.7})}), kUnit);
  EXPECT_EQ(a.vertices.size(), 6u);
  EXPECT_EQ(a.edges.size(), 5u);
  int degree_one = 0;
  for (int v = 0; v < static_cast<int>(a.vertices.size()); ++v) degree_one += a.degree(v) == 1;
  EXPECT_EQ(degree_one, 2);
}

TEST(BuildArrangement, BottomCrossingVertexHasDegreeThree) {
  const Arrangement a = build_arrangement(hand_built({through({0.5, -0.2}, {0.6, 0.5})}), kUnit);
  int found = 0;
  for (int v = 0; v < static_cast<int>(a.vertices.size()); ++v) {
    if (std::abs(a.vertices[v].y) < 1e-15 && std::abs(a.vertices[v].x - 0.5 - 0.2 / 7.0) < 1e-12) {
      EXPECT_EQ(a.degree(v), 3);
      EXPECT_EQ(a.vertex_sides[v], kSideBottom);
      ++found;
    }
  }
  EXPECT_EQ(found, 1);
}

TEST(BuildArrangement, TwinsAndRotationConsistent) {
  for (int i = 0; i < 50; ++i) {
    const Configuration c = unit_box_sample(1.0, 0.05, trial_seed(51, i));
    Arrangement a;
    try {
      a = build_arrangement(c, kUnit);
    } catch (const DegeneracyError&) {
      continue;
    }
    for (int d = 0; d < a.dart_count(); ++d) {
      EXPECT_EQ(Arrangement::twin(Arrangement::twin(d)), d);
      EXPECT_EQ(a.origin(Arrangement::twin(d)), a.target(d));
      EXPECT_EQ(a.rotation[a.rotation_begin[a.origin(d)] + a.rotation_pos[d]], d);
    }
    for (int v = 0; v < static_cast<int>(a.vertices.size()); ++v) {
      for (int k = a.rotation_begin[v] + 1; k < a.rotation_begin[v + 1]; ++k) {
        EXPECT_LT(a.dart_angle[a.rotation[k - 1]], a.dart_angle[a.rotation[k]]);
      }
      EXPECT_TRUE(kUnit.contains(a.vertices[v]));
    }
  }
}

TEST(BuildArrangement, NearCoincidentVerticesAreDegenerate) {
  // Two sticks crossing the bottom side 1e-12 apart.
  const auto c = hand_built({through({0.5, -0.2}, {0.5, 0.5}), through({0.3 + 1e-12, -0.2}, {1.0 + 1e-12, 0.5})});
  EXPECT_THROW(build_arrangement(c, kUnit), DegeneracyError);
}

TEST(BuildArrangement, BoxOutsideWindowRejected) {
  EXPECT_THROW(build_arrangement(hand_built({}), Box({0, 0}, {3, 3})), ArgumentError);
}

TEST(TraceExploration, EmptyConfiguration) {
  const auto r = trace_exploration(build_arrangement(hand_built({}), kUnit));
  EXPECT_EQ(r.outcome, ExplorationOutcome::kRight);
  EXPECT_NEAR(r.path.length(), 1.0, 1e-12);
  ASSERT_EQ(r.path.size(), 2u);
  ExpectPoint(r.path.front(), {0, 0});
  ExpectPoint(r.path.back(), {1, 0});
}

TEST(TraceExploration, SingleStickDetour) {
  const auto r = trace_exploration(build_arrangement(hand_built({through({0.5, -0.3}, {0.5, 0.4})}), kUnit));
  EXPECT_EQ(r.outcome, ExplorationOutcome::kRight);
  EXPECT_NEAR(r.path.length(), 1.8, 1e-12);
  const std::vector<Point> expected{{0, 0}, {0.5, 0}, {0.5, 0.4}, {0.5, 0}, {1, 0}};
  ASSERT_EQ(r.path.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) ExpectPoint(r.path.vertices()[i], expected[i]);
  EXPECT_EQ(r.sticks_touched, std::vector<int>{0});
}

TEST(TraceExploration, SpanningStickGivesTop) {
  const auto r = trace_exploration(build_arrangement(hand_built({through({0.5, -0.3}, {0.5, 1.2})}), kUnit));
  EXPECT_EQ(r.outcome, ExplorationOutcome::kTop);
  ExpectPoint(r.path.back(), {0.5, 1});
}

TEST(TraceExploration, StickEndingOnLeftSideIsDeadEnd) {
  const auto c = hand_built({through({0.4, -0.1}, {-0.1, 0.4})});
  const auto r = trace_exploration(build_arrangement(c, kUnit));
  EXPECT_EQ(r.outcome, ExplorationOutcome::kRight);
  const Polyline tail = last_left_subpath(r, kUnit);
  ExpectPoint(tail.front(), {0, 0.3});
  ExpectPoint(tail.back(), {1, 0});
  EXPECT_NEAR(tail.length(), 0.3 * std::sqrt(2.0) + 0.7, 1e-12);
}

TEST(TraceExploration, DichotomyAgreesWithUnionFind) {
  for (double u : {0.3, 1.0, 2.0}) {
    int tops = 0, checked = 0;
    for (int i = 0; i < 150; ++i) {
      const Configuration c = unit_box_sample(u, 0.05, trial_seed(61, i));
      ExplorationResult r;
      try {
        r = trace_exploration(build_arrangement(c, kUnit));
      } catch (const DegeneracyError&) {
        continue;
      }
      ++checked;
      const bool top = r.outcome == ExplorationOutcome::kTop;
      tops += top;
      EXPECT_EQ(top, testing::covered_top_bottom(c, kUnit)) << "u " << u << " trial " << i;
    }
    EXPECT_GT(checked, 140);
    if (u >= 1.0) EXPECT_GT(tops, 0);
  }
}

TEST(TraceExploration, PathInvariants) {
  for (int i = 0; i < 150; ++i) {
    const Configuration c = unit_box_sample(1.0, 0.05, trial_seed(62, i));
    Arrangement a;
    ExplorationResult r;
    try {
      a = build_arrangement(c, kUnit);
      r = trace_exploration(a);
    } catch (const DegeneracyError&) {
      continue;
    }
    ExpectPoint(r.path.front(), {0, 0});
    for (const Point& p : r.path.vertices()) EXPECT_TRUE(kUnit.contains(p));
    const Point last = r.path.back();
    if (r.outcome == ExplorationOutcome::kTop) {
      EXPECT_EQ(last.y, 1.0);
    } else {
      EXPECT_EQ(last.x, 1.0);
    }
    EXPECT_EQ(testing::repeated_darts(r), 0);
    EXPECT_LE(testing::max_point_multiplicity(r), 4);
    EXPECT_EQ(testing::clockwise_order_violations(r, a), 0);
    EXPECT_EQ(testing::entering_arm_violations(r, a, c, Annulus({0.5, 0.5}, 0.1, 0.4)), 0);
  }
}

TEST(Explore, PrunedTraceMatchesFullTrace) {
  for (int i = 0; i < 100; ++i) {
    const Configuration c = unit_box_sample(1.0, 0.05, trial_seed(63, i));
    ExplorationResult full;
    try {
      full = trace_exploration(build_arrangement(c, kUnit));
    } catch (const DegeneracyError&) {
      continue;
    }
    const Exploration pruned = explore(c, kUnit);
    EXPECT_EQ(pruned.result.outcome, full.outcome);
    EXPECT_EQ(pruned.result.path.vertices(), full.path.vertices());
    EXPECT_EQ(pruned.result.sticks_touched, full.sticks_touched);
  }
}

TEST(LastLeftSubpath, EmptyConfigurationIsWholeBottom) {
  const auto r = trace_exploration(build_arrangement(hand_built({}), kUnit));
  EXPECT_EQ(last_left_subpath(r, kUnit).vertices(), r.path.vertices());
}

TEST(LastLeftSubpath, NoReturnGivesFullPath) {
  const auto r = trace_exploration(build_arrangement(hand_built({through({0.5, -0.3}, {0.5, 0.4})}), kUnit));
  EXPECT_EQ(last_left_subpath(r, kUnit).vertices(), r.path.vertices());
}

TEST(LastLeftSubpath, CrossesNoStick) {
  for (int i = 0; i < 150; ++i) {
    const Configuration c = unit_box_sample(0.6, 0.05, trial_seed(64, i));
    Exploration e;
    try {
      e = explore(c, kUnit);
    } catch (const DegeneracyError&) {
      continue;
    }
    const Polyline tail = last_left_subpath(e.result, kUnit);
    for (const Stick& s : c.sticks) {
      EXPECT_FALSE(polyline_crosses_segment(tail, stick_to_segment(s))) << "trial " << i;
    }
  }
}

TEST(CountTraversals, Examples) {
  const Annulus ann({0, 0}, 1, 2);
  const auto diameter = count_traversals(Polyline({{-3, 0}, {3, 0}}), ann);
  EXPECT_EQ(diameter.k, 2);
  ASSERT_EQ(diameter.arms.size(), 2u);
  EXPECT_EQ(diameter.arms[0].direction, ArmDirection::kEntering);
  EXPECT_EQ(diameter.arms[1].direction, ArmDirection::kExiting);
  EXPECT_EQ(count_traversals(Polyline({{3, 3}, {4, 3}}), ann).k, 0);
  const auto radial = count_traversals(Polyline({{0, 0}, {3, 0}}), ann);
  EXPECT_EQ(radial.k, 1);
  EXPECT_EQ(radial.arms[0].direction, ArmDirection::kExiting);
}

TEST(CountTraversals, ReturnsToSameCircleDoNotCount) {
  const Annulus ann({0, 0}, 1, 2);
  // Enters through the outer circle and leaves through it again.
  EXPECT_EQ(count_traversals(Polyline({{-3, 1.5}, {3, 1.5}}), ann).k, 0);
  // Enters, bounces off the inner circle region and exits: still no traversal.
  EXPECT_EQ(count_traversals(Polyline({{3, 0}, {1.5, 0}, {3, 0.5}}), ann).k, 0);
  // Vertices exactly on the circles.
  EXPECT_EQ(count_traversals(Polyline({{2, 0}, {1.5, 0}, {1, 0}}), ann).k, 1);
}

TEST(PolylineCrossesSegment, Examples) {
  const Segment s({-1, 0}, {1, 0});
  EXPECT_TRUE(polyline_crosses_segment(Polyline({{-0.5, -1}, {0.5, 1}}), s));
  EXPECT_FALSE(polyline_crosses_segment(Polyline({{-0.5, 1}, {0, 0}, {0.5, 1}}), s));
  EXPECT_FALSE(polyline_crosses_segment(Polyline({{-0.5, 1}, {-0.5, 0}, {0.5, 0}, {0.5, 1}}), s));
  EXPECT_TRUE(polyline_crosses_segment(Polyline({{-0.5, 1}, {-0.5, 0}, {0.5, 0}, {0.5, -1}}), s));
}

TEST(PolylineCrossesSegment, OutsideOpenSegmentDoesNotCount) {
  const Segment s({-1, 0}, {1, 0});
  EXPECT_FALSE(polyline_crosses_segment(Polyline({{2, -1}, {2, 1}}), s));
  EXPECT_FALSE(polyline_crosses_segment(Polyline({{1, -1}, {1, 1}}), s));
}

TEST(BoxDimension, StraightSegment) {
  const std::vector<double> scales{1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  EXPECT_NEAR(box_dimension(Polyline({{0, 0}, {1, 0.37}}), scales), 1.0, 0.05);
}

TEST(BoxDimension, KochCurveOracle) {
  const std::vector<double> scales{1.0 / 9, 1.0 / 27, 1.0 / 81, 1.0 / 243};
  const Polyline koch = testing::koch_curve(6);
  EXPECT_EQ(koch.size(), 4097u);
  EXPECT_NEAR(box_dimension(koch, scales), std::log(4.0) / std::log(3.0), 0.1);
}

TEST(BoxDimension, RejectsDegenerateInput) {
  const std::vector<double> scales{0.1, 0.01};
  EXPECT_THROW(box_dimension(Polyline({{0, 0}}), scales), ArgumentError);
  const std::vector<double> one{0.1, 0.1};
  EXPECT_THROW(box_dimension(Polyline({{0, 0}, {1, 1}}), one), ArgumentError);
}

TEST(HitsAllBalls, Examples) {
  const Polyline p({{0, 0}, {1, 0}, {1, 1}});
  const std::vector<Ball> on_path{{{0.2, 0}, 0.01}, {{1, 0.5}, 0.01}};
  EXPECT_TRUE(hits_all_balls(p, on_path));
  const std::vector<Ball> one_off{{{0.2, 0}, 0.01}, {{0.5, 0.5}, 0.1}};
  EXPECT_FALSE(hits_all_balls(p, one_off));
  EXPECT_TRUE(hits_all_balls(p, {}));
}

}  // namespace
}  // namespace sticksoup
