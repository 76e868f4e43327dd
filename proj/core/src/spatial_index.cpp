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

#include "sticksoup/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sticksoup {

namespace {

constexpr int kMaxCellsPerAxis = 2048;
constexpr std::size_t kBruteForceBelow = 200;

}  // namespace

SegmentGrid::SegmentGrid(std::span<const Segment> segments, double cell_size) {
  const std::size_t n = segments.size();
  seg_cells_begin_.assign(n + 1, 0);
  stamp_.assign(n, 0);
  if (n == 0) {
    cell_begin_.assign(2, 0);
    return;
  }

  Point lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point hi{-lo.x, -lo.y};
  std::vector<double> lengths;
  lengths.reserve(n);
  for (const Segment& s : segments) {
    lo = {std::min({lo.x, s.a().x, s.b().x}), std::min({lo.y, s.a().y, s.b().y})};
    hi = {std::max({hi.x, s.a().x, s.b().x}), std::max({hi.y, s.a().y, s.b().y})};
    lengths.push_back(s.length());
  }
  if (!(cell_size > 0.0)) {
    std::nth_element(lengths.begin(), lengths.begin() + n / 2, lengths.end());
    cell_size = lengths[n / 2];
  }
  const double extent = std::max(hi.x - lo.x, hi.y - lo.y);
  const double area_cell =
      std::sqrt((hi.x - lo.x) * (hi.y - lo.y) / (4.0 * static_cast<double>(n) + 64.0));
  cell_ = std::max({cell_size, extent / kMaxCellsPerAxis, area_cell, 1e-300});
  origin_ = lo;
  nx_ = std::max(1, static_cast<int>(std::ceil((hi.x - lo.x) / cell_)));
  ny_ = std::max(1, static_cast<int>(std::ceil((hi.y - lo.y) / cell_)));

  auto col = [&](double x) {
    return std::clamp(static_cast<int>(std::floor((x - origin_.x) / cell_)), 0, nx_ - 1);
  };
  auto row = [&](double y) {
    return std::clamp(static_cast<int>(std::floor((y - origin_.y) / cell_)), 0, ny_ - 1);
  };

  // Column-wise supercover: within each column the segment spans a y-interval.
  std::vector<std::uint32_t> cells;
  for (std::size_t i = 0; i < n; ++i) {
    Point p = segments[i].a();
    Point q = segments[i].b();
    if (q.x < p.x) std::swap(p, q);
    // Padding keeps contacts that land on a cell border within rounding.
    const double pad = 1e-9 * cell_;
    const int c0 = col(p.x - pad);
    const int c1 = col(q.x + pad);
    for (int c = c0; c <= c1; ++c) {
      double ya = p.y;
      double yb = q.y;
      if (c0 != c1 && q.x > p.x) {
        const double xa = std::clamp(origin_.x + c * cell_ - pad, p.x, q.x);
        const double xb = std::clamp(origin_.x + (c + 1) * cell_ + pad, p.x, q.x);
        const double slope = (q.y - p.y) / (q.x - p.x);
        ya = p.y + slope * (xa - p.x);
        yb = p.y + slope * (xb - p.x);
      }
      const int r0 = row(std::min(ya, yb) - pad);
      const int r1 = row(std::max(ya, yb) + pad);
      for (int r = r0; r <= r1; ++r) {
        cells.push_back(static_cast<std::uint32_t>(r * nx_ + c));
      }
    }
    seg_cells_begin_[i + 1] = static_cast<std::uint32_t>(cells.size());
  }
  seg_cells_ = std::move(cells);

  // Counting sort into cell buckets.
  const std::size_t n_cells = static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_);
  cell_begin_.assign(n_cells + 1, 0);
  for (std::uint32_t cell : seg_cells_) ++cell_begin_[cell + 1];
  std::partial_sum(cell_begin_.begin(), cell_begin_.end(), cell_begin_.begin());
  cell_items_.resize(seg_cells_.size());
  std::vector<std::uint32_t> fill(cell_begin_.begin(), cell_begin_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t k = seg_cells_begin_[i]; k < seg_cells_begin_[i + 1]; ++k) {
      cell_items_[fill[seg_cells_[k]]++] = static_cast<std::uint32_t>(i);
    }
  }
}

std::vector<std::pair<int, int>> candidate_pairs(std::span<const Segment> segments) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(segments.size());
  if (segments.size() < kBruteForceBelow) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    }
    return out;
  }
  const SegmentGrid grid(segments);
  for (int i = 0; i < n; ++i) {
    grid.for_each_neighbor(i, [&](int j) {
      if (j > i) out.emplace_back(i, j);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
}

}  // namespace sticksoup
