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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sticksoup/geometry.hpp"

namespace sticksoup {

/// Uniform grid over a set of segments. Each segment is registered in every
/// cell its supercover passes through, so two intersecting segments always
/// share a cell. Cell size defaults to the median segment length.
class SegmentGrid {
 public:
  explicit SegmentGrid(std::span<const Segment> segments, double cell_size = 0.0);

  /// Calls `fn(j)` once for every other segment sharing a cell with segment i.
  template <typename Fn>
  void for_each_neighbor(int i, Fn&& fn) const {
    ++epoch_;
    for (std::uint32_t k = seg_cells_begin_[i]; k < seg_cells_begin_[i + 1]; ++k) {
      const std::uint32_t cell = seg_cells_[k];
      for (std::uint32_t m = cell_begin_[cell]; m < cell_begin_[cell + 1]; ++m) {
        const int j = static_cast<int>(cell_items_[m]);
        if (j == i || stamp_[j] == epoch_) continue;
        stamp_[j] = epoch_;
        fn(j);
      }
    }
  }

  std::size_t size() const { return seg_cells_begin_.size() - 1; }
  double cell_size() const { return cell_; }

 private:
  double cell_ = 1.0;
  Point origin_;
  int nx_ = 1;
  int ny_ = 1;
  std::vector<std::uint32_t> seg_cells_begin_;
  std::vector<std::uint32_t> seg_cells_;
  std::vector<std::uint32_t> cell_begin_;
  std::vector<std::uint32_t> cell_items_;
  mutable std::vector<std::uint32_t> stamp_;
  mutable std::uint32_t epoch_ = 0;
};

/// Index pairs (i < j) worth an exact intersection test: all pairs below 200
/// segments, grid neighbours otherwise.
std::vector<std::pair<int, int>> candidate_pairs(std::span<const Segment> segments);

/// Union-find over dense integer ids.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  int find(int x);
  void unite(int a, int b);

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace sticksoup
