// Copyright 2026 The medtk Authors.
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
#include <vector>

#include "medtk/bitset.hpp"
#include "medtk/median/median_graph.hpp"

namespace medtk::wallspace {

// A finite set {0, ..., point_count-1} with walls. Each wall is stored by its
// canonical side, the one containing point 0 (equivalently the side whose
// sorted member list is lexicographically smaller).
class Wallspace {
 public:
  // Sides may be given either way round; they are canonicalised. Throws
  // InputError on an empty side, a wrong universe, a non-positive point count
  // or a repeated wall.
  Wallspace(int point_count, std::vector<Bitset> sides);

  int point_count() const { return points_; }
  std::size_t wall_count() const { return walls_.size(); }
  const std::vector<Bitset>& walls() const { return walls_; }
  const Bitset& wall(std::size_t i) const { return walls_[i]; }

  bool separates(std::size_t wall, int p, int q) const {
    return walls_[wall].test(static_cast<std::size_t>(p)) != walls_[wall].test(static_cast<std::size_t>(q));
  }
  // All four side intersections non-empty.
  bool crosses(std::size_t i, std::size_t j) const { return crossing_[i][j] != 0; }
  // Every pair of distinct points is separated by some wall.
  bool separates_points() const;

 private:
  int points_;
  std::vector<Bitset> walls_;
  std::vector<std::vector<char>> crossing_;
};

// One wall per hyperplane; wall i is the minus halfspace of hyperplane i.
Wallspace walls_of_median(const median::MedianGraph& mg);

inline constexpr int kDefaultWallCap = 20;

struct Cubulation {
  median::MedianGraph graph;
  // Vertex v's orientation as a bit string over the walls, wall 0 most
  // significant; a 1 picks the side not containing point 0. Ascending.
  std::vector<std::uint32_t> orientations;
  // Principal vertex of each point.
  std::vector<int> point_vertex;
  // Consistent orientations outside the principal component (always zero
  // for finite wallspaces; kept as a checked quantity).
  std::size_t dropped_orientations = 0;
};

// Consistent orientations joined by single flips, restricted to the
// component of the principal orientations, certified median.
Cubulation cubulate(const Wallspace& ws, int wall_cap = kDefaultWallCap);

// Size of the largest family of pairwise-crossing walls, by exhaustive
// search over subsets (wall count <= 24).
int max_crossing_family(const Wallspace& ws);

}  // namespace medtk::wallspace
