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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "medtk/bitset.hpp"
#include "medtk/median/median_graph.hpp"

namespace medtk::median {

struct HullResult {
  Bitset hull;
  bool seed_is_convex = false;
};

// Intersection of all halfspaces containing `seed`. The convexity flag is
// computed from the hull and cross-checked against is_convex_local; a
// disagreement raises InternalError.
HullResult convex_hull(const MedianGraph& mg, const Bitset& seed);

// Connected and locally convex: for every path x - y - z inside the set with
// d(x, z) = 2, every common neighbour of x and z is inside too.
bool is_convex_local(const FiniteGraph& g, const Bitset& set);

// Halfspace-intersection convexity (the hull equals the set).
bool is_convex(const MedianGraph& mg, const Bitset& set);

// The gate of x in a convex set: the unique y in the set with
// d(x, z) = d(x, y) + d(y, z) for every z in the set. ContractError when the
// set is empty or not convex.
int gate_projection(const MedianGraph& mg, const Bitset& convex_set, int x);

struct HellyResult {
  // A vertex common to every member (the smallest one), when the family
  // pairwise intersects.
  std::optional<int> common_vertex;
  // Otherwise the first disjoint pair (i < j) in lexicographic order.
  std::optional<std::pair<std::size_t, std::size_t>> disjoint_pair;
};

// ContractError when a member is empty or not convex.
HellyResult helly_intersection(const MedianGraph& mg, const std::vector<Bitset>& family);

}  // namespace medtk::median
