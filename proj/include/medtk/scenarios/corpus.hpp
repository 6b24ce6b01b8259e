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
#include <string>
#include <vector>

#include "medtk/graphs/graph.hpp"
#include "medtk/wallspace/wallspace.hpp"

namespace medtk::scenarios {

struct NamedGraph {
  std::string name;
  graphs::FiniteGraph graph;
};

// One tree per isomorphism class on 1..max_vertices vertices, ordered by size
// and then by canonical encoding.
std::vector<NamedGraph> all_trees(int max_vertices);

// Induced subgraphs of Q_d on the convex hulls of a few random vertices,
// pairwise distinct as vertex sets. Deterministic for a given seed.
std::vector<NamedGraph> random_convex_subgraphs(int d, int count, std::uint64_t seed);

enum class CorpusSize { kSmall, kFull };

// Median graphs for the duality round-trip. Full: every tree on at most 10
// vertices, grids up to 5x5, Q_0..Q_4 and 50 convex subgraphs of Q_6.
// Small: trees up to 7 vertices, grids up to 3x3, Q_0..Q_3 and 10 subgraphs.
std::vector<NamedGraph> median_corpus(CorpusSize size, std::uint64_t seed);

struct WallspaceCorpus {
  std::vector<wallspace::Wallspace> items;
  bool capped = false;  // generation stopped at the instance cap
};

// Every wallspace on 1..max_points points with at most max_walls distinct
// non-trivial walls, one per orbit of the point permutations.
WallspaceCorpus wallspace_corpus(int max_points, int max_walls, std::size_t cap);

}  // namespace medtk::scenarios
