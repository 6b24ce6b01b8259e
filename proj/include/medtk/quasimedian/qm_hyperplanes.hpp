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

#include <vector>

#include "medtk/graphs/graph.hpp"

namespace medtk::quasimedian {

inline constexpr int kDefaultQMCap = 1 << 16;

// One class of the edge relation generated by "share a 3-cycle" and "opposite
// in a 4-cycle".
struct QMHyperplane {
  std::vector<int> edges;                  // indices into graph.edges(), ascending
  std::vector<std::vector<int>> cliques;   // maximal cliques whose edges lie in the class
  std::vector<std::vector<int>> sectors;   // components once the class edges are deleted
};

struct HyperplaneSystem {
  std::vector<QMHyperplane> hyperplanes;  // ordered by smallest edge
  std::vector<int> of_edge;               // edge index -> hyperplane index
};

// Maximal cliques with at least two vertices, each sorted, in lexicographic
// order.
std::vector<std::vector<int>> maximal_cliques(const graphs::FiniteGraph& g);

// ResourceError past `vertex_cap` vertices.
HyperplaneSystem qm_hyperplanes(const graphs::FiniteGraph& g, int vertex_cap = kDefaultQMCap);

}  // namespace medtk::quasimedian
