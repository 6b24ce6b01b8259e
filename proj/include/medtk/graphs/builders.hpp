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

namespace medtk::graphs {

inline constexpr int kDefaultCubeCap = 12;

// Q_r on r-bit strings; vertex index = the bit string read as an integer.
FiniteGraph build_hypercube(int r, int cap = kDefaultCubeCap);

// Disjoint union of the parts plus every edge between distinct parts. Vertex
// numbering concatenates the parts in order.
FiniteGraph build_join(const std::vector<FiniteGraph>& parts);

// Q_r's vertex set with {u, v} an edge iff 1 <= Hamming(u, v) <= s.
FiniteGraph build_gamma_rs(int r, int s, int cap = kDefaultCubeCap);

FiniteGraph complete_graph(int n);
// n isolated vertices (the complement of K_n).
FiniteGraph edgeless_graph(int n);
FiniteGraph cycle_graph(int n);
// Path on n vertices.
FiniteGraph path_graph(int n);
// rows x cols grid; vertex (i, j) has index i * cols + j.
FiniteGraph grid_graph(int rows, int cols);
// Centre 0, leaves 1..leaves.
FiniteGraph star_graph(int leaves);
// Vertex (i, j) has index i * b.vertex_count() + j.
FiniteGraph cartesian_product(const FiniteGraph& a, const FiniteGraph& b);
// The n-fold join of two isolated vertices; vertices 2i and 2i+1 are the
// i-th non-adjacent pair.
FiniteGraph cross_polytope_graph(int n);

// Generators of the hyperoctahedral group acting on Q_r's vertex set:
// adjacent coordinate transpositions and the flip of bit 0.
std::vector<Permutation> hypercube_symmetry_generators(int r);

}  // namespace medtk::graphs
