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
#include <vector>

#include "medtk/bitset.hpp"
#include "medtk/median/median_graph.hpp"

namespace medtk::median {

// A cube subgraph: the vertex whose sign vector is smallest on the free
// hyperplanes, and the free hyperplanes themselves (ascending).
struct Cube {
  int base = 0;
  std::vector<int> free_hyperplanes;

  int dimension() const { return static_cast<int>(free_hyperplanes.size()); }
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

struct CubicalDimension {
  int dimension = 0;
  Cube witness;
  // The 2^dimension vertices of the witness cube; entry i flips the free
  // hyperplanes selected by the bits of i.
  std::vector<int> vertices;
};

// Largest cube, found by an exact clique search over the square-spanning
// incident edges at each vertex; the returned cube is verified vertex by
// vertex.
CubicalDimension cubical_dimension(const MedianGraph& mg);

// Vertices of the cube (base, free) in the order described above;
// ContractError when some vertex is missing.
std::vector<int> cube_vertices(const MedianGraph& mg, const Cube& cube);

inline constexpr std::size_t kDefaultSubdivisionCap = std::size_t{1} << 16;

struct Subdivision {
  // Vertex i of `graph` is cubes[i]. The first vertex_count() cubes are the
  // original vertices, in order.
  MedianGraph graph;
  std::vector<Cube> cubes;
};

Subdivision cubical_subdivision(const MedianGraph& mg,
                                std::size_t cube_cap = kDefaultSubdivisionCap);

inline constexpr int kDefaultOrientationCap = 20;

struct Orientation {
  // Bit j set iff the plus halfspace of hyperplane j is chosen.
  Bitset choice;
  bool principal = false;
  int vertex = -1;  // the inducing vertex when principal
};

// All pairwise-consistent orientations, sorted by their bit strings with
// hyperplane 0 most significant.
std::vector<Orientation> consistent_orientations(const MedianGraph& mg,
                                                 int hyperplane_cap = kDefaultOrientationCap);

}  // namespace medtk::median
