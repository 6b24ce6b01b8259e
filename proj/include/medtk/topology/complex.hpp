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
#include "medtk/graphs/graph.hpp"

namespace medtk::topology {

using Simplex = std::vector<int>;  // ascending vertex indices

/// A finite abstract simplicial complex given by its facets.
///
/// The constructor sorts every facet, drops duplicates and any facet
/// contained in another, and orders the survivors lexicographically, so two
/// complexes with the same downward closure compare equal. Vertices of
/// {0, ..., vertex_count-1} that lie in no facet are not part of the complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Throws InputError when a facet is empty, repeats a vertex, or leaves
  /// the vertex range.
  SimplicialComplex(int vertex_count, std::vector<Simplex> facets);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  /// Largest facet dimension, -1 for the empty complex.
  int dimension() const;

  /// All d-dimensional faces in lexicographic order. ResourceError when the
  /// running total of enumerated faces would exceed `cap`.
  std::vector<Simplex> faces(int d, std::size_t cap) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Simplex> facets_;
};

inline constexpr std::size_t kDefaultCliqueCap = 100000;

/// Flag (clique) completion: the facets are the maximal cliques of `g`.
SimplicialComplex flag_completion(const graphs::FiniteGraph& g,
                                  std::size_t clique_cap = kDefaultCliqueCap);

inline constexpr std::size_t kDefaultNerveFamilyCap = 64;

/// Nerve of a family of subsets of one universe: vertex i is family[i], and
/// a set of members spans a simplex when their common intersection is
/// non-empty. Empty members contribute nothing.
SimplicialComplex nerve(const std::vector<Bitset>& family,
                        std::size_t family_cap = kDefaultNerveFamilyCap);

}  // namespace medtk::topology
