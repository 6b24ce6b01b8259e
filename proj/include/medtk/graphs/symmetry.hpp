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

#include "medtk/graphs/graph.hpp"

namespace medtk::graphs {

inline constexpr int kDefaultAutomorphismVertexCap = 16;
inline constexpr std::size_t kDefaultGroupCap = std::size_t{1} << 20;
inline constexpr int kDefaultIsomorphismVertexCap = 2048;

// Every adjacency-preserving permutation of g, sorted lexicographically by
// image vector (so the identity comes first).
std::vector<Permutation> automorphism_group(const FiniteGraph& g,
                                            int vertex_cap = kDefaultAutomorphismVertexCap,
                                            std::size_t group_cap = kDefaultGroupCap);

// An isomorphism g1 -> g2 (as a permutation of indices) or nullopt.
// Deterministic: the first bijection found by a fixed search order.
std::optional<Permutation> graph_isomorphic(const FiniteGraph& g1, const FiniteGraph& g2,
                                            int vertex_cap = kDefaultIsomorphismVertexCap);

// Closure of `generators` under composition, sorted. All generators must have
// the same degree.
std::vector<Permutation> generate_group(const std::vector<Permutation>& generators, int degree,
                                        std::size_t group_cap = kDefaultGroupCap);

using VertexPair = std::pair<int, int>;

struct Distance2Report {
  bool transitive = false;
  std::size_t pair_count = 0;
  std::size_t orbit_count = 0;
  // When not transitive: a representative of the first orbit and the first
  // pair outside it.
  std::optional<std::pair<VertexPair, VertexPair>> counterexample;
};

// Does the group generated by `generators` act transitively on unordered
// vertex pairs at distance exactly two? Throws ContractError when a generator
// is not an automorphism of g.
Distance2Report check_distance2_transitivity(const FiniteGraph& g,
                                             const std::vector<Permutation>& generators);

}  // namespace medtk::graphs
