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
#include <map>
#include <optional>
#include <vector>

#include "medtk/graphprod/normal_form.hpp"
#include "medtk/graphs/graph.hpp"

namespace medtk::graphprod {

inline constexpr std::size_t kDefaultComplexCap = std::size_t{1} << 16;

// The coset g<Lambda>, stored by its shortest representative.
struct CosetLabel {
  NormalForm representative;
  std::vector<int> clique;  // sorted vertices of Gamma
  friend auto operator<=>(const CosetLabel&, const CosetLabel&) = default;
};

// Vertices are the cosets g<Lambda> (Lambda a clique of Gamma, possibly
// empty); g<Lambda> is joined to g<Lambda + {p}>. Vertex 0 is 1<>.
struct CosetComplex {
  graphs::FiniteGraph graph;
  std::vector<CosetLabel> labels;
  // Empty for the full complex; otherwise elements of syllable length at
  // most *radius were used as representatives.
  std::optional<int> radius;
  // Elements used as representatives, by length then normal form.
  std::vector<NormalForm> elements;

  bool full() const { return !radius.has_value(); }
  // Vertex of a coset, or -1 when it is outside a truncated complex.
  int find(const CosetLabel& label) const;
  // As find, but for any representative g of the coset.
  int find_coset(const GraphProductSpec& spec, const NormalForm& g, const std::vector<int>& clique) const;

  std::map<CosetLabel, int> index;
};

// Every clique of Gamma (including the empty one), ordered by size then
// lexicographically.
std::vector<std::vector<int>> cliques(const graphs::FiniteGraph& gamma);

// Full complex (no radius; needs Gamma complete so the group is finite,
// otherwise UnsupportedRegime) or the part spanned by representatives of
// syllable length <= radius. ResourceError past `cap` vertices.
CosetComplex build_coset_complex(const GraphProductSpec& spec, std::optional<int> radius,
                                 std::size_t cap = kDefaultComplexCap);

// Elements of the graph product of syllable length <= radius (all of them
// when radius is empty and the group is finite), sorted by length then
// normal form.
std::vector<NormalForm> enumerate_elements(const GraphProductSpec& spec, std::optional<int> radius,
                                           std::size_t cap = kDefaultComplexCap);

}  // namespace medtk::graphprod
