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

#include <optional>
#include <vector>

#include "medtk/bitset.hpp"
#include "medtk/graphprod/coset_complex.hpp"
#include "medtk/median/action.hpp"

namespace medtk::graphprod {

using graphs::Permutation;
using median::GraphAction;

// The virtual graph product Gamma[G, H] = Gamma G x| H acting on a coset
// complex: vertex-group generators by left multiplication, then the given
// symmetries of Gamma by relabelling syllables and cliques.
struct VgpAction {
  GraphAction action;
  // (vertex, element) of each of the first vertex_generator_count generators.
  std::vector<Syllable> vertex_generators;
  std::size_t vertex_generator_count = 0;
  // Defining relations that must act trivially: a multiplication-table
  // presentation of each vertex group, commutators across edges of Gamma,
  // h s h^-1 = h(s), and h^order(h).
  std::vector<median::Word> relators;
};

// ContractError when a symmetry is not an automorphism of Gamma or moves a
// vertex to one with a different group; TruncationError when an image leaves
// a truncated complex.
VgpAction vgp_action(const GraphProductSpec& spec, const std::vector<Permutation>& h_gens,
                     const CosetComplex& complex);

// Fix(G_u) for every vertex u of Gamma, restricted to `region` (default: all
// vertices), with convexity flags and which pairs meet.
struct FixedSets {
  std::vector<Bitset> sets;
  std::vector<char> convex;
  std::vector<std::vector<char>> meets;
};

FixedSets vertex_group_fixed_sets(const VgpAction& action, const std::optional<Bitset>& region = std::nullopt);

// Orbit-stabiliser data for the permutation group generated by the action.
struct StabilizerReport {
  std::size_t group_order = 0;
  std::vector<std::size_t> stabilizer_orders;  // per vertex
  std::size_t orbit_count = 0;
};

StabilizerReport stabilizers(const GraphAction& action, std::size_t group_cap = std::size_t{1} << 20);

}  // namespace medtk::graphprod
