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

#include "medtk/groups/presentation.hpp"
#include "medtk/groups/reidemeister_schreier.hpp"
#include "medtk/median/action.hpp"

namespace medtk::graphprod {

inline constexpr std::size_t kDefaultPowerCap = std::size_t{1} << 16;

struct PowerAction {
  median::GraphAction action;  // one generator per generator of G
  int index = 0;
  int base_size = 0;
  // Vertex (p_0, ..., p_{m-1}) of X^m has index sum p_c |X|^c.
  std::vector<int> coordinates(int vertex) const;
};

// The action of G on the Cartesian power X^[G:H] induced from an action of H
// on X. `table` is the coset table of H and `action_h` has one generator per
// Schreier generator of reidemeister_schreier(g, table), in that order. The
// generator x sends the tuple p to q with q_{c.x} = h_{c,x}^-1 p_c read as a
// left action, where h_{c,x} = u_c x u_{c.x}^-1. ContractError when action_h
// does not satisfy the subgroup relators; ResourceError past `cap` vertices.
PowerAction induced_power_action(const groups::Presentation& g, const groups::CosetTable& table,
                                 const median::GraphAction& action_h, std::size_t cap = kDefaultPowerCap);

}  // namespace medtk::graphprod
