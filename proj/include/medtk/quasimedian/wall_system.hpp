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

#include "medtk/quasimedian/qm_ball.hpp"
#include "medtk/wallspace/wallspace.hpp"

namespace medtk::quasimedian {

// Walls for a vertex group are given on a point set whose first |G| points are
// the group elements; any further points are auxiliary and stand for the rest
// of the median graph the group acts on.

// The star with one spike per element of a group of the given order: points
// are the elements followed by the centre, and each element g has the wall
// {g} | rest.
wallspace::Wallspace singleton_walls(int order);

struct WallSystemCubulation {
  // Points are the ball vertices followed by the auxiliary points of each
  // clique, clique by clique.
  wallspace::Wallspace walls;
  wallspace::Cubulation cubulation;
  int qm_points = 0;
  std::size_t cliques = 0;
  std::size_t coherent_pairs = 0;  // clique pairs in a common hyperplane whose gate map was checked
  int dimension = 0;
  // clique(Gamma) times the largest crossing family in any vertex-group
  // wallspace (at least one).
  int dimension_bound = 0;
};

// Transports each vertex group's walls to every clique gG_u through the
// shortest representative g, checks that gate projections between cliques of
// one hyperplane match the identifications, extends every wall to the ball by
// gate preimages and cubulates the result.
//
// UnsupportedRegime unless Gamma is complete; ContractError unless the ball is
// closed, there is one wallspace per vertex group, and each one separates the
// group elements and is invariant under the group on them.
WallSystemCubulation cubulate_with_wall_system(const GraphProductSpec& spec, const QMBall& ball,
                                               const std::vector<wallspace::Wallspace>& vertex_group_walls,
                                               int wall_cap = wallspace::kDefaultWallCap);

}  // namespace medtk::quasimedian
