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

#include "medtk/quasimedian/wall_system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "medtk/errors.hpp"
#include "medtk/median/cubes.hpp"
#include "medtk/quasimedian/qm_hyperplanes.hpp"

namespace medtk::quasimedian {
namespace {

using graphprod::Syllable;
using wallspace::Wallspace;

struct Clique {
  int type = 0;
  std::vector<int> members;  // members[s] = rep * s
  int hyperplane = -1;
};

// Restriction of a wall to the group elements, as the side containing 0.
std::vector<int> restricted_side(const Bitset& side, int order) {
  std::vector<int> out;
  const bool flip = !side.test(0);
  for (int s = 0; s < order; ++s) {
    if (side.test(static_cast<std::size_t>(s)) != flip) out.push_back(s);
  }
  return out;
}

void check_vertex_group_walls(const graphprod::FiniteGroup& group, const Wallspace& ws) {
  const int q = group.order();
  if (ws.point_count() < q) throw ContractError("vertex-group wallspace has fewer points than the group");
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      bool split = false;
      for (std::size_t w = 0; w < ws.wall_count() && !split; ++w) split = ws.separates(w, a, b);
      if (!split) throw ContractError("vertex-group walls do not separate the group elements");
    }
  }
  std::set<std::vector<int>> restricted;
  for (const Bitset& side : ws.walls()) restricted.insert(restricted_side(side, q));
  for (int s = 0; s < q; ++s) {
    for (const auto& side : restricted) {
      Bitset moved(static_cast<std::size_t>(q));
      for (int a : side) moved.set(static_cast<std::size_t>(group.multiply(s, a)));
      if (!restricted.count(restricted_side(moved, q))) {
        throw ContractError("vertex-group walls are not invariant under the group");
      }
    }
  }
}

}  // namespace

Wallspace singleton_walls(int order) {
  if (order < 2) throw ContractError("singleton walls need a group of order at least 2");
  std::vector<Bitset> sides;
  for (int g = 0; g < order; ++g) {
    Bitset side(static_cast<std::size_t>(order + 1));
    side.set(static_cast<std::size_t>(g));
    sides.push_back(std::move(side));
  }
  return Wallspace(order + 1, std::move(sides));
}

WallSystemCubulation cubulate_with_wall_system(const GraphProductSpec& spec, const QMBall& ball,
                                               const std::vector<Wallspace>& vertex_group_walls, int wall_cap) {
  spec.validate();
  const int gv = spec.gamma.vertex_count();
  if (spec.gamma.edge_count() != static_cast<std::size_t>(gv) * (gv - 1) / 2) {
    throw UnsupportedRegime("wall-system cubulation needs a complete graph (finite graph product)");
  }
  if (!ball.closed) throw ContractError("wall-system cubulation needs the ball to be the whole group");
  if (static_cast<int>(vertex_group_walls.size()) != gv) {
    throw ContractError("need one wallspace per vertex group");
  }
  for (int u = 0; u < gv; ++u) check_vertex_group_walls(spec.groups[u], vertex_group_walls[u]);

  const auto& g = ball.graph;
  const int n = g.vertex_count();
  const HyperplaneSystem hs = qm_hyperplanes(g);

  // Every coset gG_u, in order of first member.
  std::vector<Clique> cliques;
  std::map<std::pair<NormalForm, int>, int> seen;
  for (int x = 0; x < n; ++x) {
    for (int u = 0; u < gv; ++u) {
      NormalForm rep = graphprod::coset_representative(spec, ball.labels[x], {u});
      if (!seen.emplace(std::make_pair(rep, u), static_cast<int>(cliques.size())).second) continue;
      Clique c;
      c.type = u;
      for (int s = 0; s < spec.groups[u].order(); ++s) {
        int w = ball.find(graphprod::multiply(spec, rep, {Syllable{u, s}}));
        if (w < 0) throw InternalError("clique leaves a closed ball");
        c.members.push_back(w);
      }
      c.hyperplane = hs.of_edge[g.edge_index(c.members[0], c.members[1])];
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        for (std::size_t j = i + 1; j < c.members.size(); ++j) {
          int e = g.edge_index(c.members[i], c.members[j]);
          if (e < 0 || hs.of_edge[e] != c.hyperplane) throw InternalError("coset is not a clique of one hyperplane");
        }
      }
      cliques.push_back(std::move(c));
    }
  }

  const auto& d = g.distances();
  // Gate of x in clique c, as an element of the vertex group.
  auto project = [&](const Clique& c, int x) {
    int best = 0;
    for (std::size_t s = 1; s < c.members.size(); ++s) {
      if (d.at(x, c.members[s]) < d.at(x, c.members[best])) best = static_cast<int>(s);
    }
    for (std::size_t s = 0; s < c.members.size(); ++s) {
      if (static_cast<int>(s) != best && d.at(x, c.members[s]) != d.at(x, c.members[best]) + 1) {
        throw InternalError("clique is not gated");
      }
    }
    return best;
  };

  std::vector<int> reference(hs.hyperplanes.size(), -1);
  std::size_t coherent_pairs = 0;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const Clique& c = cliques[i];
    int& r = reference[c.hyperplane];
    if (r < 0) {
      r = static_cast<int>(i);
      continue;
    }
    const Clique& base = cliques[r];
    if (base.type != c.type) throw InternalError("hyperplane contains cliques of two vertex groups");
    for (std::size_t s = 0; s < c.members.size(); ++s) {
      if (project(c, base.members[s]) != static_cast<int>(s) || project(base, c.members[s]) != static_cast<int>(s)) {
        throw InternalError("gate projection does not match the clique identifications");
      }
    }
    ++coherent_pairs;
  }
  if (std::find(reference.begin(), reference.end(), -1) != reference.end()) {
    throw InternalError("hyperplane without a clique");
  }

  // Auxiliary points of each clique follow the ball vertices.
  std::vector<int> aux_start(cliques.size());
  int points = n;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    aux_start[i] = points;
    const int u = cliques[i].type;
    points += vertex_group_walls[u].point_count() - spec.groups[u].order();
  }

  std::vector<Bitset> sides;
  for (std::size_t h = 0; h < hs.hyperplanes.size(); ++h) {
    const Clique& base = cliques[reference[h]];
    const int q = spec.groups[base.type].order();
    std::vector<int> gate(n);
    for (int x = 0; x < n; ++x) gate[x] = project(base, x);
    for (const Bitset& wall : vertex_group_walls[base.type].walls()) {
      Bitset side(static_cast<std::size_t>(points));
      for (int x = 0; x < n; ++x) {
        if (wall.test(static_cast<std::size_t>(gate[x]))) side.set(static_cast<std::size_t>(x));
      }
      for (std::size_t i = 0; i < cliques.size(); ++i) {
        const Clique& c = cliques[i];
        const int extra = vertex_group_walls[c.type].point_count() - spec.groups[c.type].order();
        if (extra == 0) continue;
        const bool parallel = c.hyperplane == static_cast<int>(h);
        // A clique of another hyperplane has a single gate in the base clique;
        // its auxiliary points go with that gate.
        bool in = false;
        if (!parallel) {
          const int p = gate[c.members[0]];
          for (int m : c.members) {
            if (gate[m] != p) throw InternalError("clique of another hyperplane has a non-constant gate");
          }
          in = wall.test(static_cast<std::size_t>(p));
        }
        for (int a = 0; a < extra; ++a) {
          if (parallel) in = wall.test(static_cast<std::size_t>(q + a));
          if (in) side.set(static_cast<std::size_t>(aux_start[i] + a));
        }
      }
      sides.push_back(std::move(side));
    }
  }

  Wallspace walls(points, std::move(sides));
  wallspace::Cubulation cubulation = wallspace::cubulate(walls, wall_cap);
  const int dimension = median::cubical_dimension(cubulation.graph).dimension;
  int depth = 1;
  for (const Wallspace& ws : vertex_group_walls) depth = std::max(depth, wallspace::max_crossing_family(ws));
  const int bound = depth * static_cast<int>(graphprod::cliques(spec.gamma).back().size());
  return WallSystemCubulation{std::move(walls), std::move(cubulation), n, cliques.size(), coherent_pairs, dimension,
                              bound};
}

}  // namespace medtk::quasimedian
