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

#include "medtk/median/convexity.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "medtk/errors.hpp"

namespace medtk::median {
namespace {

Bitset halfspace_hull(const MedianGraph& mg, const Bitset& seed) {
  Bitset hull = Bitset::full(static_cast<std::size_t>(mg.vertex_count()));
  for (const Hyperplane& h : mg.hyperplanes()) {
    if (seed.is_subset_of(h.minus)) {
      hull &= h.minus;
    } else if (seed.is_subset_of(h.plus)) {
      hull &= h.plus;
    }
  }
  return hull;
}

bool induced_connected(const FiniteGraph& g, const Bitset& set) {
  std::size_t start = set.first();
  if (start == set.size()) return false;
  Bitset seen(set.size());
  seen.set(start);
  std::deque<int> queue{static_cast<int>(start)};
  std::size_t reached = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x)) {
      if (set.test(y) && !seen.test(y)) {
        seen.set(y);
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == set.count();
}

void require_convex(const MedianGraph& mg, const Bitset& set, const char* what) {
  if (set.size() != static_cast<std::size_t>(mg.vertex_count())) {
    throw ContractError(std::string(what) + ": vertex set has the wrong universe");
  }
  if (set.none()) throw ContractError(std::string(what) + ": vertex set is empty");
  if (!is_convex(mg, set)) throw ContractError(std::string(what) + ": vertex set is not convex");
}

}  // namespace

bool is_convex_local(const FiniteGraph& g, const Bitset& set) {
  if (!induced_connected(g, set)) return false;
  std::vector<int> common;
  for (int y : set.indices()) {
    auto ny = g.neighbors(y);
    for (std::size_t i = 0; i < ny.size(); ++i) {
      if (!set.test(ny[i])) continue;
      for (std::size_t j = i + 1; j < ny.size(); ++j) {
        int x = ny[i], z = ny[j];
        if (!set.test(z) || g.adjacent(x, z)) continue;
        auto nx = g.neighbors(x);
        auto nz = g.neighbors(z);
        common.clear();
        std::set_intersection(nx.begin(), nx.end(), nz.begin(), nz.end(),
                              std::back_inserter(common));
        for (int c : common) {
          if (!set.test(c)) return false;
        }
      }
    }
  }
  return true;
}

bool is_convex(const MedianGraph& mg, const Bitset& set) {
  return !set.none() && halfspace_hull(mg, set) == set;
}

HullResult convex_hull(const MedianGraph& mg, const Bitset& seed) {
  if (seed.size() != static_cast<std::size_t>(mg.vertex_count())) {
    throw ContractError("convex_hull: seed has the wrong universe");
  }
  if (seed.none()) throw ContractError("convex_hull: seed is empty");
  HullResult r{halfspace_hull(mg, seed), false};
  r.seed_is_convex = r.hull == seed;
  if (r.seed_is_convex != is_convex_local(mg.graph(), seed)) {
    throw InternalError("halfspace and local convexity disagree on a seed");
  }
  if (!is_convex_local(mg.graph(), r.hull)) {
    throw InternalError("halfspace hull fails the local convexity test");
  }
  return r;
}

int gate_projection(const MedianGraph& mg, const Bitset& convex_set, int x) {
  require_convex(mg, convex_set, "gate_projection");
  const auto& d = mg.graph().distances();
  const std::vector<int> members = convex_set.indices();
  int gate = members.front();
  for (int y : members) {
    if (d.at(x, y) < d.at(x, gate)) gate = y;
  }
  for (int z : members) {
    if (d.at(x, z) != d.at(x, gate) + d.at(gate, z)) {
      throw InternalError("nearest point of a convex set is not a gate");
    }
  }
  return gate;
}

HellyResult helly_intersection(const MedianGraph& mg, const std::vector<Bitset>& family) {
  for (const Bitset& s : family) require_convex(mg, s, "helly_intersection");
  HellyResult r;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!family[i].intersects(family[j])) {
        r.disjoint_pair = std::make_pair(i, j);
        return r;
      }
    }
  }
  Bitset all = Bitset::full(static_cast<std::size_t>(mg.vertex_count()));
  for (const Bitset& s : family) all &= s;
  if (all.none()) throw InternalError("pairwise-intersecting convex family has empty intersection");
  r.common_vertex = static_cast<int>(all.first());
  return r;
}

}  // namespace medtk::median
