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

#include "medtk/median/cubes.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "medtk/errors.hpp"

namespace medtk::median {
namespace {

// Do the edges x-a and x-b span a square?
bool span_square(const FiniteGraph& g, int x, int a, int b) {
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  std::size_t i = 0, j = 0;
  while (i < na.size() && j < nb.size()) {
    if (na[i] < nb[j]) {
      ++i;
    } else if (nb[j] < na[i]) {
      ++j;
    } else {
      if (na[i] != x) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

// compat[i][j] for the candidate neighbour list.
std::vector<std::vector<char>> square_matrix(const FiniteGraph& g, int x,
                                             const std::vector<int>& nbrs) {
  std::vector<std::vector<char>> m(nbrs.size(), std::vector<char>(nbrs.size(), 0));
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      m[i][j] = m[j][i] = span_square(g, x, nbrs[i], nbrs[j]) ? 1 : 0;
    }
  }
  return m;
}

void max_clique(const std::vector<std::vector<char>>& adj, std::vector<int>& current,
                const std::vector<int>& candidates, std::vector<int>& best) {
  if (current.size() + candidates.size() <= best.size()) return;
  if (candidates.empty()) {
    best = current;
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (current.size() + (candidates.size() - i) <= best.size()) return;
    int c = candidates[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (adj[c][candidates[j]]) next.push_back(candidates[j]);
    }
    current.push_back(c);
    max_clique(adj, current, next, best);
    current.pop_back();
  }
}

Cube cube_at(const MedianGraph& mg, int x, const std::vector<int>& nbrs) {
  Bitset base_sign = mg.sign_vector(x);
  Cube cube;
  for (int a : nbrs) {
    int h = mg.hyperplane_of_edge(x, a);
    cube.free_hyperplanes.push_back(h);
    base_sign.reset(static_cast<std::size_t>(h));
  }
  std::sort(cube.free_hyperplanes.begin(), cube.free_hyperplanes.end());
  cube.base = mg.vertex_with_sign_vector(base_sign);
  if (cube.base < 0) throw InternalError("cube corner missing from a certified median graph");
  return cube;
}

}  // namespace

std::vector<int> cube_vertices(const MedianGraph& mg, const Cube& cube) {
  const int k = cube.dimension();
  if (k > 30) throw ResourceError("cube dimension too large to list");
  for (int h : cube.free_hyperplanes) {
    if (h < 0 || static_cast<std::size_t>(h) >= mg.hyperplane_count()) {
      throw ContractError("cube refers to an unknown hyperplane");
    }
    if (mg.sign_vector(cube.base).test(static_cast<std::size_t>(h))) {
      throw ContractError("cube base is not the lowest corner");
    }
  }
  std::vector<int> out(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < out.size(); ++mask) {
    Bitset s = mg.sign_vector(cube.base);
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) s.set(static_cast<std::size_t>(cube.free_hyperplanes[i]));
    }
    out[mask] = mg.vertex_with_sign_vector(s);
    if (out[mask] < 0) throw ContractError("cube corner is not a vertex");
  }
  return out;
}

CubicalDimension cubical_dimension(const MedianGraph& mg) {
  const FiniteGraph& g = mg.graph();
  CubicalDimension result;
  std::vector<int> best_nbrs;
  int best_vertex = 0;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) <= static_cast<int>(best_nbrs.size())) continue;
    std::vector<int> nbrs(g.neighbors(x).begin(), g.neighbors(x).end());
    auto adj = square_matrix(g, x, nbrs);
    std::vector<int> all(nbrs.size()), current, best;
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    best.resize(best_nbrs.size());  // placeholder: only a strictly larger clique replaces it
    max_clique(adj, current, all, best);
    if (best.size() > best_nbrs.size()) {
      best_nbrs.clear();
      for (int i : best) best_nbrs.push_back(nbrs[i]);
      best_vertex = x;
    }
  }
  result.witness = cube_at(mg, best_vertex, best_nbrs);
  result.dimension = result.witness.dimension();
  result.vertices = cube_vertices(mg, result.witness);
  return result;
}

Subdivision cubical_subdivision(const MedianGraph& mg, std::size_t cube_cap) {
  const FiniteGraph& g = mg.graph();
  const int n = g.vertex_count();
  std::vector<Cube> cubes;
  for (int b = 0; b < n; ++b) {
    std::vector<int> up;
    for (int a : g.neighbors(b)) {
      if (!mg.sign_vector(b).test(static_cast<std::size_t>(mg.hyperplane_of_edge(b, a)))) {
        up.push_back(a);
      }
    }
    auto adj = square_matrix(g, b, up);
    std::vector<int> chosen;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      Cube c;
      c.base = b;
      for (int i : chosen) c.free_hyperplanes.push_back(mg.hyperplane_of_edge(b, up[i]));
      std::sort(c.free_hyperplanes.begin(), c.free_hyperplanes.end());
      cubes.push_back(std::move(c));
      if (cubes.size() > cube_cap) {
        throw_resource("cubical subdivision cube count", static_cast<long long>(cubes.size()),
                       static_cast<long long>(cube_cap));
      }
      for (std::size_t i = from; i < up.size(); ++i) {
        bool ok = std::all_of(chosen.begin(), chosen.end(),
                              [&](int j) { return adj[i][j] != 0; });
        if (!ok) continue;
        chosen.push_back(static_cast<int>(i));
        grow(i + 1);
        chosen.pop_back();
      }
    };
    grow(0);
  }
  std::stable_sort(cubes.begin(), cubes.end(), [](const Cube& a, const Cube& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a < b;
  });
  std::map<Cube, int> index;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    cube_vertices(mg, cubes[i]);
    index.emplace(cubes[i], static_cast<int>(i));
  }

  std::vector<graphs::Edge> edges;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    const Cube& c = cubes[i];
    for (int f : c.free_hyperplanes) {
      Cube lower{c.base, {}};
      for (int h : c.free_hyperplanes) {
        if (h != f) lower.free_hyperplanes.push_back(h);
      }
      Bitset upper_sign = mg.sign_vector(c.base);
      upper_sign.set(static_cast<std::size_t>(f));
      Cube upper{mg.vertex_with_sign_vector(upper_sign), lower.free_hyperplanes};
      for (const Cube& face : {lower, upper}) {
        auto it = index.find(face);
        if (it == index.end()) throw InternalError("cube face missing from the subdivision");
        edges.push_back({it->second, static_cast<int>(i)});
      }
    }
  }
  FiniteGraph sub(static_cast<int>(cubes.size()), std::move(edges));
  auto certified = certify_median(sub, std::max<int>(kDefaultMedianCap, sub.vertex_count()));
  if (auto* f = std::get_if<MedianFailure>(&certified)) {
    throw InternalError("cubical subdivision is not median: " + f->describe());
  }
  Subdivision out{std::get<MedianGraph>(std::move(certified)), std::move(cubes)};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (out.graph.graph().distance(u, v) != 2 * g.distance(u, v)) {
        throw InternalError("cubical subdivision does not double distances");
      }
    }
  }
  return out;
}

std::vector<Orientation> consistent_orientations(const MedianGraph& mg, int hyperplane_cap) {
  const int h = static_cast<int>(mg.hyperplane_count());
  if (h > hyperplane_cap) throw_resource("orientation hyperplane count", h, hyperplane_cap);
  const auto& hs = mg.hyperplanes();
  // compat[2i + s][2j + t]: side s of hyperplane i meets side t of hyperplane j.
  std::vector<std::vector<char>> compat(2 * h, std::vector<char>(2 * h, 1));
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j) {
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          char ok = hs[i].side(s).intersects(hs[j].side(t)) ? 1 : 0;
          compat[2 * i + s][2 * j + t] = compat[2 * j + t][2 * i + s] = ok;
        }
      }
    }
  }
  std::vector<Orientation> out;
  std::vector<int> side(h, 0);
  std::function<void(int)> assign = [&](int i) {
    if (i == h) {
      Orientation o{Bitset(static_cast<std::size_t>(h)), false, -1};
      for (int j = 0; j < h; ++j) {
        if (side[j]) o.choice.set(static_cast<std::size_t>(j));
      }
      o.vertex = mg.vertex_with_sign_vector(o.choice);
      o.principal = o.vertex >= 0;
      out.push_back(std::move(o));
      return;
    }
    for (int s = 0; s < 2; ++s) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = compat[2 * i + s][2 * j + side[j]] != 0;
      if (!ok) continue;
      side[i] = s;
      assign(i + 1);
    }
  };
  assign(0);
  return out;
}

}  // namespace medtk::median
