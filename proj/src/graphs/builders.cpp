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

#include "medtk/graphs/builders.hpp"

#include <bit>
#include <string>

#include "medtk/errors.hpp"

namespace medtk::graphs {

FiniteGraph build_hypercube(int r, int cap) {
  if (r < 0) throw ContractError("hypercube dimension must be non-negative");
  if (r > cap) throw_resource("hypercube dimension", r, cap);
  return build_gamma_rs(r, r == 0 ? 0 : 1, cap);
}

FiniteGraph build_join(const std::vector<FiniteGraph>& parts) {
  if (parts.empty()) throw ContractError("build_join needs at least one part");
  std::vector<Edge> edges;
  std::vector<int> offset;
  int total = 0;
  for (const FiniteGraph& p : parts) {
    offset.push_back(total);
    for (const Edge& e : p.edges()) edges.push_back({e.u + total, e.v + total});
    total += p.vertex_count();
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (int a = 0; a < parts[i].vertex_count(); ++a) {
        for (int b = 0; b < parts[j].vertex_count(); ++b) {
          edges.push_back({offset[i] + a, offset[j] + b});
        }
      }
    }
  }
  return FiniteGraph(total, std::move(edges));
}

FiniteGraph build_gamma_rs(int r, int s, int cap) {
  if (r < 0 || s < 0 || s > r || (r > 0 && s < 1)) {
    throw ContractError("build_gamma_rs needs 1 <= s <= r (got r=" + std::to_string(r) +
                        ", s=" + std::to_string(s) + ")");
  }
  if (r > cap) throw_resource("cube dimension", r, cap);
  const int n = 1 << r;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int h = std::popcount(static_cast<unsigned>(u ^ v));
      if (h <= s) edges.push_back({u, v});
    }
  }
  return FiniteGraph(n, std::move(edges));
}

FiniteGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return FiniteGraph(n, std::move(edges));
}

FiniteGraph edgeless_graph(int n) { return FiniteGraph(n); }

FiniteGraph cycle_graph(int n) {
  if (n < 3) throw ContractError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return FiniteGraph(n, std::move(edges));
}

FiniteGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return FiniteGraph(n, std::move(edges));
}

FiniteGraph grid_graph(int rows, int cols) {
  return cartesian_product(path_graph(rows), path_graph(cols));
}

FiniteGraph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return FiniteGraph(leaves + 1, std::move(edges));
}

FiniteGraph cartesian_product(const FiniteGraph& a, const FiniteGraph& b) {
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  std::vector<Edge> edges;
  for (int i = 0; i < na; ++i) {
    for (const Edge& e : b.edges()) edges.push_back({i * nb + e.u, i * nb + e.v});
  }
  for (const Edge& e : a.edges()) {
    for (int j = 0; j < nb; ++j) edges.push_back({e.u * nb + j, e.v * nb + j});
  }
  return FiniteGraph(na * nb, std::move(edges));
}

FiniteGraph cross_polytope_graph(int n) {
  std::vector<FiniteGraph> parts(static_cast<std::size_t>(n), edgeless_graph(2));
  return build_join(parts);
}

std::vector<Permutation> hypercube_symmetry_generators(int r) {
  const int n = 1 << r;
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < r; ++i) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      int bi = (x >> i) & 1, bj = (x >> (i + 1)) & 1;
      int y = x & ~((1 << i) | (1 << (i + 1)));
      img[x] = y | (bj << i) | (bi << (i + 1));
    }
    gens.emplace_back(std::move(img));
  }
  if (r >= 1) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) img[x] = x ^ 1;
    gens.emplace_back(std::move(img));
  }
  return gens;
}

}  // namespace medtk::graphs
