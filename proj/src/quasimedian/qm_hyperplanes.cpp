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

#include "medtk/quasimedian/qm_hyperplanes.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "medtk/errors.hpp"

namespace medtk::quasimedian {
namespace {

using graphs::FiniteGraph;

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

// Bron-Kerbosch with pivoting.
void extend(const FiniteGraph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
            std::vector<std::vector<int>>& out) {
  if (p.empty()) {
    if (x.empty() && r.size() >= 2) {
      std::vector<int> c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  int pivot = p.front();
  std::size_t best = 0;
  for (const auto* pool : {&p, &x}) {
    for (int u : *pool) {
      std::size_t k = static_cast<std::size_t>(
          std::count_if(p.begin(), p.end(), [&](int w) { return g.adjacent(u, w); }));
      if (k > best) {
        best = k;
        pivot = u;
      }
    }
  }
  const std::vector<int> candidates = p;
  for (int v : candidates) {
    if (g.adjacent(pivot, v)) continue;
    std::vector<int> p2, x2;
    for (int w : p) {
      if (g.adjacent(v, w)) p2.push_back(w);
    }
    for (int w : x) {
      if (g.adjacent(v, w)) x2.push_back(w);
    }
    r.push_back(v);
    extend(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const FiniteGraph& g) {
  std::vector<std::vector<int>> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> p, x, r{v};
    for (int w : g.neighbors(v)) (w > v ? p : x).push_back(w);
    extend(g, r, std::move(p), std::move(x), out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HyperplaneSystem qm_hyperplanes(const FiniteGraph& g, int vertex_cap) {
  const int n = g.vertex_count();
  if (n > vertex_cap) throw_resource("quasi-median hyperplane vertex count", n, vertex_cap);
  const int m = static_cast<int>(g.edge_count());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> common;
  for (int a = 0; a < n; ++a) {
    auto na = g.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        const int b = na[i], c = na[j];
        if (g.adjacent(b, c)) unite(parent, g.edge_index(a, b), g.edge_index(a, c));
        auto nb = g.neighbors(b);
        auto nc = g.neighbors(c);
        common.clear();
        std::set_intersection(nb.begin(), nb.end(), nc.begin(), nc.end(), std::back_inserter(common));
        for (int d : common) {
          if (d <= a) continue;
          unite(parent, g.edge_index(a, b), g.edge_index(c, d));
          unite(parent, g.edge_index(a, c), g.edge_index(b, d));
        }
      }
    }
  }

  HyperplaneSystem out;
  out.of_edge.assign(m, -1);
  std::vector<int> slot(m, -1);
  for (int e = 0; e < m; ++e) {
    int r = find_root(parent, e);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.hyperplanes.size());
      out.hyperplanes.emplace_back();
    }
    out.of_edge[e] = slot[r];
    out.hyperplanes[slot[r]].edges.push_back(e);
  }

  for (auto& clique : maximal_cliques(g)) {
    const int h = out.of_edge[g.edge_index(clique[0], clique[1])];
    out.hyperplanes[h].cliques.push_back(std::move(clique));
  }

  std::vector<int> comp(n);
  for (std::size_t h = 0; h < out.hyperplanes.size(); ++h) {
    std::fill(comp.begin(), comp.end(), -1);
    auto& sectors = out.hyperplanes[h].sectors;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = static_cast<int>(sectors.size());
      sectors.push_back({s});
      std::deque<int> queue{s};
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
          if (comp[y] >= 0 || out.of_edge[g.edge_index(x, y)] == static_cast<int>(h)) continue;
          comp[y] = comp[s];
          sectors.back().push_back(y);
          queue.push_back(y);
        }
      }
      std::sort(sectors.back().begin(), sectors.back().end());
    }
  }
  return out;
}

}  // namespace medtk::quasimedian
