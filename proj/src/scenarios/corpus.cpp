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

#include "medtk/scenarios/corpus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "medtk/errors.hpp"
#include "medtk/graphs/builders.hpp"
#include "medtk/median/convexity.hpp"
#include "medtk/median/median_graph.hpp"

namespace medtk::scenarios {
namespace {

using Adjacency = std::vector<std::vector<int>>;

std::string rooted_code(const Adjacency& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// AHU encoding rooted at the centre, or the smaller one of the two centres.
std::string tree_code(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

graphs::FiniteGraph to_graph(const Adjacency& adj) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    for (int w : adj[v]) {
      if (v < w) pairs.emplace_back(v, w);
    }
  }
  return graphs::FiniteGraph::from_pairs(static_cast<int>(adj.size()), pairs);
}

}  // namespace

std::vector<NamedGraph> all_trees(int max_vertices) {
  if (max_vertices < 1) throw ContractError("trees need at least one vertex");
  std::vector<NamedGraph> out;
  std::vector<Adjacency> level{Adjacency(1)};
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<std::string, Adjacency>> sorted;
    for (const auto& t : level) sorted.emplace_back(tree_code(t), t);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    int i = 0;
    for (const auto& [code, t] : sorted) {
      out.push_back({"tree" + std::to_string(n) + "_" + std::to_string(i++), to_graph(t)});
    }
    if (n == max_vertices) break;
    std::map<std::string, Adjacency> grown;
    for (const auto& [code, t] : sorted) {
      for (int v = 0; v < n; ++v) {
        Adjacency a = t;
        a.emplace_back();
        a[v].push_back(n);
        a[n].push_back(v);
        grown.emplace(tree_code(a), std::move(a));
      }
    }
    level.clear();
    for (auto& [code, t] : grown) level.push_back(std::move(t));
  }
  return out;
}

std::vector<NamedGraph> random_convex_subgraphs(int d, int count, std::uint64_t seed) {
  const auto q = median::require_median(graphs::build_hypercube(d));
  const auto n = static_cast<std::size_t>(q.vertex_count());
  std::mt19937_64 rng(seed);
  std::set<Bitset> seen;
  std::vector<NamedGraph> out;
  const int attempt_cap = 1000 * std::max(count, 1);
  for (int attempt = 0; attempt < attempt_cap && static_cast<int>(out.size()) < count; ++attempt) {
    // Seeds of one to three vertices inside a random subcube keep the hulls varied in size.
    const std::uint64_t free_mask = rng() & ((std::uint64_t{1} << d) - 1);
    const std::uint64_t base = rng() & ~free_mask & ((std::uint64_t{1} << d) - 1);
    const int seeds = 1 + static_cast<int>(rng() % 3);
    Bitset seed_set(n);
    for (int i = 0; i < seeds; ++i) seed_set.set(static_cast<std::size_t>(base | (rng() & free_mask)));
    Bitset hull = median::convex_hull(q, seed_set).hull;
    if (!seen.insert(hull).second) continue;
    auto members = hull.indices();
    out.push_back({"convex_q" + std::to_string(d) + "_" + std::to_string(out.size()),
                   q.graph().induced_subgraph(members)});
  }
  if (static_cast<int>(out.size()) < count) {
    throw_resource("distinct convex subgraphs found", static_cast<long long>(out.size()), count);
  }
  return out;
}

std::vector<NamedGraph> median_corpus(CorpusSize size, std::uint64_t seed) {
  const bool full = size == CorpusSize::kFull;
  std::vector<NamedGraph> out = all_trees(full ? 10 : 7);
  const int grid = full ? 5 : 3;
  for (int a = 1; a <= grid; ++a) {
    for (int b = a; b <= grid; ++b) {
      out.push_back({"grid" + std::to_string(a) + "x" + std::to_string(b), graphs::grid_graph(a, b)});
    }
  }
  for (int d = 0; d <= (full ? 4 : 3); ++d) {
    out.push_back({"Q" + std::to_string(d), graphs::build_hypercube(d)});
  }
  auto convex = random_convex_subgraphs(6, full ? 50 : 10, seed);
  out.insert(out.end(), convex.begin(), convex.end());
  return out;
}

WallspaceCorpus wallspace_corpus(int max_points, int max_walls, std::size_t cap) {
  if (max_points < 1 || max_points > 8) throw ContractError("wallspace corpus needs 1..8 points");
  if (max_walls < 0) throw ContractError("negative wall count");
  WallspaceCorpus out;
  for (int p = 1; p <= max_points; ++p) {
    const unsigned full = (1u << p) - 1;
    // Walls as the side containing point 0.
    std::vector<unsigned> walls;
    for (unsigned s = 1; s < full; s += 2) walls.push_back(s);
    const int w = static_cast<int>(walls.size());
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto apply = [&](const std::vector<int>& pi, unsigned side) {
      unsigned img = 0;
      for (int i = 0; i < p; ++i) {
        if (side >> i & 1) img |= 1u << pi[i];
      }
      return (img & 1) ? img : full & ~img;
    };
    std::vector<std::vector<unsigned>> reps;
    for (std::uint32_t subset = 0; subset < (1u << w); ++subset) {
      if (std::popcount(subset) > max_walls) continue;
      std::vector<unsigned> sides;
      for (int i = 0; i < w; ++i) {
        if (subset >> i & 1) sides.push_back(walls[i]);
      }
      bool minimal = true;
      for (const auto& pi : perms) {
        std::vector<unsigned> img;
        for (unsigned s : sides) img.push_back(apply(pi, s));
        std::sort(img.begin(), img.end());
        if (img < sides) {
          minimal = false;
          break;
        }
      }
      if (minimal) reps.push_back(std::move(sides));
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& sides : reps) {
      if (out.items.size() >= cap) {
        out.capped = true;
        return out;
      }
      std::vector<Bitset> bits;
      for (unsigned s : sides) {
        Bitset b(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) {
          if (s >> i & 1) b.set(static_cast<std::size_t>(i));
        }
        bits.push_back(std::move(b));
      }
      out.items.emplace_back(p, std::move(bits));
    }
  }
  return out;
}

}  // namespace medtk::scenarios
