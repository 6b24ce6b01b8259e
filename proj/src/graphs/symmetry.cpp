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

#include "medtk/graphs/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "medtk/errors.hpp"

namespace medtk::graphs {
namespace {

// Per-vertex invariant: degree followed by the distance histogram.
std::vector<int> vertex_profile(const FiniteGraph& g, int v) {
  const auto& d = g.distances();
  std::vector<int> hist;
  int unreachable = 0;
  for (int w = 0; w < g.vertex_count(); ++w) {
    std::uint16_t x = d.at(v, w);
    if (x == DistanceMatrix::kUnreachable) {
      ++unreachable;
      continue;
    }
    if (hist.size() <= x) hist.resize(x + 1u, 0);
    ++hist[x];
  }
  hist.insert(hist.begin(), {g.degree(v), unreachable});
  return hist;
}

// Backtracking search for distance-preserving bijections g1 -> g2 refined by
// vertex profiles. `visit` returns false to stop the search.
class MatchSearch {
 public:
  MatchSearch(const FiniteGraph& g1, const FiniteGraph& g2) : g1_(g1), g2_(g2) {}

  template <class Visit>
  void run(Visit&& visit) {
    const int n = g1_.vertex_count();
    if (n != g2_.vertex_count() || g1_.edge_count() != g2_.edge_count()) return;
    if (n == 0) {
      visit(Permutation::identity(0));
      return;
    }
    std::map<std::vector<int>, int> colour_ids;
    color1_.resize(n);
    color2_.resize(n);
    for (int v = 0; v < n; ++v) {
      color1_[v] = colour_ids.try_emplace(vertex_profile(g1_, v), static_cast<int>(colour_ids.size()))
                       .first->second;
    }
    std::vector<int> class_size(colour_ids.size(), 0);
    for (int v = 0; v < n; ++v) ++class_size[color1_[v]];
    for (int v = 0; v < n; ++v) {
      auto it = colour_ids.find(vertex_profile(g2_, v));
      if (it == colour_ids.end()) return;
      color2_[v] = it->second;
      if (--class_size[it->second] < 0) return;
    }
    build_order();
    image_.assign(n, -1);
    used_.assign(n, 0);
    stop_ = false;
    extend(0, visit);
  }

 private:
  void build_order() {
    const int n = g1_.vertex_count();
    std::vector<int> class_count(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++class_count[color1_[v]];
    std::vector<char> placed(n, 0);
    order_.clear();
    parent_.clear();
    while (static_cast<int>(order_.size()) < n) {
      // root: unplaced vertex in the rarest colour class, lowest index
      int root = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (root < 0 || class_count[color1_[v]] < class_count[color1_[root]]) root = v;
      }
      std::size_t head = order_.size();
      order_.push_back(root);
      parent_.push_back(-1);
      placed[root] = 1;
      while (head < order_.size()) {
        int x = order_[head++];
        for (int y : g1_.neighbors(x)) {
          if (!placed[y]) {
            placed[y] = 1;
            order_.push_back(y);
            parent_.push_back(x);
          }
        }
      }
    }
  }

  template <class Visit>
  void extend(std::size_t depth, Visit& visit) {
    if (stop_) return;
    const int n = g1_.vertex_count();
    if (depth == order_.size()) {
      if (!visit(Permutation(image_))) stop_ = true;
      return;
    }
    const int v = order_[depth];
    const auto& d1 = g1_.distances();
    const auto& d2 = g2_.distances();
    auto try_candidate = [&](int w) {
      if (used_[w] || color2_[w] != color1_[v]) return;
      for (std::size_t j = 0; j < depth; ++j) {
        int u = order_[j];
        if (d1.at(v, u) != d2.at(w, image_[u])) return;
      }
      image_[v] = w;
      used_[w] = 1;
      extend(depth + 1, visit);
      used_[w] = 0;
      image_[v] = -1;
    };
    if (parent_[depth] >= 0) {
      for (int w : g2_.neighbors(image_[parent_[depth]])) {
        try_candidate(w);
        if (stop_) return;
      }
    } else {
      for (int w = 0; w < n; ++w) {
        try_candidate(w);
        if (stop_) return;
      }
    }
  }

  const FiniteGraph& g1_;
  const FiniteGraph& g2_;
  std::vector<int> color1_, color2_;
  std::vector<int> order_, parent_;
  std::vector<int> image_;
  std::vector<char> used_;
  bool stop_ = false;
};

}  // namespace

std::vector<Permutation> automorphism_group(const FiniteGraph& g, int vertex_cap,
                                            std::size_t group_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw_resource("automorphism enumeration vertices", g.vertex_count(), vertex_cap);
  }
  std::vector<Permutation> out;
  MatchSearch search(g, g);
  search.run([&](Permutation p) {
    out.push_back(std::move(p));
    if (out.size() > group_cap) {
      throw_resource("automorphism group order", static_cast<long long>(out.size()),
                     static_cast<long long>(group_cap));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Permutation> graph_isomorphic(const FiniteGraph& g1, const FiniteGraph& g2,
                                            int vertex_cap) {
  if (g1.vertex_count() > vertex_cap) {
    throw_resource("isomorphism vertices", g1.vertex_count(), vertex_cap);
  }
  if (g2.vertex_count() > vertex_cap) {
    throw_resource("isomorphism vertices", g2.vertex_count(), vertex_cap);
  }
  std::optional<Permutation> found;
  MatchSearch search(g1, g2);
  search.run([&](Permutation p) {
    found = std::move(p);
    return false;
  });
  return found;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& generators, int degree,
                                        std::size_t group_cap) {
  for (const Permutation& p : generators) {
    if (p.size() != degree) throw ContractError("generator degree mismatch");
  }
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (const Permutation& s : generators) {
        Permutation y = s * x;
        if (seen.insert(y).second) {
          if (seen.size() > group_cap) {
            throw_resource("permutation group order", static_cast<long long>(seen.size()),
                           static_cast<long long>(group_cap));
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Distance2Report check_distance2_transitivity(const FiniteGraph& g,
                                             const std::vector<Permutation>& generators) {
  for (const Permutation& p : generators) {
    if (!p.is_automorphism(g)) {
      throw ContractError("check_distance2_transitivity: generator is not an automorphism");
    }
  }
  const int n = g.vertex_count();
  std::vector<VertexPair> pairs;
  std::map<VertexPair, int> index;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.distance(u, v) == 2) {
        index[{u, v}] = static_cast<int>(pairs.size());
        pairs.push_back({u, v});
      }
    }
  }
  Distance2Report report;
  report.pair_count = pairs.size();
  std::vector<int> orbit_of(pairs.size(), -1);
  int orbits = 0;
  for (std::size_t start = 0; start < pairs.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    orbit_of[start] = orbits;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      auto [a, b] = pairs[stack.back()];
      stack.pop_back();
      for (const Permutation& p : generators) {
        int x = p(a), y = p(b);
        if (x > y) std::swap(x, y);
        int j = index.at({x, y});
        if (orbit_of[j] < 0) {
          orbit_of[j] = orbits;
          stack.push_back(j);
        }
      }
    }
    ++orbits;
  }
  report.orbit_count = static_cast<std::size_t>(orbits);
  report.transitive = orbits <= 1;
  if (!report.transitive) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (orbit_of[j] != 0) {
        report.counterexample = std::make_pair(pairs[0], pairs[j]);
        break;
      }
    }
  }
  return report;
}

}  // namespace medtk::graphs
