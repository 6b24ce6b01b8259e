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

#include "medtk/median/median_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "medtk/errors.hpp"
#include "medtk/simd/kernels.hpp"

namespace medtk::median {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Edge classes of the transitive closure of "opposite in a 4-cycle", listed by
// smallest member edge.
std::vector<std::vector<int>> square_classes(const FiniteGraph& g) {
  UnionFind uf(g.edge_count());
  std::vector<int> common;
  for (int a = 0; a < g.vertex_count(); ++a) {
    auto na = g.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        int b = na[i], c = na[j];
        auto nb = g.neighbors(b);
        auto nc = g.neighbors(c);
        common.clear();
        std::set_intersection(nb.begin(), nb.end(), nc.begin(), nc.end(),
                              std::back_inserter(common));
        for (int d : common) {
          if (d <= a) continue;  // each square is met again from its smallest corner
          uf.unite(g.edge_index(a, b), g.edge_index(c, d));
          uf.unite(g.edge_index(a, c), g.edge_index(b, d));
        }
      }
    }
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> slot(g.edge_count(), -1);
  for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
    int r = uf.find(e);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[r]].push_back(e);
  }
  return classes;
}

// Splits the vertex set along one edge class. Fails unless deleting the class
// leaves exactly two components with every class edge running between them.
std::optional<Hyperplane> split(const FiniteGraph& g, std::vector<int> edges) {
  const int n = g.vertex_count();
  std::vector<char> in_class(g.edge_count(), 0);
  for (int e : edges) in_class[e] = 1;
  std::vector<int> comp(n, -1);
  int components = 0;
  for (int s = 0; s < n && components <= 2; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<int> queue{s};
    comp[s] = components;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x)) {
        if (comp[y] >= 0 || in_class[g.edge_index(x, y)]) continue;
        comp[y] = components;
        queue.push_back(y);
      }
    }
    ++components;
  }
  if (components != 2) return std::nullopt;
  for (int e : edges) {
    const auto& ed = g.edges()[e];
    if (comp[ed.u] == comp[ed.v]) return std::nullopt;
  }
  Hyperplane h{std::move(edges), Bitset(n), Bitset(n)};
  for (int v = 0; v < n; ++v) (comp[v] == 0 ? h.minus : h.plus).set(v);
  return h;
}

bool majority_closed_small(const std::vector<Bitset>& signs, std::array<int, 3>& bad) {
  const int n = static_cast<int>(signs.size());
  std::vector<std::uint64_t> key(n);
  for (int v = 0; v < n; ++v) key[v] = signs[v].word_count() ? signs[v].data()[0] : 0;
  std::vector<std::uint64_t> sorted = key;
  std::sort(sorted.begin(), sorted.end());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t a = key[u], b = key[v], ab = a & b, aob = a | b;
      for (int w = v + 1; w < n; ++w) {
        const std::uint64_t c = key[w];
        const std::uint64_t m = ab | (aob & c);
        if (m == a || m == b || m == c) continue;
        if (!std::binary_search(sorted.begin(), sorted.end(), m)) {
          bad = {u, v, w};
          return false;
        }
      }
    }
  }
  return true;
}

bool majority_closed_large(const std::vector<Bitset>& signs,
                           const std::unordered_map<Bitset, int, BitsetHash>& index,
                           std::array<int, 3>& bad) {
  const int n = static_cast<int>(signs.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Bitset ab = signs[u] & signs[v];
      Bitset aob = signs[u] | signs[v];
      for (int w = v + 1; w < n; ++w) {
        Bitset m = ab | (aob & signs[w]);
        if (!index.contains(m)) {
          bad = {u, v, w};
          return false;
        }
      }
    }
  }
  return true;
}

MedianFailure failure_for(const FiniteGraph& g, std::array<int, 3> t) {
  MedianFailure f;
  f.triple = t;
  f.median_count = median_count(g, t[0], t[1], t[2]);
  f.kind = f.median_count == 0 ? MedianFailure::Kind::kNoMedian : MedianFailure::Kind::kManyMedians;
  return f;
}

}  // namespace

std::string MedianFailure::describe() const {
  auto triple_text = [&] {
    return "(" + std::to_string(triple[0]) + ", " + std::to_string(triple[1]) + ", " +
           std::to_string(triple[2]) + ")";
  };
  switch (kind) {
    case Kind::kEmpty:
      return "graph is empty";
    case Kind::kDisconnected:
      return "graph is disconnected: no path from " + std::to_string(triple[0]) + " to " +
             std::to_string(triple[1]);
    case Kind::kNoMedian:
      return "triple " + triple_text() + " has no median";
    case Kind::kManyMedians:
      return "triple " + triple_text() + " has " + std::to_string(median_count) + " medians";
  }
  return "unknown failure";
}

std::size_t median_count(const FiniteGraph& g, int u, int v, int w) {
  const auto& d = g.distances();
  const int total = d.at(u, v) + d.at(v, w) + d.at(u, w);
  if (total % 2) return 0;
  return simd::kernels().count_sum3_equal(d.row(u), d.row(v), d.row(w),
                                          static_cast<std::size_t>(g.vertex_count()),
                                          static_cast<std::uint16_t>(total / 2));
}

std::optional<MedianFailure> find_median_failure(const FiniteGraph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        if (median_count(g, u, v, w) != 1) return failure_for(g, {u, v, w});
      }
    }
  }
  return std::nullopt;
}

CertifyResult certify_median(const FiniteGraph& g, int vertex_cap, CertifyMode mode) {
  const int n = g.vertex_count();
  if (n > vertex_cap) throw_resource("median certification vertex count", n, vertex_cap);
  if (n == 0) return MedianFailure{};
  for (int v = 1; v < n; ++v) {
    if (g.distance(0, v) < 0) {
      MedianFailure f;
      f.kind = MedianFailure::Kind::kDisconnected;
      f.triple = {0, v, -1};
      return f;
    }
  }
  if (mode == CertifyMode::kDistanceTriples) {
    if (auto f = find_median_failure(g)) return *f;
  }

  auto not_median = [&]() -> CertifyResult {
    if (auto f = find_median_failure(g)) return *f;
    throw InternalError("every triple has a unique median but the hyperplane structure is broken");
  };

  MedianGraph mg;
  mg.graph_ = g;
  mg.edge_hyperplane_.assign(g.edge_count(), -1);
  for (auto& cls : square_classes(g)) {
    auto h = split(g, std::move(cls));
    if (!h) return not_median();
    for (int e : h->edges) mg.edge_hyperplane_[e] = static_cast<int>(mg.hyperplanes_.size());
    mg.hyperplanes_.push_back(std::move(*h));
  }
  const std::size_t hc = mg.hyperplanes_.size();
  mg.signs_.assign(n, Bitset(hc));
  for (std::size_t j = 0; j < hc; ++j) {
    for (int v : mg.hyperplanes_[j].plus.indices()) mg.signs_[v].set(j);
  }

  // Distance must equal the number of separating hyperplanes.
  const auto& d = g.distances();
  const auto& k = simd::kernels();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      auto sep = k.popcount_xor(mg.signs_[u].data(), mg.signs_[v].data(), mg.signs_[u].word_count());
      if (sep != d.at(u, v)) return not_median();
    }
  }

  auto index = std::make_shared<std::unordered_map<Bitset, int, BitsetHash>>();
  index->reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) index->emplace(mg.signs_[v], v);

  if (mode == CertifyMode::kSignVectors) {
    std::array<int, 3> bad{};
    bool closed = hc <= 64 ? majority_closed_small(mg.signs_, bad)
                           : majority_closed_large(mg.signs_, *index, bad);
    if (!closed) return failure_for(g, bad);
  }
  mg.index_ = std::move(index);
  return mg;
}

MedianGraph require_median(const FiniteGraph& g, int vertex_cap) {
  auto r = certify_median(g, vertex_cap);
  if (auto* f = std::get_if<MedianFailure>(&r)) {
    throw ContractError("graph is not median: " + f->describe());
  }
  return std::get<MedianGraph>(std::move(r));
}

const std::vector<Hyperplane>& hyperplane_decomposition(const MedianGraph& mg) {
  return mg.hyperplanes();
}

int MedianGraph::hyperplane_of_edge(int u, int v) const {
  int e = graph_.edge_index(u, v);
  if (e < 0) {
    throw ContractError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  return edge_hyperplane_[e];
}

int MedianGraph::vertex_with_sign_vector(const Bitset& s) const {
  auto it = index_->find(s);
  return it == index_->end() ? -1 : it->second;
}

int MedianGraph::median(int u, int v, int w) const {
  const Bitset& a = signs_[u];
  const Bitset& b = signs_[v];
  const Bitset& c = signs_[w];
  int m = vertex_with_sign_vector((a & b) | ((a | b) & c));
  if (m < 0) throw InternalError("majority sign vector missing from a certified median graph");
  return m;
}

int MedianGraph::separation(int u, int v) const {
  return static_cast<int>(signs_[u].symmetric_difference_count(signs_[v]));
}

}  // namespace medtk::median
