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

#include "medtk/graphs/graph.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>

#include "medtk/errors.hpp"

namespace medtk::graphs {

struct FiniteGraph::DistanceCache {
  std::once_flag once;
  DistanceMatrix matrix;
};

FiniteGraph::FiniteGraph(int vertex_count) : FiniteGraph(vertex_count, {}) {}

FiniteGraph::FiniteGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), cache_(std::make_shared<DistanceCache>()) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (Edge& e : edges) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw InputError("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "}");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end()) {
    throw InputError("duplicate edge {" + std::to_string(it->u) + "," + std::to_string(it->v) + "}");
  }
  edges_ = std::move(edges);

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(edges_.size() * 2);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

FiniteGraph FiniteGraph::from_pairs(int vertex_count,
                                    const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return FiniteGraph(vertex_count, std::move(edges));
}

std::span<const int> FiniteGraph::neighbors(int v) const {
  return {adjacency_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
}

bool FiniteGraph::adjacent(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int FiniteGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

const DistanceMatrix& FiniteGraph::distances() const {
  if (n_ > kDistanceCap) throw_resource("distance matrix vertices", n_, kDistanceCap);
  std::call_once(cache_->once, [this] {
    const std::size_t stride = (static_cast<std::size_t>(n_) + 15) / 16 * 16;
    std::vector<std::uint16_t> data(stride * static_cast<std::size_t>(n_), 0);
    std::vector<int> queue(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
      std::uint16_t* row = data.data() + static_cast<std::size_t>(s) * stride;
      std::fill(row, row + n_, DistanceMatrix::kUnreachable);
      row[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        int x = queue[head++];
        for (int y : neighbors(x)) {
          if (row[y] == DistanceMatrix::kUnreachable) {
            row[y] = static_cast<std::uint16_t>(row[x] + 1);
            queue[tail++] = y;
          }
        }
      }
    }
    cache_->matrix = DistanceMatrix(n_, stride, std::move(data));
  });
  return cache_->matrix;
}

int FiniteGraph::distance(int u, int v) const {
  std::uint16_t d = distances().at(u, v);
  return d == DistanceMatrix::kUnreachable ? -1 : d;
}

bool FiniteGraph::connected() const {
  if (n_ == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n_;
}

int FiniteGraph::diameter() const {
  if (!connected()) return -1;
  const auto& d = distances();
  int best = 0;
  for (int u = 0; u < n_; ++u) {
    const std::uint16_t* row = d.row(u);
    for (int v = 0; v < n_; ++v) best = std::max(best, static_cast<int>(row[v]));
  }
  return best;
}

int FiniteGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

FiniteGraph FiniteGraph::induced_subgraph(std::span<const int> vertices) const {
  std::vector<int> position(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n_ || position[v] != -1) {
      throw ContractError("induced_subgraph: invalid or repeated vertex " + std::to_string(v));
    }
    position[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (position[e.u] >= 0 && position[e.v] >= 0) edges.push_back({position[e.u], position[e.v]});
  }
  return FiniteGraph(static_cast<int>(vertices.size()), std::move(edges));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[x]) {
      throw ContractError("not a permutation");
    }
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool Permutation::is_automorphism(const FiniteGraph& g) const {
  if (size() != g.vertex_count()) return false;
  // A bijection that maps edges to edges on a finite graph maps non-edges
  // to non-edges as well.
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(images_[e.u], images_[e.v])) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw ContractError("composing permutations of different sizes");
  std::vector<int> out(q.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

}  // namespace medtk::graphs
