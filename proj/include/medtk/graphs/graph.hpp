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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace medtk::graphs {

// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// All-pairs BFS distances. Rows are padded to a multiple of 16 entries so the
// SIMD kernels can stream them; padding entries are zero.
class DistanceMatrix {
 public:
  static constexpr std::uint16_t kUnreachable = 0xffff;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::size_t stride, std::vector<std::uint16_t> data)
      : n_(n), stride_(stride), data_(std::move(data)) {}

  int size() const { return n_; }
  std::size_t stride() const { return stride_; }
  const std::uint16_t* row(int u) const { return data_.data() + static_cast<std::size_t>(u) * stride_; }
  std::uint16_t at(int u, int v) const { return row(u)[v]; }

 private:
  int n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint16_t> data_;
};

// Simple undirected graph on {0, ..., n-1}. Immutable after construction;
// edges are kept sorted and neighbour lists ascending, so every traversal
// order in the toolkit is deterministic. Copies share the distance cache.
class FiniteGraph {
 public:
  // Largest graph for which distances() will allocate the n x n matrix.
  static constexpr int kDistanceCap = 8192;

  FiniteGraph() : FiniteGraph(0) {}
  explicit FiniteGraph(int vertex_count);
  // Throws InputError on self-loops, duplicates or out-of-range endpoints.
  FiniteGraph(int vertex_count, std::vector<Edge> edges);
  static FiniteGraph from_pairs(int vertex_count, const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(int u, int v) const;
  // Position of {u, v} in edges(), or -1.
  int edge_index(int u, int v) const;

  const DistanceMatrix& distances() const;
  // -1 when unreachable.
  int distance(int u, int v) const;
  bool connected() const;
  // -1 for disconnected or empty graphs.
  int diameter() const;
  int max_degree() const;

  // Subgraph induced on `vertices`, renumbered in the given order.
  FiniteGraph induced_subgraph(std::span<const int> vertices) const;

  friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  struct DistanceCache;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<int> adjacency_;
  std::shared_ptr<DistanceCache> cache_;
};

// Vertex bijection. (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  // Throws ContractError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_automorphism(const FiniteGraph& g) const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace medtk::graphs
