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

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "medtk/bitset.hpp"
#include "medtk/graphs/graph.hpp"

namespace medtk::median {

using graphs::FiniteGraph;

inline constexpr int kDefaultMedianCap = 4096;

// An edge class of the square relation together with the two components left
// after deleting it. `minus` is the side containing vertex 0.
struct Hyperplane {
  std::vector<int> edges;  // indices into graph().edges(), ascending
  Bitset minus;
  Bitset plus;

  const Bitset& side(bool plus_side) const { return plus_side ? plus : minus; }
};

// Why a graph is not median. For kNoMedian / kManyMedians, `triple` has
// `median_count` medians (0 or >= 2). For kDisconnected, triple[0] and
// triple[1] lie in different components.
struct MedianFailure {
  enum class Kind { kEmpty, kDisconnected, kNoMedian, kManyMedians };
  Kind kind = Kind::kEmpty;
  std::array<int, 3> triple{-1, -1, -1};
  std::size_t median_count = 0;

  std::string describe() const;
};

class MedianGraph;

enum class CertifyMode {
  // Partial-cube embedding via hyperplanes, then closure of the vertex sign
  // vectors under coordinatewise majority.
  kSignVectors,
  // Count medians of every triple from the distance matrix.
  kDistanceTriples,
};

using CertifyResult = std::variant<MedianGraph, MedianFailure>;

CertifyResult certify_median(const FiniteGraph& g, int vertex_cap = kDefaultMedianCap,
                             CertifyMode mode = CertifyMode::kSignVectors);

// A connected median graph with its hyperplanes and vertex sign vectors.
// Only obtainable through certify_median, so every instance is certified.
class MedianGraph {
 public:
  const FiniteGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t hyperplane_count() const { return hyperplanes_.size(); }
  // Hyperplane containing graph().edges()[edge].
  int hyperplane_of_edge(int edge) const { return edge_hyperplane_[edge]; }
  int hyperplane_of_edge(int u, int v) const;

  // Bit j set iff the vertex lies in hyperplanes()[j].plus.
  const Bitset& sign_vector(int v) const { return signs_[v]; }
  // Vertex with the given sign vector, or -1.
  int vertex_with_sign_vector(const Bitset& s) const;

  // The unique median of (u, v, w).
  int median(int u, int v, int w) const;
  // Number of hyperplanes separating u and v (equals their distance).
  int separation(int u, int v) const;

 private:
  friend CertifyResult certify_median(const FiniteGraph&, int, CertifyMode);

  MedianGraph() = default;

  FiniteGraph graph_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<int> edge_hyperplane_;
  std::vector<Bitset> signs_;
  std::shared_ptr<const std::unordered_map<Bitset, int, BitsetHash>> index_;
};

// certify_median that throws ContractError (with the failure description)
// instead of returning a witness.
MedianGraph require_median(const FiniteGraph& g, int vertex_cap = kDefaultMedianCap);

// Same classes and halfspaces as the certified graph holds.
const std::vector<Hyperplane>& hyperplane_decomposition(const MedianGraph& mg);

// First triple u < v < w whose median count differs from one, by the
// distance-sum criterion; nullopt if every triple has a unique median.
// Requires a connected graph.
std::optional<MedianFailure> find_median_failure(const FiniteGraph& g);

// Number of medians of (u, v, w) in a connected graph.
std::size_t median_count(const FiniteGraph& g, int u, int v, int w);

}  // namespace medtk::median
