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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "medtk/graphs/graph.hpp"
#include "medtk/groups/dinfty.hpp"

namespace medtk::quasiline {

using groups::DinftyElement;

// Z copies of a period graph. Copy k's vertex a is written (k, a); each gluing
// pair (a, b) joins (k, a) to (k + 1, b) for every k. The right ends a and the
// left ends b are each listed without repetition, so the gluing is a
// bijection between them.
class PeriodicQuasiLine {
 public:
  // Throws InputError on malformed gluing and ContractError unless windows of
  // three and five periods are connected median graphs.
  PeriodicQuasiLine(graphs::FiniteGraph period, std::vector<std::pair<int, int>> gluing);

  // The straight line: one vertex per period.
  static PeriodicQuasiLine line();

  const graphs::FiniteGraph& period() const { return period_; }
  const std::vector<std::pair<int, int>>& gluing() const { return gluing_; }
  int period_size() const { return period_.vertex_count(); }

  // Copies first..last (inclusive); vertex (k, a) becomes (k - first) * p + a.
  graphs::FiniteGraph window(int first, int last) const;

  // Exact distance in the infinite graph, by breadth-first search.
  int distance(std::pair<long long, int> x, std::pair<long long, int> y) const;

 private:
  graphs::FiniteGraph period_;
  std::vector<std::pair<int, int>> gluing_;
  std::vector<std::vector<int>> right_;  // right_[a]: b with (a, b) glued
  std::vector<std::vector<int>> left_;   // left_[b]: a with (a, b) glued
};

// (k, a) -> (shift + k, internal(a)), or (shift - k, internal(a)) when the
// isometry reverses the line.
struct QLIsometry {
  long long shift = 0;
  bool reverses = false;
  graphs::Permutation internal;

  static QLIsometry identity(int period_size);
  std::pair<long long, int> operator()(std::pair<long long, int> x) const;
  // (g * h)(x) = g(h(x)).
  friend QLIsometry operator*(const QLIsometry& g, const QLIsometry& h);
  QLIsometry inverse() const;
  friend auto operator<=>(const QLIsometry&, const QLIsometry&) = default;
};

// ContractError unless g is an automorphism of the quasi-line.
void validate_isometry(const PeriodicQuasiLine& ql, const QLIsometry& g);

struct TranslationData {
  int sigma = 1;
  long long h = 0;
  int iterations = 0;  // iterates examined before the displacement settled
};

inline constexpr int kDefaultIterationCap = 64;

// sigma = -1 exactly for isometries that swap the ends, and then h = 0.
// Otherwise h is the signed translation length: g^P, with P the order of
// the internal map, moves the base vertex (0, 0) along copies, and the per
// iterate growth of its displacement, once it has stayed constant for
// `period_size + 2` consecutive iterates, is P * h. ResourceError if it has
// not settled within `iteration_cap` iterates.
TranslationData translation_data(const PeriodicQuasiLine& ql, const QLIsometry& g,
                                 int iteration_cap = kDefaultIterationCap);

inline constexpr int kDefaultWordLength = 4;

struct QuasiLineMorphism {
  std::vector<std::string> labels;  // generator order used in words
  std::map<std::string, DinftyElement> phi;
  // Shortest end-swapping word (letters 1-based signed over `labels`), if any.
  std::optional<std::vector<int>> g0;
  int word_length = 0;
  std::size_t words = 0;           // words of length <= word_length
  std::size_t pairs_checked = 0;   // homomorphism-law pairs
  std::size_t conjugations_checked = 0;
  bool homomorphism = true;        // phi(wv) = phi(w) phi(v) on all pairs
  bool cocycle = true;             // lambda(gh) = lambda(g) + sigma(g) lambda(h)
  bool conjugation = true;         // h(g0 g g0^-1) = -h(g) when sigma(g) = +1
  bool additive = true;            // h(gh) = h(g) + h(h) on the sigma = +1 words
  bool g0_square_trivial = true;   // h(g0^2) = 0
  bool infinite_image = false;     // some sigma = +1 word has lambda != 0
  bool translations_only = false;  // no generator word swaps the ends

  bool ok() const {
    return homomorphism && cocycle && conjugation && additive && g0_square_trivial && infinite_image;
  }
};

// Builds phi(g) = (lambda(g), sigma(g)) with lambda(g) = h(g) for sigma(g) = 1
// and h(g g0) otherwise, g0 the first end-swapping word in shortlex order
// (letter order +1, -1, +2, -2, ...), and checks it on every word of length at
// most `word_length`. ContractError when the generators are empty or invalid,
// or every word up to that length has bounded orbits.
QuasiLineMorphism dinfty_from_quasiline_action(const PeriodicQuasiLine& ql,
                                               const std::map<std::string, QLIsometry>& gens,
                                               int word_length = kDefaultWordLength);

}  // namespace medtk::quasiline
