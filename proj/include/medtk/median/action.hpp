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

#include <span>
#include <string>
#include <vector>

#include "medtk/bitset.hpp"
#include "medtk/graphs/graph.hpp"

namespace medtk::median {

using graphs::FiniteGraph;
using graphs::Permutation;

// A word in the generators: entries +i / -i (1-based) stand for generator i
// and its inverse.
using Word = std::vector<int>;

// Finitely many labelled automorphisms of a graph, acting on the left: the
// word x1 x2 ... xk sends v to x1(x2(...xk(v))).
class GraphAction {
 public:
  // ContractError when labels and generators differ in number or a generator
  // is not an automorphism of g.
  GraphAction(FiniteGraph g, std::vector<std::string> labels, std::vector<Permutation> generators);

  const FiniteGraph& graph() const { return graph_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  // ContractError on an out-of-range letter.
  Permutation evaluate(std::span<const int> word) const;

  // Orbits of the generated group, each sorted, listed by smallest member.
  std::vector<std::vector<int>> orbits() const;

 private:
  FiniteGraph graph_;
  std::vector<std::string> labels_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> inverses_;
};

// Vertices fixed by every listed word.
Bitset fixed_set(const GraphAction& action, const std::vector<Word>& words);

}  // namespace medtk::median
