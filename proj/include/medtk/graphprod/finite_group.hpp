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
#include <vector>

#include "medtk/graphs/graph.hpp"

namespace medtk::graphprod {

// A finite group on {0, ..., order-1} given by its multiplication table, with
// 0 the identity.
class FiniteGroup {
 public:
  // Z/q with element i = i mod q and generator 1. ContractError for q < 2.
  static FiniteGroup cyclic(int q);
  // Validates closure, identity 0, inverses and associativity (InputError).
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  // Greedy generating set: repeatedly the least element outside the subgroup
  // generated so far.
  const std::vector<int>& generators() const { return generators_; }
  // Shortest word (letters index into generators(), positive only) for each
  // element, breadth first.
  const std::vector<std::vector<int>>& element_words() const { return words_; }
  bool is_cyclic_table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  void finish();

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> words_;
};

// Graph product data: a simplicial graph with a finite group at each vertex.
struct GraphProductSpec {
  graphs::FiniteGraph gamma;
  std::vector<FiniteGroup> groups;

  // InputError unless there is exactly one group per vertex.
  void validate() const;
  // Cyclic vertex groups Z/orders[v].
  static GraphProductSpec cyclic(graphs::FiniteGraph gamma, const std::vector<int>& orders);
};

}  // namespace medtk::graphprod
