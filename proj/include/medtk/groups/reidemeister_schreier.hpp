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

#include <vector>

#include "medtk/groups/presentation.hpp"

namespace medtk::groups {

// Presentation of the subgroup described by a coset table, on the Schreier
// generators u_c x u_{cx}^{-1} for the breadth-first transversal (one per
// coset c and generator x whose edge is not in the spanning tree). Relators
// are the rewrites of every relator read from every coset.
struct SubgroupPresentation {
  Presentation presentation;
  // generator_words[i] is generator i + 1 written as a word in the parent.
  std::vector<Word> generator_words;
  // Transversal word for each coset.
  std::vector<Word> transversal;
  // schreier_label[c * k + x - 1]: the subgroup generator u_c x u_{cx}^-1
  // (1-based), or 0 when that edge is in the spanning tree.
  std::vector<int> schreier_label;

  // Substitutes generator_words into a word over the subgroup generators.
  Word to_parent(std::span<const int> w) const;
};

// Throws ContractError unless the table is closed under the relators.
SubgroupPresentation reidemeister_schreier(const Presentation& pres, const CosetTable& table);

}  // namespace medtk::groups
