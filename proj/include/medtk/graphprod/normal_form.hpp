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
#include <string>
#include <vector>

#include "medtk/graphprod/finite_group.hpp"

namespace medtk::graphprod {

struct Syllable {
  int vertex = 0;
  int element = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A graphically reduced word in canonical shuffle order: among all orderings
// reachable by swapping adjacent syllables on adjacent vertices, the one
// whose vertex sequence is lexicographically least.
using NormalForm = std::vector<Syllable>;

// Reduces an arbitrary syllable sequence: identity syllables drop, and two
// syllables on the same vertex separated only by syllables on neighbouring
// vertices merge, until no merge applies; then the canonical shuffle.
// InputError for an out-of-range vertex or element.
NormalForm normal_form(const GraphProductSpec& spec, const std::vector<Syllable>& word);

NormalForm multiply(const GraphProductSpec& spec, const NormalForm& a, const NormalForm& b);
NormalForm inverse(const GraphProductSpec& spec, const NormalForm& a);

// g<Lambda> = g'<Lambda> for a clique Lambda (sorted vertex list): g^-1 g' has
// every syllable in Lambda.
bool same_coset(const GraphProductSpec& spec, const NormalForm& g, const NormalForm& g2,
                const std::vector<int>& clique);

// The shortest element of g<Lambda>: g with every syllable on Lambda that can
// be shuffled to the end removed, repeatedly.
NormalForm coset_representative(const GraphProductSpec& spec, const NormalForm& g, const std::vector<int>& clique);

std::string format_normal_form(const NormalForm& g);

}  // namespace medtk::graphprod
