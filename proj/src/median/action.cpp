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

#include "medtk/median/action.hpp"

#include <algorithm>
#include <string>

#include "medtk/errors.hpp"

namespace medtk::median {

GraphAction::GraphAction(FiniteGraph g, std::vector<std::string> labels,
                         std::vector<Permutation> generators)
    : graph_(std::move(g)), labels_(std::move(labels)), generators_(std::move(generators)) {
  if (labels_.size() != generators_.size()) {
    throw ContractError("graph action: " + std::to_string(labels_.size()) + " labels for " +
                        std::to_string(generators_.size()) + " generators");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].size() != graph_.vertex_count() ||
        !generators_[i].is_automorphism(graph_)) {
      throw ContractError("graph action: generator '" + labels_[i] + "' is not an automorphism");
    }
    inverses_.push_back(generators_[i].inverse());
  }
}

Permutation GraphAction::evaluate(std::span<const int> word) const {
  std::vector<int> image(static_cast<std::size_t>(graph_.vertex_count()));
  for (int v = 0; v < graph_.vertex_count(); ++v) image[v] = v;
  // Apply the rightmost letter first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int letter = *it;
    int index = letter > 0 ? letter - 1 : -letter - 1;
    if (letter == 0 || index >= static_cast<int>(generators_.size())) {
      throw ContractError("graph action: letter " + std::to_string(letter) + " out of range");
    }
    const Permutation& p = letter > 0 ? generators_[index] : inverses_[index];
    for (int& x : image) x = p(x);
  }
  return Permutation(std::move(image));
}

std::vector<std::vector<int>> GraphAction::orbits() const {
  const int n = graph_.vertex_count();
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (orbit_of[s] >= 0) continue;
    std::vector<int> orbit{s};
    orbit_of[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Permutation& p : generators_) {
        int y = p(orbit[i]);
        if (orbit_of[y] < 0) {
          orbit_of[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Bitset fixed_set(const GraphAction& action, const std::vector<Word>& words) {
  const auto n = static_cast<std::size_t>(action.graph().vertex_count());
  Bitset fixed = Bitset::full(n);
  for (const Word& w : words) {
    Permutation p = action.evaluate(w);
    for (std::size_t v = 0; v < n; ++v) {
      if (p(static_cast<int>(v)) != static_cast<int>(v)) fixed.reset(v);
    }
  }
  return fixed;
}

}  // namespace medtk::median
