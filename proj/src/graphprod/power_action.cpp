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

#include "medtk/graphprod/power_action.hpp"

#include "medtk/errors.hpp"

namespace medtk::graphprod {

std::vector<int> PowerAction::coordinates(int vertex) const {
  std::vector<int> out(static_cast<std::size_t>(index));
  for (int c = 0; c < index; ++c) {
    out[c] = vertex % base_size;
    vertex /= base_size;
  }
  return out;
}

PowerAction induced_power_action(const groups::Presentation& g, const groups::CosetTable& table,
                                 const median::GraphAction& action_h, std::size_t cap) {
  const groups::SubgroupPresentation sub = groups::reidemeister_schreier(g, table);
  if (action_h.generator_count() != static_cast<std::size_t>(sub.presentation.generator_count())) {
    throw ContractError("subgroup action must have one generator per Schreier generator");
  }
  for (const groups::Word& r : sub.presentation.relators()) {
    if (!action_h.evaluate(r).is_identity()) throw ContractError("subgroup action violates a subgroup relator");
  }
  const int m = table.coset_count();
  const int x = action_h.graph().vertex_count();
  std::size_t total = 1;
  for (int c = 0; c < m; ++c) {
    total *= static_cast<std::size_t>(x);
    if (total > cap) throw_resource("power action vertices", static_cast<long long>(total), static_cast<long long>(cap));
  }
  const int n = static_cast<int>(total);
  std::vector<int> weight(m, 1);
  for (int c = 1; c < m; ++c) weight[c] = weight[c - 1] * x;

  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < m; ++c) {
      const int p = v / weight[c] % x;
      for (int q : action_h.graph().neighbors(p)) {
        if (q > p) edges.emplace_back(v, v + (q - p) * weight[c]);
      }
    }
  }
  graphs::FiniteGraph power = graphs::FiniteGraph::from_pairs(n, edges);

  std::vector<std::string> labels;
  std::vector<graphs::Permutation> gens;
  for (int gen = 1; gen <= g.generator_count(); ++gen) {
    // Permutation of X for h_{c,gen}^-1, per coset.
    std::vector<graphs::Permutation> local;
    for (int c = 0; c < m; ++c) {
      const int label = sub.schreier_label[static_cast<std::size_t>(c) * g.generator_count() + gen - 1];
      local.push_back(label ? action_h.evaluate(groups::Word{-label}) : graphs::Permutation::identity(x));
    }
    std::vector<int> images(n);
    for (int v = 0; v < n; ++v) {
      // Right action T: q_{c.gen} = local[c](p_c); the left action is T^-1.
      int w = 0;
      for (int c = 0; c < m; ++c) {
        const int p = v / weight[c] % x;
        w += local[c](p) * weight[table.act(c, gen)];
      }
      images[v] = w;
    }
    labels.push_back(g.names()[gen - 1]);
    gens.push_back(graphs::Permutation(std::move(images)).inverse());
  }
  return PowerAction{median::GraphAction(std::move(power), std::move(labels), std::move(gens)), m, x};
}

}  // namespace medtk::graphprod
