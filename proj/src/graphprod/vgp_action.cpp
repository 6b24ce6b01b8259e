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

#include "medtk/graphprod/vgp_action.hpp"

#include <algorithm>

#include "medtk/errors.hpp"
#include "medtk/graphs/symmetry.hpp"
#include "medtk/median/convexity.hpp"

namespace medtk::graphprod {
namespace {

int image_or_throw(int v) {
  if (v < 0) throw TruncationError("vertex image lies outside the truncated coset complex");
  return v;
}

}  // namespace

VgpAction vgp_action(const GraphProductSpec& spec, const std::vector<Permutation>& h_gens,
                     const CosetComplex& complex) {
  spec.validate();
  const int n = complex.graph.vertex_count();
  const int gv = spec.gamma.vertex_count();
  std::vector<std::string> labels;
  std::vector<Permutation> gens;
  for (const Permutation& h : h_gens) {
    if (h.size() != gv || !h.is_automorphism(spec.gamma)) throw ContractError("symmetry is not an automorphism of gamma");
    for (int v = 0; v < gv; ++v) {
      if (!(spec.groups[v] == spec.groups[h(v)])) throw ContractError("symmetry moves a vertex to a different vertex group");
    }
  }
  VgpAction out{GraphAction(graphs::FiniteGraph(0), {}, {}), {}, 0, {}};
  // index of the generator for (vertex, k-th group generator)
  std::vector<std::vector<int>> letter(gv);
  for (int v = 0; v < gv; ++v) {
    for (int s : spec.groups[v].generators()) {
      std::vector<int> images(n);
      for (int x = 0; x < n; ++x) {
        const CosetLabel& l = complex.labels[x];
        NormalForm g = multiply(spec, {Syllable{v, s}}, l.representative);
        images[x] = image_or_throw(complex.find_coset(spec, g, l.clique));
      }
      letter[v].push_back(static_cast<int>(gens.size()) + 1);
      labels.push_back("g" + std::to_string(v) + "_" + std::to_string(s));
      gens.emplace_back(std::move(images));
      out.vertex_generators.push_back({v, s});
    }
  }
  out.vertex_generator_count = gens.size();
  for (std::size_t i = 0; i < h_gens.size(); ++i) {
    const Permutation& h = h_gens[i];
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) {
      const CosetLabel& l = complex.labels[x];
      std::vector<Syllable> moved;
      for (const Syllable& s : l.representative) moved.push_back({h(s.vertex), s.element});
      std::vector<int> clique;
      for (int u : l.clique) clique.push_back(h(u));
      std::sort(clique.begin(), clique.end());
      images[x] = image_or_throw(complex.find_coset(spec, normal_form(spec, moved), clique));
    }
    labels.push_back("h" + std::to_string(i));
    gens.emplace_back(std::move(images));
  }
  out.action = GraphAction(complex.graph, std::move(labels), std::move(gens));

  // Relators.
  auto& rels = out.relators;
  for (int v = 0; v < gv; ++v) {
    const FiniteGroup& g = spec.groups[v];
    auto word_of = [&](int e) {
      median::Word w;
      for (int k : g.element_words()[e]) w.push_back(letter[v][k]);
      return w;
    };
    for (int e = 0; e < g.order(); ++e) {
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        median::Word w = word_of(e);
        w.push_back(letter[v][k]);
        median::Word back = word_of(g.multiply(e, g.generators()[k]));
        for (auto it = back.rbegin(); it != back.rend(); ++it) w.push_back(-*it);
        // drop words that freely reduce to nothing
        median::Word reduced;
        for (int x : w) {
          if (!reduced.empty() && reduced.back() == -x) {
            reduced.pop_back();
          } else {
            reduced.push_back(x);
          }
        }
        if (!reduced.empty()) rels.push_back(std::move(reduced));
      }
    }
  }
  for (const auto& e : spec.gamma.edges()) {
    for (int a : letter[e.u]) {
      for (int b : letter[e.v]) rels.push_back({a, b, -a, -b});
    }
  }
  for (std::size_t i = 0; i < h_gens.size(); ++i) {
    const int hl = static_cast<int>(out.vertex_generator_count + i) + 1;
    for (int v = 0; v < gv; ++v) {
      for (std::size_t k = 0; k < letter[v].size(); ++k) {
        rels.push_back({hl, letter[v][k], -hl, -letter[h_gens[i](v)][k]});
      }
    }
    int order = 1;
    for (Permutation p = h_gens[i]; !p.is_identity(); p = p * h_gens[i]) ++order;
    rels.push_back(median::Word(static_cast<std::size_t>(order), hl));
  }
  return out;
}

FixedSets vertex_group_fixed_sets(const VgpAction& va, const std::optional<Bitset>& region) {
  const auto& g = va.action.graph();
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  Bitset reg = region ? *region : Bitset::full(n);
  if (reg.size() != n) throw ContractError("region has the wrong universe");
  int vertices = 0;
  for (const Syllable& s : va.vertex_generators) vertices = std::max(vertices, s.vertex + 1);
  FixedSets out;
  for (int u = 0; u < vertices; ++u) {
    std::vector<median::Word> words;
    for (std::size_t i = 0; i < va.vertex_generator_count; ++i) {
      if (va.vertex_generators[i].vertex == u) words.push_back({static_cast<int>(i) + 1});
    }
    out.sets.push_back(median::fixed_set(va.action, words) & reg);
  }
  auto certified = median::certify_median(g, std::max<int>(median::kDefaultMedianCap, g.vertex_count()));
  const auto* mg = std::get_if<median::MedianGraph>(&certified);
  for (const Bitset& s : out.sets) {
    bool convex = mg ? median::is_convex(*mg, s) : median::is_convex_local(g, s);
    out.convex.push_back(convex ? 1 : 0);
  }
  out.meets.assign(out.sets.size(), std::vector<char>(out.sets.size(), 0));
  for (std::size_t i = 0; i < out.sets.size(); ++i) {
    for (std::size_t j = 0; j < out.sets.size(); ++j) out.meets[i][j] = out.sets[i].intersects(out.sets[j]) ? 1 : 0;
  }
  return out;
}

StabilizerReport stabilizers(const GraphAction& action, std::size_t group_cap) {
  const int n = action.graph().vertex_count();
  auto group = graphs::generate_group(action.generators(), n, group_cap);
  StabilizerReport r;
  r.group_order = group.size();
  r.stabilizer_orders.assign(n, 0);
  for (const Permutation& p : group) {
    for (int v = 0; v < n; ++v) {
      if (p(v) == v) ++r.stabilizer_orders[v];
    }
  }
  r.orbit_count = action.orbits().size();
  return r;
}

}  // namespace medtk::graphprod
