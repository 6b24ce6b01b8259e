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

#include "medtk/graphprod/coset_complex.hpp"

#include <algorithm>
#include <set>

#include "medtk/errors.hpp"

namespace medtk::graphprod {
namespace {

bool is_complete(const graphs::FiniteGraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

bool shorter(const NormalForm& a, const NormalForm& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

int CosetComplex::find(const CosetLabel& label) const {
  auto it = index.find(label);
  return it == index.end() ? -1 : it->second;
}

int CosetComplex::find_coset(const GraphProductSpec& spec, const NormalForm& g, const std::vector<int>& clique) const {
  return find(CosetLabel{coset_representative(spec, g, clique), clique});
}

std::vector<std::vector<int>> cliques(const graphs::FiniteGraph& gamma) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::vector<int> base = out[i];
    const int from = base.empty() ? 0 : base.back() + 1;
    for (int v = from; v < gamma.vertex_count(); ++v) {
      bool ok = std::all_of(base.begin(), base.end(), [&](int u) { return gamma.adjacent(u, v); });
      if (!ok) continue;
      std::vector<int> next = base;
      next.push_back(v);
      out.push_back(std::move(next));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<NormalForm> enumerate_elements(const GraphProductSpec& spec, std::optional<int> radius, std::size_t cap) {
  spec.validate();
  if (!radius && !is_complete(spec.gamma)) {
    throw UnsupportedRegime("the full coset complex needs a complete graph (finite graph product)");
  }
  if (radius && *radius < 0) throw ContractError("radius must be non-negative");
  std::set<NormalForm> seen{NormalForm{}};
  std::vector<NormalForm> layer{NormalForm{}};
  for (int len = 0; !layer.empty() && (!radius || len < *radius); ++len) {
    std::set<NormalForm> next;
    for (const NormalForm& g : layer) {
      for (int v = 0; v < spec.gamma.vertex_count(); ++v) {
        for (int a = 1; a < spec.groups[v].order(); ++a) {
          NormalForm h = multiply(spec, g, {Syllable{v, a}});
          if (h.size() != g.size() + 1 || seen.count(h)) continue;
          next.insert(h);
        }
      }
    }
    for (const NormalForm& h : next) {
      seen.insert(h);
      if (seen.size() > cap) {
        throw_resource("graph product elements", static_cast<long long>(seen.size()), static_cast<long long>(cap));
      }
    }
    layer.assign(next.begin(), next.end());
  }
  std::vector<NormalForm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), shorter);
  return out;
}

CosetComplex build_coset_complex(const GraphProductSpec& spec, std::optional<int> radius, std::size_t cap) {
  CosetComplex cx;
  cx.radius = radius;
  cx.elements = enumerate_elements(spec, radius, cap);
  const auto all_cliques = cliques(spec.gamma);
  std::vector<std::pair<int, int>> edges;
  auto vertex_of = [&](const NormalForm& g, const std::vector<int>& clique) {
    CosetLabel label{coset_representative(spec, g, clique), clique};
    auto [it, inserted] = cx.index.emplace(label, static_cast<int>(cx.labels.size()));
    if (inserted) {
      cx.labels.push_back(std::move(label));
      if (cx.labels.size() > cap) {
        throw_resource("coset complex vertices", static_cast<long long>(cx.labels.size()), static_cast<long long>(cap));
      }
    }
    return it->second;
  };
  for (const NormalForm& g : cx.elements) {
    for (const auto& clique : all_cliques) {
      const int low = vertex_of(g, clique);
      for (int p = 0; p < spec.gamma.vertex_count(); ++p) {
        if (std::binary_search(clique.begin(), clique.end(), p)) continue;
        bool ok = std::all_of(clique.begin(), clique.end(), [&](int u) { return spec.gamma.adjacent(u, p); });
        if (!ok) continue;
        std::vector<int> bigger = clique;
        bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), p), p);
        const int high = vertex_of(g, bigger);
        edges.emplace_back(std::min(low, high), std::max(low, high));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  cx.graph = graphs::FiniteGraph::from_pairs(static_cast<int>(cx.labels.size()), edges);
  return cx;
}

}  // namespace medtk::graphprod
