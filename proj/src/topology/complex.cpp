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

#include "medtk/topology/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "medtk/errors.hpp"

namespace medtk::topology {
namespace {

constexpr std::size_t kNerveSimplexCap = 100000;

bool contained_in(const Simplex& a, const Simplex& b) {
  return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Simplex> facets)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (Simplex& f : facets) {
    if (f.empty()) throw InputError("empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw InputError("facet repeats a vertex");
    }
    if (f.front() < 0 || f.back() >= vertex_count) {
      throw InputError("facet vertex out of range");
    }
  }
  // Longest first, so a facet can only be contained in an earlier survivor.
  std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  for (Simplex& f : facets) {
    bool covered = std::any_of(facets_.begin(), facets_.end(),
                               [&](const Simplex& g) { return contained_in(f, g); });
    if (!covered) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const Simplex& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<Simplex> SimplicialComplex::faces(int d, std::size_t cap) const {
  std::set<Simplex> out;
  std::size_t generated = 0;
  const auto k = static_cast<std::size_t>(d + 1);
  Simplex current;
  std::function<void(const Simplex&, std::size_t)> choose = [&](const Simplex& f, std::size_t from) {
    if (current.size() == k) {
      if (++generated > cap) throw_resource("simplex enumeration", static_cast<long long>(generated),
                                            static_cast<long long>(cap));
      out.insert(current);
      return;
    }
    for (std::size_t i = from; i + (k - current.size()) <= f.size(); ++i) {
      current.push_back(f[i]);
      choose(f, i + 1);
      current.pop_back();
    }
  };
  if (d < 0) return {};
  for (const Simplex& f : facets_) {
    if (f.size() >= k) choose(f, 0);
  }
  return {out.begin(), out.end()};
}

SimplicialComplex flag_completion(const graphs::FiniteGraph& g, std::size_t clique_cap) {
  const int n = g.vertex_count();
  std::vector<Simplex> cliques;
  // Bron–Kerbosch with pivoting over ascending vertex vectors.
  std::function<void(Simplex&, std::vector<int>, std::vector<int>)> expand =
      [&](Simplex& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          cliques.push_back(r);
          if (cliques.size() > clique_cap) {
            throw_resource("maximal clique count", static_cast<long long>(cliques.size()),
                           static_cast<long long>(clique_cap));
          }
          return;
        }
        int pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* pool : {&p, &x}) {
          for (int u : *pool) {
            std::size_t c = 0;
            for (int v : p) c += g.adjacent(u, v);
            if (c > best) {
              best = c;
              pivot = u;
            }
          }
        }
        std::vector<int> todo;
        for (int v : p) {
          if (!g.adjacent(pivot, v)) todo.push_back(v);
        }
        for (int v : todo) {
          std::vector<int> np, nx;
          for (int u : p) {
            if (g.adjacent(u, v)) np.push_back(u);
          }
          for (int u : x) {
            if (g.adjacent(u, v)) nx.push_back(u);
          }
          r.push_back(v);
          expand(r, std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.insert(std::upper_bound(x.begin(), x.end(), v), v);
        }
      };
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[v] = v;
  Simplex r;
  if (n > 0) expand(r, all, {});
  return SimplicialComplex(n, std::move(cliques));
}

SimplicialComplex nerve(const std::vector<Bitset>& family, std::size_t family_cap) {
  const std::size_t m = family.size();
  if (m > family_cap) {
    throw_resource("nerve family size", static_cast<long long>(m), static_cast<long long>(family_cap));
  }
  std::vector<Simplex> facets;
  std::size_t visited = 0;
  Simplex current;
  std::function<void(const Bitset&, std::size_t)> grow = [&](const Bitset& common, std::size_t from) {
    if (++visited > kNerveSimplexCap) {
      throw_resource("nerve simplex count", static_cast<long long>(visited),
                     static_cast<long long>(kNerveSimplexCap));
    }
    bool extendable = false;
    for (std::size_t j = 0; j < m && !extendable; ++j) {
      if (std::find(current.begin(), current.end(), static_cast<int>(j)) != current.end()) continue;
      extendable = common.intersects(family[j]);
    }
    if (!extendable) facets.push_back(current);
    for (std::size_t j = from; j < m; ++j) {
      Bitset next = common & family[j];
      if (next.none()) continue;
      current.push_back(static_cast<int>(j));
      grow(next, j + 1);
      current.pop_back();
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (family[i].none()) continue;
    current = {static_cast<int>(i)};
    grow(family[i], i + 1);
  }
  return SimplicialComplex(static_cast<int>(m), std::move(facets));
}

}  // namespace medtk::topology
