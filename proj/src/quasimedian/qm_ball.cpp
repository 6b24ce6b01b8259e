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

#include "medtk/quasimedian/qm_ball.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "medtk/errors.hpp"
#include "medtk/quasimedian/qm_hyperplanes.hpp"

namespace medtk::quasimedian {
namespace {

using graphprod::Syllable;
using graphs::FiniteGraph;

// Maximal cliques of the closed neighbourhood of v that contain v.
std::vector<std::vector<int>> cliques_through(const FiniteGraph& g, int v) {
  std::vector<int> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<graphs::Edge> edges;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.adjacent(nbrs[i], nbrs[j])) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  FiniteGraph local(static_cast<int>(nbrs.size()), std::move(edges));
  std::vector<std::vector<int>> out;
  std::vector<char> covered(nbrs.size(), 0);
  for (const auto& c : maximal_cliques(local)) {
    std::vector<int> k{v};
    for (int i : c) {
      k.push_back(nbrs[i]);
      covered[i] = 1;
    }
    std::sort(k.begin(), k.end());
    out.push_back(std::move(k));
  }
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (!covered[i]) out.push_back({std::min(v, nbrs[i]), std::max(v, nbrs[i])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Two cliques through v span a square at v.
bool span_square(const FiniteGraph& g, int v, const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a) {
    if (x == v) continue;
    for (int y : b) {
      if (y == v || x == y) continue;
      auto nx = g.neighbors(x);
      for (int z : nx) {
        if (z != v && !g.adjacent(z, v) && g.adjacent(z, y)) return true;
      }
    }
  }
  return false;
}

std::string describe(const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

}  // namespace

int QMBall::find(const NormalForm& g) const {
  auto it = index.find(g);
  return it == index.end() ? -1 : it->second;
}

QMBall build_qm_ball(const GraphProductSpec& spec, int radius, std::size_t cap) {
  if (radius < 0) throw ContractError("radius must be non-negative");
  QMBall ball;
  ball.radius = radius;
  ball.labels = graphprod::enumerate_elements(spec, radius, cap);
  for (std::size_t i = 0; i < ball.labels.size(); ++i) ball.index.emplace(ball.labels[i], static_cast<int>(i));
  ball.closed = true;
  std::vector<graphs::Edge> edges;
  const int n = static_cast<int>(ball.labels.size());
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < spec.gamma.vertex_count(); ++u) {
      for (int a = 1; a < spec.groups[u].order(); ++a) {
        int w = ball.find(graphprod::multiply(spec, ball.labels[v], {Syllable{u, a}}));
        if (w < 0) {
          ball.closed = false;
        } else if (v < w) {
          edges.push_back({v, w});
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  ball.graph = FiniteGraph(n, std::move(edges));
  return ball;
}

CosetReport verify_coset_structure(const GraphProductSpec& spec, const QMBall& ball, int margin) {
  if (margin < 0 || margin > ball.radius) throw ContractError("margin must lie in [0, radius]");
  spec.validate();
  const FiniteGraph& g = ball.graph;
  const int gv = spec.gamma.vertex_count();
  const auto gamma_cliques = graphprod::cliques(spec.gamma);
  const int clique_number = static_cast<int>(gamma_cliques.back().size());
  std::set<std::vector<int>> wide_cliques;
  for (const auto& c : gamma_cliques) {
    if (c.size() >= 2) wide_cliques.insert(c);
  }

  CosetReport report;
  report.margin = margin;
  if (g.vertex_count() == 0) return report;
  const HyperplaneSystem hs = qm_hyperplanes(g);
  auto violate = [&](int v, std::string kind, std::string detail) {
    report.violations.push_back({v, std::move(kind), std::move(detail)});
  };

  for (int v = 0; v < g.vertex_count(); ++v) {
    const int len = ball.length(v);
    if (len > ball.radius - margin || (!ball.closed && len >= ball.radius)) continue;
    ++report.checked;
    const NormalForm inv = graphprod::inverse(spec, ball.labels[v]);

    // Cliques through v and the vertex group each one is a coset of.
    const auto through = cliques_through(g, v);
    std::vector<int> type(through.size(), -1);
    std::set<int> types;
    for (std::size_t i = 0; i < through.size(); ++i) {
      ++report.cliques_checked;
      const auto& k = through[i];
      int u = -1;
      bool coset = true;
      for (int y : k) {
        if (y == v) continue;
        NormalForm step = graphprod::multiply(spec, inv, ball.labels[y]);
        if (step.size() != 1 || (u >= 0 && step[0].vertex != u)) {
          coset = false;
          break;
        }
        u = step[0].vertex;
      }
      if (!coset || u < 0 || static_cast<int>(k.size()) != spec.groups[u].order()) {
        violate(v, "clique-not-coset", "clique " + describe(k) + " is not a coset of a vertex group");
        continue;
      }
      type[i] = u;
      types.insert(u);
    }
    if (static_cast<int>(through.size()) != gv || static_cast<int>(types.size()) != gv) {
      violate(v, "clique-count",
              std::to_string(through.size()) + " maximal cliques for " + std::to_string(gv) + " vertex groups");
    }

    if (ball.closed) {
      const auto& d = g.distances();
      for (const auto& k : through) {
        if (k.front() != v) continue;
        ++report.gates_checked;
        for (int x = 0; x < g.vertex_count(); ++x) {
          int best = k.front();
          for (int c : k) {
            if (d.at(x, c) < d.at(x, best)) best = c;
          }
          bool gated = std::all_of(k.begin(), k.end(), [&](int c) {
            return c == best || d.at(x, c) == d.at(x, best) + 1;
          });
          if (!gated) {
            violate(v, "clique-not-gated", "vertex " + std::to_string(x) + " has no gate in " + describe(k));
            break;
          }
        }
      }
    }

    if (!ball.closed && len + clique_number > ball.radius) continue;
    // Families of cliques through v that pairwise span squares.
    const std::size_t c = through.size();
    if (c > 20) throw_resource("cliques through one vertex", static_cast<long long>(c), 20);
    std::set<std::vector<int>> seen;
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < c; ++i) {
        if (mask >> i & 1) members.push_back(i);
      }
      bool family = std::all_of(members.begin(), members.end(), [&](std::size_t i) { return type[i] >= 0; });
      for (std::size_t a = 0; family && a < members.size(); ++a) {
        for (std::size_t b = a + 1; family && b < members.size(); ++b) {
          family = span_square(g, v, through[members[a]], through[members[b]]);
        }
      }
      if (!family) continue;
      ++report.prisms_checked;
      std::vector<int> lambda;
      std::set<int> classes;
      for (std::size_t i : members) {
        lambda.push_back(type[i]);
        const auto& k = through[i];
        classes.insert(hs.of_edge[g.edge_index(k[0], k[1])]);
      }
      std::sort(lambda.begin(), lambda.end());
      seen.insert(lambda);
      if (!wide_cliques.count(lambda)) {
        violate(v, "prism-not-clique", "prism on vertex groups " + describe(lambda) + " which are not a clique");
        continue;
      }
      // The prism as a graph: the component of v along the chosen classes.
      std::set<int> component{v};
      std::deque<int> queue{v};
      std::size_t edge_ends = 0;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
          if (!classes.count(hs.of_edge[g.edge_index(x, y)])) continue;
          ++edge_ends;
          if (component.insert(y).second) queue.push_back(y);
        }
      }
      // The prism as a coset: v times every element of the product of the
      // vertex groups in lambda.
      std::set<int> coset;
      std::vector<NormalForm> elements{NormalForm{}};
      for (int u : lambda) {
        std::vector<NormalForm> next;
        for (const NormalForm& e : elements) {
          for (int a = 0; a < spec.groups[u].order(); ++a) {
            next.push_back(graphprod::multiply(spec, e, {Syllable{u, a}}));
          }
        }
        elements = std::move(next);
      }
      bool truncated = false;
      for (const NormalForm& e : elements) {
        int w = ball.find(graphprod::multiply(spec, ball.labels[v], e));
        if (w < 0) {
          truncated = true;
          break;
        }
        coset.insert(w);
      }
      if (truncated) {
        violate(v, "prism-truncated", "coset for " + describe(lambda) + " leaves the ball");
        continue;
      }
      std::size_t expected_ends = 0;
      for (int u : lambda) expected_ends += static_cast<std::size_t>(spec.groups[u].order() - 1);
      expected_ends *= coset.size();
      if (component != coset || edge_ends != expected_ends) {
        violate(v, "prism-not-coset", "prism on " + describe(lambda) + " differs from the coset");
      }
    }
    for (const auto& lambda : wide_cliques) {
      if (!seen.count(lambda)) violate(v, "prism-missing", "no prism for the clique " + describe(lambda));
    }
  }
  return report;
}

}  // namespace medtk::quasimedian
