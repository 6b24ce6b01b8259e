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

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "medtk/errors.hpp"
#include "medtk/graphprod/coset_complex.hpp"
#include "medtk/graphprod/normal_form.hpp"
#include "medtk/graphprod/power_action.hpp"
#include "medtk/graphprod/vgp_action.hpp"
#include "medtk/graphs/builders.hpp"
#include "medtk/graphs/symmetry.hpp"
#include "medtk/groups/low_index.hpp"
#include "medtk/groups/todd_coxeter.hpp"
#include "medtk/median/cubes.hpp"

using namespace medtk;
using namespace medtk::graphprod;
using graphs::FiniteGraph;

namespace {

using Word = std::vector<Syllable>;

// Every word of exactly `len` non-identity syllables.
void all_words(const GraphProductSpec& spec, int len, const std::function<void(const Word&)>& visit) {
  Word w;
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == len) {
      visit(w);
      return;
    }
    for (int v = 0; v < spec.gamma.vertex_count(); ++v) {
      for (int a = 1; a < spec.groups[v].order(); ++a) {
        w.push_back({v, a});
        rec();
        w.pop_back();
      }
    }
  };
  rec();
}

// Direct product oracle (Gamma complete): coordinate vector.
std::vector<int> direct_value(const GraphProductSpec& spec, const Word& w) {
  std::vector<int> out(spec.gamma.vertex_count(), 0);
  for (const Syllable& s : w) out[s.vertex] = spec.groups[s.vertex].multiply(out[s.vertex], s.element);
  return out;
}

// Free product oracle (Gamma edgeless): stack reduction.
Word free_value(const GraphProductSpec& spec, const Word& w) {
  Word st;
  for (const Syllable& s : w) {
    if (!st.empty() && st.back().vertex == s.vertex) {
      st.back().element = spec.groups[s.vertex].multiply(st.back().element, s.element);
      if (st.back().element == 0) st.pop_back();
    } else {
      st.push_back(s);
    }
  }
  return st;
}

// Tits representation of a right-angled Coxeter group (faithful): s_u(x) =
// x - 2 B(e_u, x) e_u with B(e_u, e_v) = 1, 0, -1 for u = v, adjacent,
// non-adjacent.
using Matrix = std::vector<std::vector<long long>>;
Matrix tits_value(const FiniteGraph& gamma, const Word& w) {
  const int n = gamma.vertex_count();
  Matrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto b = [&](int u, int v) { return u == v ? 1 : gamma.adjacent(u, v) ? 0 : -1; };
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int u = it->vertex;
    // m = s_u * m, acting on columns.
    for (int col = 0; col < n; ++col) {
      long long dot = 0;
      for (int k = 0; k < n; ++k) dot += b(u, k) * m[k][col];
      m[u][col] -= 2 * dot;
    }
  }
  return m;
}

FiniteGraph grid3() { return graphs::grid_graph(3, 3); }

bool isomorphic(const FiniteGraph& a, const FiniteGraph& b) { return graphs::graph_isomorphic(a, b).has_value(); }

}  // namespace

TEST_CASE("finite groups") {
  auto z3 = FiniteGroup::cyclic(3);
  CHECK(z3.order() == 3);
  CHECK(z3.generators() == std::vector<int>{1});
  CHECK(z3.element_order(1) == 3);
  CHECK(z3.is_cyclic_table());
  CHECK_THROWS_AS(FiniteGroup::cyclic(1), ContractError);
  // Klein four-group needs two generators.
  FiniteGroup v4({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(v4.generators() == std::vector<int>{1, 2});
  CHECK(v4.element_words()[3] == std::vector<int>{0, 1});
  CHECK_FALSE(v4.is_cyclic_table());
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 1}}), InputError);
  // A Latin square with identity that is not associative.
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2, 3, 4},
                               {1, 0, 3, 4, 2},
                               {2, 4, 0, 1, 3},
                               {3, 2, 4, 0, 1},
                               {4, 3, 1, 2, 0}}),
                  InputError);
  CHECK_THROWS_AS(GraphProductSpec::cyclic(graphs::complete_graph(2), {2}), InputError);
}

TEST_CASE("normal form examples") {
  auto k2 = GraphProductSpec::cyclic(graphs::complete_graph(2), {2, 2});
  CHECK(normal_form(k2, {{0, 1}, {1, 1}, {0, 1}}) == NormalForm{{1, 1}});
  auto free2 = GraphProductSpec::cyclic(graphs::edgeless_graph(2), {2, 2});
  CHECK(normal_form(free2, {{0, 1}, {1, 1}, {0, 1}}).size() == 3);
  CHECK(normal_form(k2, {}).empty());
  CHECK(normal_form(k2, {{1, 1}, {0, 1}}) == NormalForm{{0, 1}, {1, 1}});
  CHECK(normal_form(k2, {{0, 0}, {1, 0}}).empty());
  CHECK_THROWS_AS(normal_form(k2, {{2, 1}}), InputError);
  CHECK_THROWS_AS(normal_form(k2, {{0, 2}}), InputError);
  // Path 0 - 1 - 2: syllables on 0 and 2 do not commute.
  auto p3 = GraphProductSpec::cyclic(graphs::path_graph(3), {3, 3, 3});
  CHECK(normal_form(p3, {{2, 1}, {1, 1}, {0, 1}}) == NormalForm{{1, 1}, {2, 1}, {0, 1}});
  CHECK(normal_form(p3, {{0, 1}, {1, 2}, {0, 2}}) == NormalForm{{1, 2}});
}

TEST_CASE("normal forms match direct and free product oracles") {
  for (const auto& spec : {GraphProductSpec::cyclic(graphs::complete_graph(2), {2, 3}),
                           GraphProductSpec::cyclic(graphs::complete_graph(3), {2, 2, 3})}) {
    std::map<std::vector<int>, NormalForm> seen;
    for (int len = 0; len <= 4; ++len) {
      all_words(spec, len, [&](const Word& w) {
        NormalForm nf = normal_form(spec, w);
        auto [it, fresh] = seen.emplace(direct_value(spec, w), nf);
        CHECK(it->second == nf);
        CHECK(normal_form(spec, nf) == nf);
      });
    }
    std::size_t order = 1;
    for (const auto& g : spec.groups) order *= static_cast<std::size_t>(g.order());
    CHECK(seen.size() == order);
  }
  for (const auto& spec : {GraphProductSpec::cyclic(graphs::edgeless_graph(2), {2, 3}),
                           GraphProductSpec::cyclic(graphs::edgeless_graph(3), {2, 2, 2})}) {
    for (int len = 0; len <= 4; ++len) {
      all_words(spec, len, [&](const Word& w) { CHECK(normal_form(spec, w) == free_value(spec, w)); });
    }
  }
}

TEST_CASE("normal forms of right-angled Coxeter groups match the Tits representation") {
  for (const FiniteGraph& gamma : {graphs::path_graph(3), graphs::path_graph(4), graphs::cycle_graph(4),
                                   graphs::cycle_graph(5), graphs::star_graph(3)}) {
    auto spec = GraphProductSpec::cyclic(gamma, std::vector<int>(gamma.vertex_count(), 2));
    std::map<Matrix, NormalForm> by_matrix;
    std::map<NormalForm, Matrix> by_form;
    for (int len = 0; len <= 5; ++len) {
      all_words(spec, len, [&](const Word& w) {
        NormalForm nf = normal_form(spec, w);
        Matrix m = tits_value(gamma, w);
        auto [a, fa] = by_matrix.emplace(m, nf);
        CHECK(a->second == nf);
        auto [b, fb] = by_form.emplace(nf, m);
        CHECK(b->second == m);
      });
    }
  }
}

TEST_CASE("normal form confluence and inverses") {
  for (const auto& spec : {GraphProductSpec::cyclic(graphs::path_graph(3), {2, 3, 2}),
                           GraphProductSpec::cyclic(graphs::cycle_graph(4), {3, 2, 3, 2})}) {
    std::vector<Word> words;
    for (int len = 0; len <= 3; ++len) all_words(spec, len, [&](const Word& w) { words.push_back(w); });
    std::mt19937 rng(3);
    for (int trial = 0; trial < 3000; ++trial) {
      const Word& u = words[rng() % words.size()];
      const Word& v = words[rng() % words.size()];
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      NormalForm lhs = normal_form(spec, uv);
      CHECK(lhs == multiply(spec, normal_form(spec, u), normal_form(spec, v)));
      CHECK(multiply(spec, lhs, inverse(spec, lhs)).empty());
    }
  }
}

TEST_CASE("coset representatives") {
  auto spec = GraphProductSpec::cyclic(graphs::path_graph(3), {2, 3, 2});
  auto elements = enumerate_elements(spec, 3);
  for (const auto& clique : cliques(spec.gamma)) {
    for (const NormalForm& g : elements) {
      NormalForm rep = coset_representative(spec, g, clique);
      CHECK(same_coset(spec, g, rep, clique));
      CHECK(rep.size() <= g.size());
      // Shortest in its coset among enumerated elements.
      for (const NormalForm& h : elements) {
        if (same_coset(spec, g, h, clique)) {
          CHECK(coset_representative(spec, h, clique) == rep);
          CHECK(rep.size() <= h.size());
        }
      }
    }
  }
  CHECK(cliques(graphs::path_graph(3)) ==
        std::vector<std::vector<int>>{{}, {0}, {1}, {2}, {0, 1}, {1, 2}});
}

TEST_CASE("coset complex examples") {
  auto one = build_coset_complex(GraphProductSpec::cyclic(FiniteGraph(1), {2}), std::nullopt);
  CHECK(one.graph.vertex_count() == 3);
  CHECK(isomorphic(one.graph, graphs::path_graph(3)));

  auto k2 = build_coset_complex(GraphProductSpec::cyclic(graphs::complete_graph(2), {2, 2}), std::nullopt);
  CHECK(k2.graph.vertex_count() == 9);
  CHECK(isomorphic(k2.graph, grid3()));
  auto mg = median::require_median(k2.graph);
  CHECK(median::cubical_dimension(mg).dimension == 2);
  CHECK(k2.labels[0].representative.empty());
  CHECK(k2.labels[0].clique.empty());

  auto line = build_coset_complex(GraphProductSpec::cyclic(graphs::edgeless_graph(2), {2, 2}), 2);
  CHECK(line.graph.vertex_count() == 11);
  CHECK(isomorphic(line.graph, graphs::path_graph(11)));

  CHECK_THROWS_AS(build_coset_complex(GraphProductSpec::cyclic(graphs::edgeless_graph(2), {2, 2}), std::nullopt),
                  UnsupportedRegime);
  CHECK_THROWS_AS(build_coset_complex(GraphProductSpec::cyclic(graphs::complete_graph(3), {5, 5, 5}), std::nullopt, 100),
                  ResourceError);
}

TEST_CASE("full coset complexes are median of dimension clique(Gamma)") {
  std::vector<std::pair<int, std::vector<int>>> cases{{1, {3}}, {2, {2, 3}}, {2, {3, 3}}, {3, {2, 2, 2}}, {3, {2, 3, 2}}};
  for (const auto& [k, orders] : cases) {
    auto spec = GraphProductSpec::cyclic(graphs::complete_graph(k), orders);
    auto cx = build_coset_complex(spec, std::nullopt);
    // Sum over cliques of the index of <Lambda>.
    long long expected = 0;
    for (const auto& clique : cliques(spec.gamma)) {
      long long index = 1;
      for (int v = 0; v < k; ++v) {
        if (!std::binary_search(clique.begin(), clique.end(), v)) index *= orders[v];
      }
      expected += index;
    }
    CHECK(cx.graph.vertex_count() == expected);
    auto mg = median::require_median(cx.graph);
    CHECK(median::cubical_dimension(mg).dimension == k);
    // The complex is the product of the stars K_{1, q_v}.
    FiniteGraph product = graphs::star_graph(orders[0]);
    for (int v = 1; v < k; ++v) product = graphs::cartesian_product(product, graphs::star_graph(orders[v]));
    CHECK(isomorphic(cx.graph, product));
  }
}

TEST_CASE("truncated coset complexes") {
  // Right-angled Coxeter group on a path: truncated complexes are median.
  auto spec = GraphProductSpec::cyclic(graphs::path_graph(3), {2, 2, 2});
  for (int r = 0; r <= 3; ++r) {
    auto cx = build_coset_complex(spec, r);
    CHECK(cx.graph.connected());
    auto res = median::certify_median(cx.graph);
    CHECK(std::holds_alternative<median::MedianGraph>(res));
    for (const NormalForm& g : cx.elements) CHECK(static_cast<int>(g.size()) <= r);
  }
}

TEST_CASE("virtual graph product action on the K2 complex") {
  for (int q : {2, 3}) {
    CAPTURE(q);
    auto spec = GraphProductSpec::cyclic(graphs::complete_graph(2), {q, q});
    auto cx = build_coset_complex(spec, std::nullopt);
    graphs::Permutation swap({1, 0});
    auto va = vgp_action(spec, {swap}, cx);
    for (const auto& r : va.relators) CHECK(va.action.evaluate(r).is_identity());
    auto st = stabilizers(va.action);
    CHECK(st.group_order == static_cast<std::size_t>(q * q * 2));
    // Vertices 1<> g: stabilisers are conjugates of the swap subgroup.
    for (int v = 0; v < cx.graph.vertex_count(); ++v) {
      if (cx.labels[v].clique.empty()) CHECK(st.stabilizer_orders[v] == 2);
    }
    // The top coset <u, v> is the whole vertex-group product.
    CHECK(st.stabilizer_orders[cx.find({{}, {0, 1}})] == st.group_order);
    CHECK(st.orbit_count == 3);

    auto plain = vgp_action(spec, {}, cx);
    auto pst = stabilizers(plain.action);
    CHECK(pst.group_order == static_cast<std::size_t>(q * q));
    for (int v = 0; v < cx.graph.vertex_count(); ++v) {
      if (cx.labels[v].clique.empty()) CHECK(pst.stabilizer_orders[v] == 1);
    }

    auto fixed = vertex_group_fixed_sets(va);
    REQUIRE(fixed.sets.size() == 2);
    for (int u = 0; u < 2; ++u) {
      CHECK(fixed.sets[u].count() == static_cast<std::size_t>(q + 1));
      CHECK(fixed.convex[u]);
      for (int v : fixed.sets[u].indices()) {
        const auto& c = cx.labels[v].clique;
        CHECK(std::find(c.begin(), c.end(), u) != c.end());
      }
    }
    CHECK(fixed.meets[0][1]);
  }
}

TEST_CASE("vgp action errors") {
  auto spec = GraphProductSpec::cyclic(graphs::complete_graph(2), {2, 3});
  auto cx = build_coset_complex(spec, std::nullopt);
  CHECK_THROWS_AS(vgp_action(spec, {graphs::Permutation({1, 0})}, cx), ContractError);
  auto path = GraphProductSpec::cyclic(graphs::path_graph(3), {2, 2, 2});
  auto pcx = build_coset_complex(path, 1);
  CHECK_THROWS_AS(vgp_action(path, {}, pcx), TruncationError);
  CHECK_THROWS_AS(vgp_action(path, {graphs::Permutation({1, 0, 2})}, pcx), ContractError);
}

TEST_CASE("pairwise adjacent vertex groups have meeting fixed sets") {
  auto spec = GraphProductSpec::cyclic(graphs::complete_graph(3), {2, 2, 2});
  auto cx = build_coset_complex(spec, std::nullopt);
  auto fixed = vertex_group_fixed_sets(vgp_action(spec, {}, cx));
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) CHECK(fixed.meets[u][v]);
    CHECK(fixed.convex[u]);
  }
  auto all = Bitset::full(static_cast<std::size_t>(cx.graph.vertex_count()));
  auto region = Bitset(all.size());
  region.set(0);
  auto restricted = vertex_group_fixed_sets(vgp_action(spec, {}, cx), region);
  for (const auto& s : restricted.sets) CHECK(s.none());
}

TEST_CASE("induced power action") {
  using groups::Presentation;
  // G = Z/4, H = <g^2> acting on K2 by the swap.
  Presentation z4(1, {{1, 1, 1, 1}}, {"g"});
  auto table = groups::todd_coxeter(z4, {{1, 1}});
  REQUIRE(table.coset_count() == 2);
  median::GraphAction swap(graphs::complete_graph(2), {"s"}, {graphs::Permutation({1, 0})});
  auto pa = induced_power_action(z4, table, swap);
  CHECK(pa.index == 2);
  CHECK(isomorphic(pa.action.graph(), graphs::build_hypercube(2)));
  CHECK(pa.action.evaluate(groups::Word{1, 1, 1, 1}).is_identity());
  CHECK_FALSE(pa.action.evaluate(groups::Word{1, 1}).is_identity());
  CHECK(median::fixed_set(pa.action, {{1}}).none());
  // The generator swaps coordinates and flips exactly one of them.
  auto g = pa.action.generators()[0];
  for (int v = 0; v < 4; ++v) {
    auto p = pa.coordinates(v);
    auto q = pa.coordinates(g(v));
    CHECK(((q[0] == p[1]) + (q[1] == p[0])) == 1);
  }

  // Index 1: the same action.
  auto whole = groups::todd_coxeter(z4, {{1}});
  median::GraphAction rot(graphs::cycle_graph(4), {"r"}, {graphs::Permutation({1, 2, 3, 0})});
  auto same = induced_power_action(z4, whole, rot);
  CHECK(same.action.graph() == rot.graph());
  CHECK(same.action.generators()[0] == rot.generators()[0]);

  // Trivial subgroup action: pure coordinate permutation.
  Presentation s3(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  for (const auto& t : groups::low_index_subgroups(s3, 3)) {
    auto sub = groups::reidemeister_schreier(s3, t);
    std::vector<graphs::Permutation> ids(sub.presentation.generator_count(), graphs::Permutation::identity(2));
    std::vector<std::string> labels(ids.size(), "h");
    median::GraphAction trivial(graphs::complete_graph(2), labels, ids);
    auto p = induced_power_action(s3, t, trivial);
    for (const auto& r : s3.relators()) CHECK(p.action.evaluate(r).is_identity());
    for (std::size_t gi = 0; gi < 2; ++gi) {
      const auto& perm = p.action.generators()[gi];
      for (int v = 0; v < p.action.graph().vertex_count(); ++v) {
        auto a = p.coordinates(v);
        auto b = p.coordinates(perm(v));
        std::multiset<int> ma(a.begin(), a.end()), mb(b.begin(), b.end());
        CHECK(ma == mb);
      }
    }
  }
  // A bad subgroup action is rejected.
  Presentation z3(1, {{1, 1, 1}});
  auto t3 = groups::todd_coxeter(z3, {{1}});
  median::GraphAction bad3(graphs::path_graph(3), {"s"}, {graphs::Permutation({2, 1, 0})});
  CHECK_THROWS_AS(induced_power_action(z3, t3, bad3), ContractError);
}
