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
#include <random>
#include <set>

#include "doctest.h"
#include "medtk/errors.hpp"
#include "medtk/graphs/builders.hpp"
#include "medtk/graphs/symmetry.hpp"
#include "medtk/median/action.hpp"
#include "medtk/median/convexity.hpp"
#include "medtk/median/cubes.hpp"
#include "medtk/median/median_graph.hpp"

using namespace medtk;
using namespace medtk::graphs;
using namespace medtk::median;

namespace {

// Medians counted straight from the interval definition.
int brute_median_count(const FiniteGraph& g, int u, int v, int w) {
  auto between = [&](int a, int b, int m) {
    return g.distance(a, m) + g.distance(m, b) == g.distance(a, b);
  };
  int count = 0;
  for (int m = 0; m < g.vertex_count(); ++m) {
    if (between(u, v, m) && between(v, w, m) && between(u, w, m)) ++count;
  }
  return count;
}

bool brute_is_median(const FiniteGraph& g) {
  if (!g.connected()) return false;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      for (int w = v; w < n; ++w)
        if (brute_median_count(g, u, v, w) != 1) return false;
  return true;
}

FiniteGraph random_tree(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % v), v);
  return FiniteGraph::from_pairs(n, e);
}

FiniteGraph random_graph(int n, int percent, std::mt19937& rng) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) e.emplace_back(u, v);
  return FiniteGraph::from_pairs(n, e);
}

Bitset set_of(int n, std::initializer_list<int> xs) { return Bitset(static_cast<std::size_t>(n), xs); }

bool is_failure(const CertifyResult& r) { return std::holds_alternative<MedianFailure>(r); }

}  // namespace

TEST_CASE("trees certify in both modes") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = random_tree(1 + static_cast<int>(rng() % 50), rng);
    auto fast = certify_median(t);
    auto slow = certify_median(t, kDefaultMedianCap, CertifyMode::kDistanceTriples);
    REQUIRE_FALSE(is_failure(fast));
    REQUIRE_FALSE(is_failure(slow));
    CHECK(std::get<MedianGraph>(fast).hyperplane_count() == t.edge_count());
  }
}

TEST_CASE("non-median graphs give verified witnesses") {
  auto k23 = FiniteGraph::from_pairs(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto r = certify_median(k23);
  REQUIRE(is_failure(r));
  auto f = std::get<MedianFailure>(r);
  CHECK(f.kind == MedianFailure::Kind::kManyMedians);
  CHECK(brute_median_count(k23, f.triple[0], f.triple[1], f.triple[2]) ==
        static_cast<int>(f.median_count));
  CHECK(f.median_count >= 2);

  auto c6 = cycle_graph(6);
  r = certify_median(c6);
  REQUIRE(is_failure(r));
  f = std::get<MedianFailure>(r);
  CHECK(brute_median_count(c6, f.triple[0], f.triple[1], f.triple[2]) ==
        static_cast<int>(f.median_count));
  CHECK(f.median_count != 1);

  r = certify_median(edgeless_graph(2));
  REQUIRE(is_failure(r));
  CHECK(std::get<MedianFailure>(r).kind == MedianFailure::Kind::kDisconnected);
  CHECK(std::get<MedianFailure>(certify_median(FiniteGraph(0))).kind ==
        MedianFailure::Kind::kEmpty);
  CHECK_THROWS_AS(certify_median(path_graph(10), 5), ResourceError);
  CHECK_THROWS_AS(require_median(c6), ContractError);
}

TEST_CASE("certification matches the interval oracle on random small graphs") {
  std::mt19937 rng(99);
  int medians = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto g = random_graph(n, 20 + static_cast<int>(rng() % 50), rng);
    bool expected = brute_is_median(g);
    CAPTURE(trial);
    CHECK(!is_failure(certify_median(g)) == expected);
    CHECK(!is_failure(certify_median(g, 64, CertifyMode::kDistanceTriples)) == expected);
    medians += expected;
  }
  CHECK(medians > 20);
  for (const auto& g : {build_hypercube(3), grid_graph(3, 4), cartesian_product(path_graph(3), star_graph(3))}) {
    CHECK(brute_is_median(g));
    CHECK_FALSE(is_failure(certify_median(g)));
  }
}

TEST_CASE("hyperplanes and separation") {
  auto q3 = require_median(build_hypercube(3));
  REQUIRE(q3.hyperplane_count() == 3);
  for (const auto& h : q3.hyperplanes()) {
    CHECK(h.minus.count() == 4);
    CHECK(h.plus.count() == 4);
    CHECK(h.minus.test(0));
    CHECK(is_convex(q3, h.minus));
    CHECK(is_convex(q3, h.plus));
  }
  CHECK(require_median(path_graph(6)).hyperplane_count() == 5);
  CHECK(require_median(grid_graph(3, 3)).hyperplane_count() == 4);
  for (const auto& g : {build_hypercube(4), grid_graph(4, 3), path_graph(5)}) {
    auto mg = require_median(g);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v) CHECK(mg.separation(u, v) == g.distance(u, v));
    for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
      const auto& h = mg.hyperplanes()[mg.hyperplane_of_edge(e)];
      const auto& ed = g.edges()[e];
      CHECK(h.minus.test(ed.u) != h.minus.test(ed.v));
    }
  }
  auto q2 = require_median(build_hypercube(2));
  CHECK(q2.median(0, 1, 2) == 0);
  CHECK(q2.median(1, 2, 3) == 3);
}

TEST_CASE("convex hulls") {
  for (int d = 1; d <= 4; ++d) {
    auto q = require_median(build_hypercube(d));
    int n = 1 << d;
    auto r = convex_hull(q, set_of(n, {0, n - 1}));
    CHECK(r.hull.count() == static_cast<std::size_t>(n));
    CHECK(r.seed_is_convex == (d == 1));
    auto e = convex_hull(q, set_of(n, {0, 1}));
    CHECK(e.hull == set_of(n, {0, 1}));
    CHECK(e.seed_is_convex);
    CHECK(convex_hull(q, set_of(n, {n - 1})).seed_is_convex);
  }
  auto grid = require_median(grid_graph(4, 4));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Bitset seed(16);
    for (int k = 0; k < 1 + trial % 3; ++k) seed.set(rng() % 16);
    auto h = convex_hull(grid, seed).hull;
    CHECK(convex_hull(grid, h).hull == h);
    Bitset bigger = seed;
    bigger.set(rng() % 16);
    CHECK(h.is_subset_of(convex_hull(grid, bigger).hull));
  }
  CHECK_THROWS_AS(convex_hull(grid, Bitset(16)), ContractError);
}

TEST_CASE("gate projection") {
  auto q2 = require_median(build_hypercube(2));
  CHECK(gate_projection(q2, set_of(4, {0, 1}), 3) == 1);
  CHECK(gate_projection(q2, set_of(4, {0, 1}), 0) == 0);
  CHECK_THROWS_AS(gate_projection(q2, set_of(4, {0, 3}), 1), ContractError);

  // subtree {0,1,2} of a path 0-1-2-3-4
  auto p = require_median(path_graph(5));
  CHECK(gate_projection(p, set_of(5, {0, 1, 2}), 4) == 2);

  auto grid = require_median(grid_graph(4, 4));
  Bitset block = set_of(16, {5, 6, 9, 10});
  for (int x = 0; x < 16; ++x) {
    int y = gate_projection(grid, block, x);
    CHECK(block.test(y));
    for (int z : block.indices()) CHECK(grid_graph(4, 4).distance(y, z) <= grid_graph(4, 4).distance(x, z));
  }
}

TEST_CASE("Helly intersections") {
  auto star = require_median(star_graph(3));
  auto r = helly_intersection(star, {set_of(4, {0, 1}), set_of(4, {0, 2}), set_of(4, {0, 3})});
  REQUIRE(r.common_vertex);
  CHECK(*r.common_vertex == 0);

  auto q3 = require_median(build_hypercube(3));
  std::vector<Bitset> fam;
  for (const auto& h : q3.hyperplanes()) fam.push_back(h.plus);
  r = helly_intersection(q3, fam);
  REQUIRE(r.common_vertex);
  for (const auto& s : fam) CHECK(s.test(*r.common_vertex));

  r = helly_intersection(q3, {q3.hyperplanes()[0].minus, q3.hyperplanes()[0].plus});
  CHECK_FALSE(r.common_vertex);
  REQUIRE(r.disjoint_pair);
  CHECK(r.disjoint_pair->first == 0);
  CHECK(r.disjoint_pair->second == 1);
}

TEST_CASE("cubical dimension") {
  CHECK(cubical_dimension(require_median(path_graph(4))).dimension == 1);
  CHECK(cubical_dimension(require_median(FiniteGraph(1))).dimension == 0);
  auto q3 = cubical_dimension(require_median(build_hypercube(3)));
  CHECK(q3.dimension == 3);
  CHECK(q3.vertices.size() == 8);
  CHECK(cubical_dimension(require_median(grid_graph(3, 3))).dimension == 2);
  CHECK(cubical_dimension(require_median(build_hypercube(4))).dimension == 4);
  auto tree_times_edge = cartesian_product(star_graph(4), path_graph(2));
  CHECK(cubical_dimension(require_median(tree_times_edge)).dimension == 2);
}

TEST_CASE("cubical subdivision") {
  auto e = cubical_subdivision(require_median(path_graph(2)));
  CHECK(graph_isomorphic(e.graph.graph(), path_graph(3)));
  auto q2 = cubical_subdivision(require_median(build_hypercube(2)));
  CHECK(graph_isomorphic(q2.graph.graph(), grid_graph(3, 3)));
  auto p3 = cubical_subdivision(require_median(path_graph(3)));
  CHECK(graph_isomorphic(p3.graph.graph(), path_graph(5)));
  auto q3 = cubical_subdivision(require_median(build_hypercube(3)));
  CHECK(q3.graph.vertex_count() == 27);
  CHECK(graph_isomorphic(q3.graph.graph(),
                         cartesian_product(cartesian_product(path_graph(3), path_graph(3)),
                                           path_graph(3))));
  for (int i = 0; i < 8; ++i) CHECK(q3.cubes[i].dimension() == 0);
  CHECK(q3.cubes.back().dimension() == 3);
}

TEST_CASE("orientations") {
  auto p = consistent_orientations(require_median(path_graph(3)));
  CHECK(p.size() == 3);
  auto q = consistent_orientations(require_median(build_hypercube(2)));
  CHECK(q.size() == 4);
  auto one = consistent_orientations(require_median(FiniteGraph(1)));
  CHECK(one.size() == 1);
  for (const auto& g : {path_graph(3), build_hypercube(2), grid_graph(3, 4), star_graph(5),
                        build_hypercube(4)}) {
    auto mg = require_median(g);
    auto os = consistent_orientations(mg);
    CHECK(os.size() == static_cast<std::size_t>(g.vertex_count()));
    for (const auto& o : os) CHECK(o.principal);
  }
  CHECK_THROWS_AS(consistent_orientations(require_median(path_graph(22))), ResourceError);
}

TEST_CASE("fixed sets of graph actions") {
  auto q2 = build_hypercube(2);
  GraphAction swap(q2, {"s"}, {Permutation({0, 2, 1, 3})});
  CHECK(fixed_set(swap, {{1}}) == set_of(4, {0, 3}));
  GraphAction id(q2, {"e"}, {Permutation::identity(4)});
  CHECK(fixed_set(id, {{1}}).count() == 4);
  auto c4 = cycle_graph(4);
  GraphAction rot(c4, {"r"}, {Permutation({1, 2, 3, 0})});
  CHECK(fixed_set(rot, {{1}}).none());
  CHECK(fixed_set(rot, {{1, 1, 1, 1}}).count() == 4);
  CHECK(rot.evaluate(std::vector<int>{1, -1}).is_identity());
  CHECK(rot.orbits().size() == 1);
  CHECK_THROWS_AS(GraphAction(path_graph(3), {"x"}, {Permutation({1, 0, 2})}), ContractError);
  CHECK_THROWS_AS(rot.evaluate(std::vector<int>{2}), ContractError);
}

TEST_CASE("cyclic coordinate shift on Q_k fixes exactly the two poles") {
  for (int k = 2; k <= 5; ++k) {
    int n = 1 << k;
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = ((v << 1) | (v >> (k - 1))) & (n - 1);
    auto q = build_hypercube(k);
    GraphAction shift(q, {"c"}, {Permutation(img)});
    auto fix = fixed_set(shift, {{1}});
    CHECK(fix == set_of(n, {0, n - 1}));
    auto hull = convex_hull(require_median(q), fix);
    CHECK(hull.hull.count() == static_cast<std::size_t>(n));
    CHECK_FALSE(hull.seed_is_convex);
  }
}
