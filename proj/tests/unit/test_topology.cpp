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

#include "doctest.h"
#include "medtk/errors.hpp"
#include "medtk/graphs/builders.hpp"
#include "medtk/graphs/symmetry.hpp"
#include "medtk/topology/complex.hpp"
#include "medtk/topology/homology.hpp"

using namespace medtk;
using namespace medtk::graphs;
using namespace medtk::topology;

namespace {

using Sizes = std::vector<std::size_t>;

FiniteGraph join_of_pairs(int n) {
  std::vector<FiniteGraph> parts(static_cast<std::size_t>(n), edgeless_graph(2));
  return build_join(parts);
}

// Non-antipodal pairs of Q_d vertices.
FiniteGraph non_opposite_graph(int d) {
  const int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((u ^ v) != n - 1) e.emplace_back(u, v);
  return FiniteGraph::from_pairs(n, e);
}

SimplicialComplex full_simplex(int k) {
  Simplex s;
  for (int i = 0; i < k; ++i) s.push_back(i);
  return SimplicialComplex(k, {s});
}

Sizes sphere_betti(int k) {
  Sizes s(static_cast<std::size_t>(k) + 1, 0);
  s[k] = 1;
  return s;
}

}  // namespace

TEST_CASE("complex construction keeps maximal facets") {
  SimplicialComplex sc(4, {{2, 1}, {0, 1, 2}, {3}, {1, 2}});
  CHECK(sc.facets() == std::vector<Simplex>{{0, 1, 2}, {3}});
  CHECK(sc.dimension() == 2);
  CHECK(sc.faces(1, 100).size() == 3);
  CHECK_THROWS_AS(SimplicialComplex(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(SimplicialComplex(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(full_simplex(12).faces(5, 100), ResourceError);
}

TEST_CASE("flag completions") {
  auto c4 = flag_completion(cycle_graph(4));
  CHECK(c4.dimension() == 1);
  CHECK(c4.facets().size() == 4);
  CHECK(flag_completion(complete_graph(3)) == full_simplex(3));
  auto octa = flag_completion(join_of_pairs(3));
  CHECK(octa.facets().size() == 8);
  CHECK(octa.dimension() == 2);
  CHECK(flag_completion(edgeless_graph(3)).facets().size() == 3);
}

TEST_CASE("nerves") {
  std::vector<Bitset> triangle{Bitset(3, {0, 1}), Bitset(3, {1, 2}), Bitset(3, {0, 2})};
  auto n1 = nerve(triangle);
  CHECK(n1.facets() == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  std::vector<Bitset> shared{Bitset(4, {0, 1}), Bitset(4, {0, 2}), Bitset(4, {0, 3})};
  CHECK(nerve(shared) == full_simplex(3));
  std::vector<Bitset> apart{Bitset(3, {0}), Bitset(3, {1}), Bitset(3, {2})};
  CHECK(nerve(apart).facets() == std::vector<Simplex>{{0}, {1}, {2}});
  CHECK(homology(n1).betti == Sizes{1, 1});
}

TEST_CASE("homology of standard complexes") {
  auto tetra_boundary = flag_completion(complete_graph(4));
  CHECK(homology(tetra_boundary).betti == Sizes{1, 0, 0, 0});
  SimplicialComplex sphere(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  auto h = homology(sphere);
  CHECK(h.betti == Sizes{1, 0, 1});
  CHECK(h.reduced_betti == Sizes{0, 0, 1});
  CHECK(h.euler_characteristic == 2);
  CHECK(homology(full_simplex(5)).reduced_betti == Sizes{0, 0, 0, 0, 0});
  CHECK(homology(flag_completion(edgeless_graph(3))).betti == Sizes{3});
  CHECK(homology(SimplicialComplex()).betti.empty());

  // Minimal 6-vertex triangulation of the real projective plane: H_1 = Z/2.
  SimplicialComplex rp2(6, {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}, {0, 3, 4}, {1, 4, 5},
                            {2, 5, 3}, {0, 4, 5}, {1, 5, 3}, {2, 3, 4}, {0, 1, 2}});
  auto hp = homology(rp2);
  CHECK(hp.betti == Sizes{1, 0, 0});
  REQUIRE(hp.torsion[1].size() == 1);
  CHECK(hp.torsion[1][0] == 2);
  CHECK(nontrivial_in_dim(rp2, 1));
  CHECK_FALSE(nontrivial_in_dim(rp2, 2));
}

TEST_CASE("joins of isolated pairs are spheres") {
  for (int n = 2; n <= 4; ++n) {
    auto h = homology(flag_completion(join_of_pairs(n)));
    CHECK(h.reduced_betti == sphere_betti(n - 1));
    for (const auto& t : h.torsion) CHECK(t.empty());
    CHECK(nontrivial_in_dim(flag_completion(join_of_pairs(n)), n - 1));
  }
  CHECK(nontrivial_in_dim(flag_completion(cycle_graph(4)), 1));
  CHECK_FALSE(nontrivial_in_dim(flag_completion(complete_graph(3)), 1));
  CHECK(nontrivial_in_dim(flag_completion(join_of_pairs(3)), 2));
}

// Antipodal pairs of the d-cube number 2^(d-1), so the non-antipodal graph is
// the 2^(d-1)-fold join of isolated pairs.
TEST_CASE("the non-antipodal graph on cube vertices") {
  for (int d = 1; d <= 4; ++d) {
    auto g = non_opposite_graph(d);
    int pairs = 1 << (d - 1);
    CHECK(graph_isomorphic(g, cross_polytope_graph(pairs)));
    CHECK(homology(flag_completion(g)).reduced_betti == sphere_betti(pairs - 1));
  }
}
