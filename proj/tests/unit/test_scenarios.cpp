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
#include <map>
#include <numeric>

#include "doctest.h"
#include "medtk/errors.hpp"
#include "medtk/graphs/builders.hpp"
#include "medtk/graphs/symmetry.hpp"
#include "medtk/groups/coxeter.hpp"
#include "medtk/median/convexity.hpp"
#include "medtk/median/median_graph.hpp"
#include "medtk/scenarios/commands.hpp"
#include "medtk/scenarios/corpus.hpp"
#include "medtk/scenarios/scenarios.hpp"

using namespace medtk;
using namespace medtk::scenarios;

namespace {

// Orbits of wall sets of size <= max_walls under S_p, by Burnside's lemma.
long long burnside_wallspaces(int p, int max_walls) {
  const unsigned full = (1u << p) - 1;
  std::vector<unsigned> walls;  // normalised as the numerically smaller side
  for (unsigned s = 1; s < full; ++s) {
    if (s < (full & ~s)) walls.push_back(s);
  }
  std::map<unsigned, int> index;
  for (std::size_t i = 0; i < walls.size(); ++i) index[walls[i]] = static_cast<int>(i);
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  long long group = 0;
  do {
    ++group;
    std::vector<int> image(walls.size());
    for (std::size_t i = 0; i < walls.size(); ++i) {
      unsigned t = 0;
      for (int b = 0; b < p; ++b) {
        if (walls[i] >> b & 1) t |= 1u << perm[b];
      }
      image[i] = index.at(std::min(t, full & ~t));
    }
    std::vector<int> cycles;
    std::vector<char> seen(walls.size(), 0);
    for (std::size_t i = 0; i < walls.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) {
        seen[j] = 1;
        ++len;
      }
      cycles.push_back(len);
    }
    // ways[s]: unions of whole cycles with s walls.
    std::vector<long long> ways(static_cast<std::size_t>(max_walls) + 1, 0);
    ways[0] = 1;
    for (int c : cycles) {
      for (int s = max_walls; s >= c; --s) ways[s] += ways[s - c];
    }
    total += std::accumulate(ways.begin(), ways.end(), 0LL);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / group;
}

}  // namespace

TEST_CASE("tree corpus counts unlabeled trees") {
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  auto trees = all_trees(10);
  std::vector<std::size_t> by_size(10, 0);
  for (const auto& t : trees) {
    CHECK(t.graph.connected());
    CHECK(t.graph.edge_count() + 1 == static_cast<std::size_t>(t.graph.vertex_count()));
    ++by_size[t.graph.vertex_count() - 1];
  }
  CHECK(by_size == counts);
  // Pairwise non-isomorphic, checked by search on the sizes where that is cheap.
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].graph.vertex_count() > 7) continue;
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      if (trees[j].graph.vertex_count() != trees[i].graph.vertex_count()) continue;
      CHECK_FALSE(graphs::graph_isomorphic(trees[i].graph, trees[j].graph).has_value());
    }
  }
}

TEST_CASE("random convex subgraphs of Q6") {
  auto a = random_convex_subgraphs(6, 50, 1);
  auto b = random_convex_subgraphs(6, 50, 1);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].graph == b[i].graph);
    CHECK(median::certify_median(a[i].graph).index() == 0);
  }
  auto c = random_convex_subgraphs(6, 50, 2);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || !(a[i].graph == c[i].graph);
  CHECK(differs);
  CHECK(median_corpus(CorpusSize::kFull, 1).size() == 201 + 15 + 5 + 50);
}

TEST_CASE("wallspace corpus matches a Burnside count") {
  auto corpus = wallspace_corpus(5, 10, 10000);
  CHECK_FALSE(corpus.capped);
  long long expected = 0;
  for (int p = 1; p <= 5; ++p) expected += burnside_wallspaces(p, 10);
  CHECK(static_cast<long long>(corpus.items.size()) == expected);
  std::map<int, long long> by_points;
  for (const auto& ws : corpus.items) {
    ++by_points[ws.point_count()];
    CHECK(ws.wall_count() <= 10);
  }
  for (int p = 1; p <= 5; ++p) CHECK(by_points[p] == burnside_wallspaces(p, 10));
  // Three points: the empty set, one wall, two walls and all three walls.
  CHECK(by_points[3] == 4);
  auto capped = wallspace_corpus(5, 10, 7);
  CHECK(capped.capped);
  CHECK(capped.items.size() == 7);
}

TEST_CASE("report verdict rules") {
  ScenarioReport r;
  r.scenario = "x";
  CHECK(r.overall() == Verdict::kInconclusive);
  r.add_bool("a", "anchor a", true);
  CHECK(r.overall() == Verdict::kPass);
  r.add("b", "anchor b", Verdict::kInconclusive);
  CHECK(r.overall() == Verdict::kInconclusive);
  r.add_bool("c", "anchor c", false);
  CHECK(r.overall() == Verdict::kFail);
  CHECK(exit_code(Verdict::kPass) == 0);
  CHECK(exit_code(Verdict::kFail) == 1);
  CHECK(exit_code(Verdict::kInconclusive) == 2);
  Json j = report_to_json(r);
  CHECK(j["verdict"] == "fail");
  CHECK(j["checks"].size() == 3);
  for (const auto& c : j["checks"]) CHECK_FALSE(c["anchor"].get<std::string>().empty());
  CHECK(report_to_text(r).find("verdict: fail") != std::string::npos);
}

TEST_CASE("scenario verdicts") {
  CHECK(run_scenario("affine-coxeter", {{"n", "2"}}).overall() == Verdict::kPass);
  for (const char* k : {"2", "3", "4"}) {
    auto r = run_scenario("cube-fix", {{"k", k}});
    CHECK(r.overall() == Verdict::kPass);
  }
  CHECK(run_scenario("cube-fix", {{"k", "5"}, {"group", "symmetric"}}).overall() == Verdict::kPass);
  CHECK(run_scenario("duality", {{"corpus", "small"}}).overall() == Verdict::kPass);
  CHECK(run_scenario("graph-product", {}).overall() == Verdict::kPass);
  CHECK(run_scenario("graph-product", {{"q", "3"}}).overall() == Verdict::kPass);
  CHECK(run_scenario("graph-product", {{"gamma", "k3"}, {"radius", "3"}}).overall() == Verdict::kPass);
  CHECK(run_scenario("quasiline-dinfty", {}).overall() == Verdict::kPass);
  CHECK(run_scenario("cubulable-fw", {{"n", "2"}, {"q", "5"}}).overall() == Verdict::kPass);
  CHECK(run_scenario("gamma-rs", {{"r", "3"}, {"s", "1"}}).overall() == Verdict::kPass);

  // A non-complete Gamma skips the finite-group checks as inconclusive.
  auto c4 = run_scenario("graph-product", {{"gamma", "c4"}, {"radius", "2"}, {"margin", "1"}});
  CHECK(c4.overall() == Verdict::kInconclusive);
  for (const auto& c : c4.checks) CHECK(c.verdict != Verdict::kFail);

  // An even q fails the cyclic hypothesis at n = 3.
  auto even = run_scenario("cubulable-fw", {{"n", "3"}, {"q", "4"}});
  CHECK(even.overall() == Verdict::kFail);
}

TEST_CASE("coset limit makes the quotient checks inconclusive, not passing") {
  auto r = run_scenario("affine-coxeter", {{"n", "3"}, {"limit", "20"}});
  int d4 = 0;
  for (const auto& c : r.checks) {
    if (c.name.find("quotient") == std::string::npos) continue;
    ++d4;
    CHECK(c.verdict != Verdict::kPass);
  }
  CHECK(d4 == 3);
}

TEST_CASE("reports are deterministic") {
  for (const auto& name : scenario_names()) {
    CAPTURE(name);
    auto a = io::dump(report_to_json(run_scenario(name, {})));
    auto b = io::dump(report_to_json(run_scenario(name, {})));
    CHECK(a == b);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(run_scenario("no-such", {}), InputError);
  CHECK_THROWS_AS(run_scenario("cube-fix", {{"n", "3"}}), InputError);
  CHECK_THROWS_AS(run_scenario("cube-fix", {{"k", "three"}}), InputError);
  CHECK_THROWS_AS(run_scenario("cube-fix", {{"k", "1"}}), InputError);
  CHECK_THROWS_AS(run_scenario("duality", {{"corpus", "huge"}}), InputError);
  CHECK_THROWS_AS(run_scenario("graph-product", {{"radius", "2"}, {"margin", "3"}}), InputError);
  CHECK(scenario_names().size() == 7);
}

TEST_CASE("single-input commands") {
  CHECK(check_median_report(graphs::build_hypercube(3)).overall() == Verdict::kPass);
  auto c6 = check_median_report(graphs::cycle_graph(6));
  CHECK(c6.overall() == Verdict::kFail);
  CHECK(c6.checks[0].data.contains("triple"));
  CHECK(fw_abelian_report(groups::build_affine_coxeter(2), 2).overall() == Verdict::kPass);
  auto fails = fw_abelian_report(groups::build_affine_coxeter(1), 1);
  CHECK(fails.overall() == Verdict::kFail);
  CHECK(fails.checks[0].data.contains("witness"));

  wallspace::Wallspace two(4, {Bitset(4, {0, 1}), Bitset(4, {0, 2})});
  Json c = cubulation_json(two);
  CHECK(c["graph"]["n"] == 4);
  CHECK(c["orientations"].size() == 4);
  CHECK(c["point_vertex"].size() == 4);
}
