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

#include <random>
#include <set>

#include "doctest.h"
#include "medtk/errors.hpp"
#include "medtk/graphs/builders.hpp"
#include "medtk/quasiline/quasiline.hpp"

using namespace medtk;
using namespace medtk::quasiline;
using graphs::FiniteGraph;
using graphs::Permutation;

namespace {

PeriodicQuasiLine ladder() { return PeriodicQuasiLine(graphs::complete_graph(2), {{0, 0}, {1, 1}}); }

// The line again, with two vertices per period.
PeriodicQuasiLine doubled_line() { return PeriodicQuasiLine(graphs::path_graph(2), {{1, 0}}); }

QLIsometry iso(long long shift, bool reverses, std::vector<int> internal) {
  return {shift, reverses, Permutation(std::move(internal))};
}

QLIsometry power(const QLIsometry& g, int m) {
  QLIsometry out = QLIsometry::identity(g.internal.size());
  for (int i = 0; i < m; ++i) out = out * g;
  return out;
}

// Translation length from distances in a finite window: with m a multiple of
// every internal order in play, d(x, g^{2m} x) - d(x, g^m x) = m |h|.
long long window_translation(const PeriodicQuasiLine& ql, const QLIsometry& g, int m) {
  const QLIsometry gm = power(g, m), g2m = power(g, 2 * m);
  const auto y = gm({0, 0}), z = g2m({0, 0});
  const long long lo = std::min({0LL, y.first, z.first}) - 4, hi = std::max({0LL, y.first, z.first}) + 4;
  FiniteGraph w = ql.window(static_cast<int>(lo), static_cast<int>(hi));
  const int p = ql.period_size();
  auto id = [&](std::pair<long long, int> v) { return static_cast<int>((v.first - lo) * p + v.second); };
  const long long diff = w.distance(id({0, 0}), id(z)) - w.distance(id({0, 0}), id(y));
  return (g.shift > 0 ? 1 : -1) * diff / m;
}

}  // namespace

TEST_CASE("periodic quasi-lines") {
  auto line = PeriodicQuasiLine::line();
  CHECK(line.period_size() == 1);
  CHECK(line.window(0, 4).edge_count() == 4);
  CHECK(line.distance({0, 0}, {-7, 0}) == 7);
  CHECK(ladder().distance({0, 0}, {3, 1}) == 4);
  CHECK(doubled_line().distance({0, 0}, {2, 1}) == 5);

  CHECK_THROWS_AS(PeriodicQuasiLine(FiniteGraph(2), {}), InputError);
  CHECK_THROWS_AS(PeriodicQuasiLine(FiniteGraph(2), {{0, 0}, {0, 1}}), InputError);
  CHECK_THROWS_AS(PeriodicQuasiLine(FiniteGraph(2), {{0, 2}}), InputError);
  // Disconnected: two parallel lines with nothing between them.
  CHECK_THROWS_AS(PeriodicQuasiLine(FiniteGraph(2), {{0, 0}, {1, 1}}), ContractError);
  // Triangles are not median.
  CHECK_THROWS_AS(PeriodicQuasiLine(graphs::complete_graph(3), {{0, 0}}), ContractError);
}

TEST_CASE("isometries compose and validate") {
  auto ql = ladder();
  QLIsometry glide = iso(1, false, {1, 0});
  QLIsometry flip = iso(3, true, {0, 1});
  validate_isometry(ql, glide);
  validate_isometry(ql, flip);
  CHECK(glide * glide == iso(2, false, {0, 1}));
  CHECK(flip * flip == QLIsometry::identity(2));
  CHECK(glide * glide.inverse() == QLIsometry::identity(2));
  CHECK(flip * glide == iso(2, true, {1, 0}));
  std::pair<long long, int> x{5, 1};
  CHECK((flip * glide)(x) == flip(glide(x)));

  // Every valid isometry is an automorphism of a window that contains its
  // image.
  for (const QLIsometry& g : {glide, flip, iso(-2, true, {1, 0})}) {
    const FiniteGraph w = ql.window(-10, 10);
    const FiniteGraph inner = ql.window(-4, 4);
    for (const auto& e : inner.edges()) {
      auto image = [&](int v) {
        auto q = g({v / 2 - 4, v % 2});
        return static_cast<int>((q.first + 10) * 2 + q.second);
      };
      CHECK(w.adjacent(image(e.u), image(e.v)));
    }
  }

  auto dl = doubled_line();
  CHECK_THROWS_AS(validate_isometry(dl, iso(0, false, {1, 0})), ContractError);  // not a gluing map
  validate_isometry(dl, iso(0, true, {1, 0}));  // reflection through an edge midpoint
  CHECK_THROWS_AS(validate_isometry(dl, iso(0, false, {0})), ContractError);
  CHECK_THROWS_AS(validate_isometry(PeriodicQuasiLine(graphs::path_graph(3), {{0, 0}}), iso(0, false, {1, 0, 2})),
                  ContractError);
}

TEST_CASE("translation data") {
  auto line = PeriodicQuasiLine::line();
  auto id = translation_data(line, QLIsometry::identity(1));
  CHECK(id.sigma == 1);
  CHECK(id.h == 0);
  auto shift = translation_data(line, iso(1, false, {0}));
  CHECK(shift.sigma == 1);
  CHECK(shift.h == 1);
  CHECK(translation_data(line, iso(-3, false, {0})).h == -3);
  auto reflection = translation_data(line, iso(0, true, {0}));
  CHECK(reflection.sigma == -1);
  CHECK(reflection.h == 0);

  auto ql = ladder();
  CHECK(translation_data(ql, iso(2, false, {0, 1})).h == 2);
  CHECK(translation_data(ql, iso(1, false, {1, 0})).h == 1);
  CHECK(translation_data(ql, iso(0, false, {1, 0})).h == 0);
  CHECK(translation_data(doubled_line(), iso(1, false, {0, 1})).h == 2);
  CHECK(translation_data(doubled_line(), iso(-1, false, {0, 1})).h == -2);
}

TEST_CASE("translation lengths match finite windows") {
  std::vector<std::pair<PeriodicQuasiLine, std::vector<QLIsometry>>> cases{
      {PeriodicQuasiLine::line(), {iso(1, false, {0}), iso(-2, false, {0}), iso(5, false, {0})}},
      {ladder(), {iso(1, false, {1, 0}), iso(3, false, {0, 1}), iso(-1, false, {1, 0})}},
      {doubled_line(), {iso(2, false, {0, 1}), iso(-3, false, {0, 1})}},
      // A strip of squares with a pendant vertex in each period.
      {PeriodicQuasiLine(FiniteGraph::from_pairs(3, {{0, 1}, {1, 2}}), {{0, 0}, {1, 1}}),
       {iso(1, false, {0, 1, 2}), iso(-2, false, {0, 1, 2})}},
  };
  for (const auto& [ql, isos] : cases) {
    for (const QLIsometry& g : isos) {
      auto t = translation_data(ql, g);
      CHECK(t.h == window_translation(ql, g, 12));
      CHECK(t.iterations <= 2 * ql.period_size() + 4);
    }
  }
}

TEST_CASE("the two-reflection action on the line") {
  auto line = PeriodicQuasiLine::line();
  std::map<std::string, QLIsometry> gens{{"a", iso(0, true, {0})}, {"b", iso(1, true, {0})}};
  auto m = dinfty_from_quasiline_action(line, gens);
  CHECK(m.ok());
  CHECK(m.homomorphism);
  CHECK(m.cocycle);
  CHECK(m.conjugation);
  CHECK(m.additive);
  CHECK(m.g0_square_trivial);
  CHECK(m.infinite_image);
  CHECK_FALSE(m.translations_only);
  REQUIRE(m.g0.has_value());
  CHECK(*m.g0 == std::vector<int>{1});
  CHECK(m.words == 161);
  CHECK(m.pairs_checked == 161 * 161);
  CHECK(m.conjugations_checked > 0);
  CHECK(m.phi["a"] == DinftyElement{0, -1});
  CHECK(m.phi["b"] == DinftyElement{1, -1});

  // On the line every isometry is x -> sigma x + shift, and phi must be that
  // affine map; in particular it is injective.
  std::vector<std::vector<int>> words{{}};
  for (int len = 0; len < 4; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) != len) continue;
      for (int x : {1, -1, 2, -2}) {
        if (!w.empty() && w.back() == -x) continue;
        auto v = w;
        v.push_back(x);
        next.push_back(v);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  std::set<std::pair<long long, int>> images;
  std::set<std::pair<long long, int>> elements;
  for (const auto& w : words) {
    DinftyElement image{0, 1};
    QLIsometry value = QLIsometry::identity(1);
    for (int x : w) {
      const QLIsometry& g = gens.at(x == 1 || x == -1 ? "a" : "b");
      const DinftyElement e = m.phi.at(x == 1 || x == -1 ? "a" : "b");
      image = image * (x > 0 ? e : e.inverse());
      value = value * (x > 0 ? g : g.inverse());
    }
    CHECK(image == DinftyElement{value.shift, value.reverses ? -1 : 1});
    images.insert({boost::multiprecision::numerator(image.shift).convert_to<long long>(), image.sign});
    elements.insert({value.shift, value.reverses ? -1 : 1});
  }
  CHECK(images.size() == elements.size());
}

TEST_CASE("pure shifts land in the translations") {
  auto m = dinfty_from_quasiline_action(PeriodicQuasiLine::line(), {{"t", iso(1, false, {0})}});
  CHECK(m.ok());
  CHECK(m.translations_only);
  CHECK_FALSE(m.g0.has_value());
  CHECK(m.phi["t"] == DinftyElement{1, 1});
  CHECK(m.conjugations_checked == 0);
}

TEST_CASE("ladder actions") {
  auto ql = ladder();
  std::map<std::string, QLIsometry> gens{{"g", iso(1, false, {1, 0})}, {"r", iso(0, true, {1, 0})}};
  auto m = dinfty_from_quasiline_action(ql, gens);
  CHECK(m.ok());
  CHECK(m.phi["g"] == DinftyElement{1, 1});
  CHECK(m.phi["r"].sign == -1);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> shift(-3, 3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<std::string, QLIsometry> random_gens;
    for (std::string label : {"x", "y"}) {
      random_gens[label] = iso(shift(rng), coin(rng), coin(rng) ? std::vector<int>{0, 1} : std::vector<int>{1, 0});
    }
    random_gens["z"] = iso(1, false, {0, 1});
    auto r = dinfty_from_quasiline_action(ql, random_gens, 3);
    CHECK(r.ok());
  }
}

TEST_CASE("bounded actions are rejected") {
  CHECK_THROWS_AS(dinfty_from_quasiline_action(ladder(), {{"s", iso(0, false, {1, 0})}}), ContractError);
  CHECK_THROWS_AS(dinfty_from_quasiline_action(PeriodicQuasiLine::line(), {{"a", iso(0, true, {0})}}),
                  ContractError);
  CHECK_THROWS_AS(dinfty_from_quasiline_action(PeriodicQuasiLine::line(), {}), ContractError);
  CHECK_THROWS_AS(dinfty_from_quasiline_action(ladder(), {{"bad", iso(0, false, {0})}}), ContractError);
}
