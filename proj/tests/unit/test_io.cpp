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

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "medtk/errors.hpp"
#include "medtk/graphs/builders.hpp"
#include "medtk/groups/coxeter.hpp"
#include "medtk/io/json_io.hpp"
#include "medtk/topology/homology.hpp"

using namespace medtk;
using namespace medtk::io;

TEST_CASE("graph json") {
  auto g = graphs::build_hypercube(3);
  Json j = graph_to_json(g);
  CHECK(j["n"] == 8);
  CHECK(j["edges"].size() == 12);
  CHECK(j["edges"][0] == Json::array({0, 1}));
  CHECK(graph_from_json(j) == g);
  // Unsorted input edges come back sorted.
  auto h = graph_from_json(Json::parse(R"({"n": 3, "edges": [[2, 1], [0, 1]]})"));
  CHECK(dump(graph_to_json(h)) == dump(Json::parse(R"({"n": 3, "edges": [[0, 1], [1, 2]]})")));
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 5]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": "two", "edges": []})")), InputError);
}

TEST_CASE("wallspace json") {
  auto ws = wallspace_from_json(Json::parse(R"({"points": 4, "walls": [[1, 2, 3], [0, 1]]})"));
  CHECK(ws.wall_count() == 2);
  Json j = wallspace_to_json(ws);
  CHECK(j["walls"][0] == Json::array({0}));
  CHECK(j["walls"][1] == Json::array({0, 1}));
  CHECK(wallspace_to_json(wallspace_from_json(j)) == j);
  CHECK_THROWS_AS(wallspace_from_json(Json::parse(R"({"points": 2, "walls": [[3]]})")), InputError);
  CHECK_THROWS_AS(wallspace_from_json(Json::parse(R"({"points": 2, "walls": [[0, 1]]})")), InputError);
}

TEST_CASE("presentation json") {
  auto p = groups::lattice_by_d4();
  Json j = presentation_to_json(p);
  auto q = presentation_from_json(j);
  CHECK(q.relators() == p.relators());
  CHECK(q.names() == p.names());
  auto r = presentation_from_json(Json::parse(R"({"generators": 2, "relators": [[1, 1], [1, -2, -1, 2]]})"));
  CHECK(r.generator_count() == 2);
  CHECK(r.relators().size() == 2);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"generators": 1, "relators": [[2]]})")), InputError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"generators": 1, "relators": [[1]], "names": []})")),
                  InputError);
}

TEST_CASE("complex and homology json") {
  topology::SimplicialComplex sc(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  Json j = complex_to_json(sc);
  CHECK(complex_from_json(j) == sc);
  Json h = homology_to_json(topology::homology(sc));
  CHECK(h["betti"] == Json::array({1, 1}));
  CHECK(h["reduced_betti"] == Json::array({0, 1}));
  CHECK(h["torsion"] == Json::array({Json::array(), Json::array()}));
}

TEST_CASE("graph product spec json") {
  auto [spec, orders] = spec_from_json(Json::parse(R"({"gamma": {"n": 2, "edges": [[0, 1]]}, "orders": {"0": 2, "1": 3}})"));
  CHECK(orders == std::vector<int>{2, 3});
  CHECK(spec.groups[1].order() == 3);
  CHECK(spec_to_json(spec, orders)["orders"]["1"] == 3);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"gamma": {"n": 2, "edges": []}, "orders": {"0": 2}})")), InputError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"gamma": {"n": 1, "edges": []}, "orders": {"x": 2}})")), InputError);
  auto cx = graphprod::build_coset_complex(spec, std::nullopt);
  Json labels = coset_labels_to_json(cx);
  CHECK(labels.size() == static_cast<std::size_t>(cx.graph.vertex_count()));
  CHECK(labels[0]["representative"].empty());
}

TEST_CASE("quasi-line json") {
  Json j = Json::parse(R"({"quasiline": {"period": {"n": 1, "edges": []}, "gluing": [[0, 0]]},
                           "generators": {"a": {"shift": 0, "reverses": true, "internal": [0]},
                                          "b": {"shift": 1, "reverses": true, "internal": [0]}}})");
  auto [ql, gens] = quasiline_action_from_json(j);
  CHECK(ql.period_size() == 1);
  CHECK(gens.size() == 2);
  CHECK(gens.at("b").shift == 1);
  CHECK(isometry_to_json(gens.at("a")) == j["generators"]["a"]);
  CHECK(quasiline_to_json(ql) == j["quasiline"]);
  CHECK_THROWS_AS(isometry_from_json(Json::parse(R"({"shift": 0, "reverses": 1, "internal": [0]})")), InputError);
  CHECK_THROWS_AS(isometry_from_json(Json::parse(R"({"shift": 0, "reverses": false, "internal": [1, 1]})")),
                  InputError);
}

TEST_CASE("verdict json carries the witness") {
  // Z^2 fails at n = 1 with a translation witness.
  groups::Presentation z2(2, {{1, 2, -1, -2}});
  auto v = groups::fwn_virtually_abelian(z2, 1);
  Json j = fwn_verdict_to_json(z2, v);
  CHECK(j["holds"] == false);
  CHECK(j.contains("witness"));
  CHECK(j["witness"]["certificate_translation"] != 0);
}

TEST_CASE("files") {
  const std::string path = "medtk_test_io.json";
  {
    std::ofstream out(path);
    out << "{\"n\": 2, \"edges\": [[0, 1]]}";
  }
  CHECK(graph_from_json(read_json_file(path)).edge_count() == 1);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(read_json_file(path), InputError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("/nonexistent/medtk.json"), InputError);
}
