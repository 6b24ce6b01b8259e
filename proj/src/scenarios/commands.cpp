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

#include "medtk/scenarios/commands.hpp"

#include <sstream>

#include "medtk/groups/dinfty.hpp"
#include "medtk/median/cubes.hpp"
#include "medtk/median/median_graph.hpp"

namespace medtk::scenarios {

ScenarioReport check_median_report(const graphs::FiniteGraph& g) {
  ScenarioReport r;
  r.scenario = "check-median";
  r.parameters["vertices"] = g.vertex_count();
  r.parameters["edges"] = g.edge_count();
  const std::string anchor = "every triple of vertices has exactly one median";
  auto certified = median::certify_median(g, std::max(median::kDefaultMedianCap, g.vertex_count()));
  if (auto* f = std::get_if<median::MedianFailure>(&certified)) {
    Json data{{"failure", f->describe()}};
    if (f->triple[0] >= 0) data["triple"] = f->triple;
    if (f->kind == median::MedianFailure::Kind::kNoMedian || f->kind == median::MedianFailure::Kind::kManyMedians) {
      data["median_count"] = f->median_count;
    }
    r.add("graph is median", anchor, Verdict::kFail, std::move(data));
    return r;
  }
  const auto& mg = std::get<median::MedianGraph>(certified);
  auto dim = median::cubical_dimension(mg);
  r.add("graph is median", anchor, Verdict::kPass,
        {{"hyperplanes", mg.hyperplane_count()},
         {"cubical_dimension", dim.dimension},
         {"cube_witness", dim.vertices}});
  return r;
}

ScenarioReport fw_abelian_report(const groups::Presentation& pres, int n) {
  ScenarioReport r;
  r.scenario = "fw-abelian";
  r.parameters["n"] = n;
  r.parameters["generators"] = pres.generator_count();
  r.parameters["relators"] = pres.relators().size();
  auto v = groups::fwn_virtually_abelian(pres, n);
  r.resources["low_index_classes"] = v.subgroup_indices.size();
  r.add_bool("FW_" + std::to_string(n) + " by the virtually abelian criterion",
             "a virtually abelian group has FW_n iff no subgroup of index at most n maps to D-infinity with "
             "infinite image (virtually abelian is caller-asserted)",
             v.holds, io::fwn_verdict_to_json(pres, v));
  return r;
}

Json cubulation_json(const wallspace::Wallspace& ws) {
  auto cub = wallspace::cubulate(ws);
  Json orientations = Json::array();
  const std::size_t k = ws.wall_count();
  for (std::uint32_t o : cub.orientations) {
    std::string bits;
    for (std::size_t i = 0; i < k; ++i) bits += (o >> (k - 1 - i) & 1) ? '1' : '0';
    orientations.push_back(bits);
  }
  return Json{{"graph", io::graph_to_json(cub.graph.graph())},
              {"point_vertex", cub.point_vertex},
              {"orientations", std::move(orientations)},
              {"non_principal_dropped", cub.dropped_orientations}};
}

std::string cubulation_text(const Json& c) {
  std::ostringstream out;
  const Json& g = c.at("graph");
  out << "cubulation: " << g.at("n").get<int>() << " vertices, " << g.at("edges").size() << " edges\n";
  out << "point -> vertex:";
  for (const auto& v : c.at("point_vertex")) out << " " << v.get<int>();
  out << "\n";
  out << "orientations:\n";
  int i = 0;
  for (const auto& o : c.at("orientations")) out << "  " << i++ << ": " << o.get<std::string>() << "\n";
  out << "edges:";
  for (const auto& e : g.at("edges")) out << " " << e[0].get<int>() << "-" << e[1].get<int>();
  out << "\n";
  return out.str();
}

}  // namespace medtk::scenarios
