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

#pragma once

#include <map>
#include <string>
#include <utility>

#include "json.hpp"
#include "medtk/graphprod/coset_complex.hpp"
#include "medtk/graphprod/finite_group.hpp"
#include "medtk/graphs/graph.hpp"
#include "medtk/groups/dinfty.hpp"
#include "medtk/groups/presentation.hpp"
#include "medtk/quasiline/quasiline.hpp"
#include "medtk/quasimedian/qm_ball.hpp"
#include "medtk/topology/complex.hpp"
#include "medtk/topology/homology.hpp"
#include "medtk/wallspace/wallspace.hpp"

// Readers throw InputError with the offending field named; writers emit keys
// in a fixed order, so equal inputs give byte-identical text.
namespace medtk::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

// {"n": .., "edges": [[i, j], ...]}, edges sorted.
Json graph_to_json(const graphs::FiniteGraph& g);
graphs::FiniteGraph graph_from_json(const Json& j);

// {"points": .., "walls": [[...], ...]}, each wall by its side containing 0.
Json wallspace_to_json(const wallspace::Wallspace& ws);
wallspace::Wallspace wallspace_from_json(const Json& j);

// {"generators": k, "relators": [[+i, -j, ...], ...]}, optional "names".
Json presentation_to_json(const groups::Presentation& p);
groups::Presentation presentation_from_json(const Json& j);

// {"n": .., "facets": [[...], ...]}
Json complex_to_json(const topology::SimplicialComplex& sc);
topology::SimplicialComplex complex_from_json(const Json& j);
Json homology_to_json(const topology::HomologyProfile& h);

// {"gamma": <graph>, "orders": {"0": q0, ...}}; cyclic vertex groups only.
Json spec_to_json(const graphprod::GraphProductSpec& spec, const std::vector<int>& orders);
std::pair<graphprod::GraphProductSpec, std::vector<int>> spec_from_json(const Json& j);
// Parallel label file for a coset complex: one entry per vertex with the
// representative as [vertex, element] syllables and the clique.
Json coset_labels_to_json(const graphprod::CosetComplex& cx);

Json coset_report_to_json(const quasimedian::CosetReport& r);

Json dinfty_element_to_json(const groups::DinftyElement& e);
Json dinfty_witness_to_json(const groups::Presentation& p, const groups::DinftyWitness& w);
Json fwn_verdict_to_json(const groups::Presentation& p, const groups::FwnVerdict& v);

// {"period": <graph>, "gluing": [[a, b], ...]}
Json quasiline_to_json(const quasiline::PeriodicQuasiLine& ql);
quasiline::PeriodicQuasiLine quasiline_from_json(const Json& j);
// {"shift": s, "reverses": bool, "internal": [...]}
Json isometry_to_json(const quasiline::QLIsometry& g);
quasiline::QLIsometry isometry_from_json(const Json& j);
// {"quasiline": .., "generators": {"label": <isometry>, ...}}
std::pair<quasiline::PeriodicQuasiLine, std::map<std::string, quasiline::QLIsometry>> quasiline_action_from_json(
    const Json& j);

}  // namespace medtk::io
