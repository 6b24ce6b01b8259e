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

#include <string>

#include "medtk/graphs/graph.hpp"
#include "medtk/groups/presentation.hpp"
#include "medtk/scenarios/report.hpp"
#include "medtk/wallspace/wallspace.hpp"

namespace medtk::scenarios {

// Single-input commands, reported in the scenario format so that the exit
// code and both output formats follow the same rules.

// Pass when the graph certifies as median; the data carries hyperplane and
// cube counts, or the failure witness.
ScenarioReport check_median_report(const graphs::FiniteGraph& g);

// Pass when the group has FW_n by the virtually abelian criterion; a failure
// carries the verified D-infinity witness.
ScenarioReport fw_abelian_report(const groups::Presentation& pres, int n);

// The cubulation of a wallspace: graph JSON plus the point map and the
// orientation of each vertex (one 0/1 character per wall).
Json cubulation_json(const wallspace::Wallspace& ws);
std::string cubulation_text(const Json& cubulation);

}  // namespace medtk::scenarios
