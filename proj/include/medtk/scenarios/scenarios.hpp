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
#include <vector>

#include "medtk/scenarios/report.hpp"

namespace medtk::scenarios {

// Raw flag values keyed by flag name without dashes ("n", "limit", ...).
using Params = std::map<std::string, std::string>;

// Registered scenario names, in the order the CLI lists them.
const std::vector<std::string>& scenario_names();

// Flags each scenario understands.
const std::vector<std::string>& scenario_flags(const std::string& name);

// Runs a scenario. InputError for an unknown name, an unknown flag or a value
// out of range. Caps hit inside a check make that check inconclusive.
ScenarioReport run_scenario(const std::string& name, const Params& params);

}  // namespace medtk::scenarios
