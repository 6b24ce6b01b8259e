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
#include <string_view>
#include <vector>

#include "medtk/io/json_io.hpp"

namespace medtk::scenarios {

using io::Json;

enum class Verdict { kPass, kFail, kInconclusive };

std::string_view verdict_name(Verdict v);

// Exit status for a verdict: 0 pass, 1 fail, 2 inconclusive.
int exit_code(Verdict v);

struct CheckRecord {
  std::string name;
  std::string anchor;  // the mathematical statement the check reproduces
  Verdict verdict = Verdict::kInconclusive;
  Json data = Json::object();
};

struct ScenarioReport {
  std::string scenario;
  Json parameters = Json::object();
  std::vector<CheckRecord> checks;
  // Deterministic work counters only (no timings), so reports stay byte-identical.
  Json resources = Json::object();

  CheckRecord& add(std::string name, std::string anchor, Verdict verdict, Json data = Json::object());
  CheckRecord& add_bool(std::string name, std::string anchor, bool ok, Json data = Json::object());

  // Pass iff every check passes; any failure makes it fail; otherwise (some
  // check inconclusive, or no checks at all) inconclusive.
  Verdict overall() const;
};

Json report_to_json(const ScenarioReport& r);
std::string report_to_text(const ScenarioReport& r);

}  // namespace medtk::scenarios
