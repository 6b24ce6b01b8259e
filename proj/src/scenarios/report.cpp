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

#include "medtk/scenarios/report.hpp"

#include <sstream>

namespace medtk::scenarios {
namespace {

constexpr std::size_t kTextValueWidth = 100;

std::string short_value(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.size() > kTextValueWidth) s = s.substr(0, kTextValueWidth - 3) + "...";
  return s;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return 0;
    case Verdict::kFail:
      return 1;
    case Verdict::kInconclusive:
      return 2;
  }
  return 2;
}

CheckRecord& ScenarioReport::add(std::string name, std::string anchor, Verdict verdict, Json data) {
  checks.push_back({std::move(name), std::move(anchor), verdict, std::move(data)});
  return checks.back();
}

CheckRecord& ScenarioReport::add_bool(std::string name, std::string anchor, bool ok, Json data) {
  return add(std::move(name), std::move(anchor), ok ? Verdict::kPass : Verdict::kFail, std::move(data));
}

Verdict ScenarioReport::overall() const {
  if (checks.empty()) return Verdict::kInconclusive;
  bool all_pass = true;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::kFail) return Verdict::kFail;
    all_pass = all_pass && c.verdict == Verdict::kPass;
  }
  return all_pass ? Verdict::kPass : Verdict::kInconclusive;
}

Json report_to_json(const ScenarioReport& r) {
  Json j;
  j["scenario"] = r.scenario;
  j["parameters"] = r.parameters;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"verdict", verdict_name(c.verdict)}, {"data", c.data}});
  }
  j["checks"] = std::move(checks);
  j["verdict"] = verdict_name(r.overall());
  j["resources"] = r.resources;
  return j;
}

std::string report_to_text(const ScenarioReport& r) {
  std::ostringstream out;
  out << "scenario: " << r.scenario << "\n";
  if (!r.parameters.empty()) {
    out << "parameters:";
    for (const auto& [k, v] : r.parameters.items()) out << " " << k << "=" << short_value(v);
    out << "\n";
  }
  for (const auto& c : r.checks) {
    out << "[" << verdict_name(c.verdict) << "] " << c.name << "\n";
    out << "    anchor: " << c.anchor << "\n";
    if (c.data.is_object()) {
      for (const auto& [k, v] : c.data.items()) out << "    " << k << ": " << short_value(v) << "\n";
    } else if (!c.data.is_null()) {
      out << "    " << short_value(c.data) << "\n";
    }
  }
  if (!r.resources.empty()) {
    out << "resources:";
    for (const auto& [k, v] : r.resources.items()) out << " " << k << "=" << short_value(v);
    out << "\n";
  }
  out << "verdict: " << verdict_name(r.overall()) << "\n";
  return out.str();
}

}  // namespace medtk::scenarios
