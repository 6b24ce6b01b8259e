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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "medtk/errors.hpp"
#include "medtk/io/json_io.hpp"
#include "medtk/scenarios/commands.hpp"
#include "medtk/scenarios/scenarios.hpp"

namespace {

using medtk::scenarios::Json;
using medtk::scenarios::ScenarioReport;

constexpr int kExitUsage = 2;

int emit(const ScenarioReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << medtk::io::dump(medtk::scenarios::report_to_json(r));
  } else {
    std::cout << medtk::scenarios::report_to_text(r);
  }
  return medtk::scenarios::exit_code(r.overall());
}

struct ScenarioCommand {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
};

int run(int argc, char** argv) {
  CLI::App app{"medtk: finite checks for median graphs, cubulations and fixed-point properties"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::map<std::string, ScenarioCommand> scenario_commands;
  for (const auto& name : medtk::scenarios::scenario_names()) {
    ScenarioCommand& cmd = scenario_commands[name];
    cmd.app = app.add_subcommand(name, "Run the " + name + " scenario");
    add_format(cmd.app);
    for (const auto& flag : medtk::scenarios::scenario_flags(name)) {
      cmd.app->add_option("--" + flag, cmd.values[flag], "Scenario parameter");
    }
  }

  std::string graph_path;
  auto* check_median = app.add_subcommand("check-median", "Certify a graph JSON file as a median graph");
  check_median->add_option("graph", graph_path, "Graph JSON file")->required();
  add_format(check_median);

  std::string walls_path;
  auto* cubulate = app.add_subcommand("cubulate", "Cubulate a wallspace JSON file");
  cubulate->add_option("walls", walls_path, "Wallspace JSON file")->required();
  add_format(cubulate);

  std::string pres_path;
  int n = 1;
  auto* fw = app.add_subcommand("fw-abelian", "FW_n criterion for a virtually abelian presentation");
  fw->add_option("--pres", pres_path, "Presentation JSON file")->required();
  fw->add_option("--n", n, "Cubical dimension n")->required()->check(CLI::Range(1, 8));
  add_format(fw);

  if (argc > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr) {
    std::cerr << "medtk: unknown scenario or command '" << argv[1] << "'\n";
    return kExitUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (auto& [name, cmd] : scenario_commands) {
      if (!cmd.app->parsed()) continue;
      medtk::scenarios::Params params;
      for (const auto& [flag, value] : cmd.values) {
        if (cmd.app->count("--" + flag) > 0) params[flag] = value;
      }
      return emit(medtk::scenarios::run_scenario(name, params), format);
    }
    if (check_median->parsed()) {
      auto g = medtk::io::graph_from_json(medtk::io::read_json_file(graph_path));
      return emit(medtk::scenarios::check_median_report(g), format);
    }
    if (cubulate->parsed()) {
      auto ws = medtk::io::wallspace_from_json(medtk::io::read_json_file(walls_path));
      Json c = medtk::scenarios::cubulation_json(ws);
      std::cout << (format == "json" ? medtk::io::dump(c) : medtk::scenarios::cubulation_text(c));
      return 0;
    }
    if (fw->parsed()) {
      auto pres = medtk::io::presentation_from_json(medtk::io::read_json_file(pres_path));
      return emit(medtk::scenarios::fw_abelian_report(pres, n), format);
    }
  } catch (const medtk::ResourceError& e) {
    std::cerr << "medtk: resource cap reached: " << e.what() << "\n";
    return kExitUsage;
  } catch (const medtk::InputError& e) {
    std::cerr << "medtk: invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const medtk::ContractError& e) {
    std::cerr << "medtk: invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "medtk: error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
