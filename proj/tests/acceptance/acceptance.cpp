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

// Acceptance suite: one PASS/FAIL line per criterion, with indented detail
// lines. Exits non-zero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "medtk/graphs/builders.hpp"
#include "medtk/graphs/symmetry.hpp"
#include "medtk/groups/coxeter.hpp"
#include "medtk/median/median_graph.hpp"
#include "medtk/scenarios/corpus.hpp"
#include "medtk/scenarios/scenarios.hpp"
#include "medtk/topology/complex.hpp"
#include "medtk/topology/homology.hpp"
#include "medtk/wallspace/wallspace.hpp"

using namespace medtk;
using namespace medtk::scenarios;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void require(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    details_.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }

  bool finish() const {
    std::cout << (ok_ ? "PASS" : "FAIL") << " criterion " << number_ << ": " << title_ << "\n";
    for (const auto& d : details_) std::cout << "       " << d << "\n";
    return ok_;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

const CheckRecord* find_check(const ScenarioReport& r, const std::string& needle) {
  for (const auto& c : r.checks) {
    if (c.name.find(needle) != std::string::npos) return &c;
  }
  return nullptr;
}

bool check_passed(const ScenarioReport& r, const std::string& needle) {
  const CheckRecord* c = find_check(r, needle);
  return c != nullptr && c->verdict == Verdict::kPass;
}

std::string reduced_betti_text(const topology::HomologyProfile& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.reduced_betti.size(); ++i) s += (i ? "," : "") + std::to_string(h.reduced_betti[i]);
  return s + ")";
}

bool sphere_homology(const topology::HomologyProfile& h, int dim) {
  if (static_cast<int>(h.reduced_betti.size()) != dim + 1) return false;
  for (int i = 0; i <= dim; ++i) {
    if (h.reduced_betti[i] != (i == dim ? 1u : 0u)) return false;
    if (!h.torsion[i].empty()) return false;
  }
  return true;
}

// Consistent orientations of a wallspace by exhaustive choice of sides,
// joined when they differ on exactly one wall.
graphs::FiniteGraph brute_force_cubulation(const wallspace::Wallspace& ws) {
  const int k = static_cast<int>(ws.wall_count());
  std::vector<Bitset> sides[2];
  for (const Bitset& w : ws.walls()) {
    sides[0].push_back(w);
    sides[1].push_back(w.complement());
  }
  std::vector<unsigned> consistent;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k && ok; ++j) {
        ok = sides[mask >> i & 1][i].intersects(sides[mask >> j & 1][j]);
      }
    }
    if (ok) consistent.push_back(mask);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < consistent.size(); ++a) {
    for (std::size_t b = a + 1; b < consistent.size(); ++b) {
      if (std::popcount(consistent[a] ^ consistent[b]) == 1) {
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return graphs::FiniteGraph::from_pairs(static_cast<int>(consistent.size()), edges);
}

std::string strip_line_comments(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto pos = line.find("//");
    out += (pos == std::string::npos ? line : line.substr(0, pos)) + "\n";
  }
  return out;
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

bool criterion1() {
  Criterion c(1, "duality round-trip on the generated median corpus");
  auto t0 = Clock::now();
  auto r = run_scenario("duality", {{"corpus", "full"}});
  double secs = seconds_since(t0);
  const CheckRecord* iso = find_check(r, "isomorphic to X");
  c.require(iso && iso->verdict == Verdict::kPass,
            "cubulate(walls_of_median(X)) isomorphic to X for " +
                (iso ? iso->data["graphs"].dump() : std::string("?")) + " graphs");
  c.require(check_passed(r, "principal"), "no non-principal orientations");
  c.require(r.resources["corpus_graphs"] == 201 + 15 + 5 + 50, "corpus: 201 trees, 15 grids, Q0..Q4, 50 convex subgraphs of Q6");
  c.require(secs < 60.0, "runtime under 60 s");
  return c.finish();
}

bool criterion2() {
  Criterion c(2, "cubulation matches brute-force orientation enumeration");
  auto corpus = wallspace_corpus(5, 10, 10000);
  std::size_t mismatches = 0;
  std::size_t vertices = 0;
  for (const auto& ws : corpus.items) {
    auto cub = wallspace::cubulate(ws);
    auto brute = brute_force_cubulation(ws);
    vertices += static_cast<std::size_t>(brute.vertex_count());
    bool same = cub.graph.vertex_count() == brute.vertex_count() &&
                graphs::graph_isomorphic(cub.graph.graph(), brute).has_value();
    mismatches += same ? 0 : 1;
  }
  c.require(!corpus.items.empty() && !corpus.capped,
            std::to_string(corpus.items.size()) + " wallspaces on <= 5 points with <= 10 walls, up to symmetry, cap 10^4");
  c.require(mismatches == 0, std::to_string(mismatches) + " mismatches over " + std::to_string(vertices) + " orientations");
  return c.finish();
}

bool criterion3() {
  Criterion c(3, "FW_n reproduction for affine Coxeter groups");
  auto t0 = Clock::now();
  for (const char* n : {"2", "3"}) {
    auto r = run_scenario("affine-coxeter", {{"n", n}, {"limit", "10000"}});
    c.require(check_passed(r, std::string("FW_") + n + " criterion"), std::string("A~") + n + " satisfies FW_" + n);
    if (std::string(n) == "3") {
      const CheckRecord* fw = find_check(r, "FW_3 criterion");
      if (fw && fw->verdict == Verdict::kFail) {
        c.require(false, "A~3 witness: index " + fw->data["failing_subgroup_index"].dump() + " subgroup, certificate " +
                             fw->data["witness_in_group_text"].dump());
      }
      for (const char* q : {"x=y=1", "z=1", "x=yz"}) {
        const CheckRecord* d4 = find_check(r, std::string("quotient ") + q + " is finite");
        std::string detail = d4 == nullptr ? "missing"
                             : d4->data.contains("order") ? "order " + d4->data["order"].dump()
                                                          : d4->data.value("finiteness", std::string("unknown"));
        c.require(d4 && d4->verdict == Verdict::kPass, std::string("D4 quotient ") + q + " finite within 10^4 cosets (" + detail + ")");
      }
    }
    for (const char* control : {"A~1 = D-infinity fails FW_1", "Z^2 fails FW_1", "A~2 fails FW_3"}) {
      if (std::string(n) == "2") c.require(check_passed(r, control), std::string("control: ") + control + " with a verified witness");
    }
  }
  c.require(seconds_since(t0) < 300.0, "runtime under 5 min");
  return c.finish();
}

bool criterion4() {
  Criterion c(4, "sphere homology of joins and of the nerve model");
  auto t0 = Clock::now();
  for (int n = 2; n <= 4; ++n) {
    auto parts = std::vector<graphs::FiniteGraph>(n, graphs::edgeless_graph(2));
    auto h = topology::homology(topology::flag_completion(graphs::build_join(parts)));
    c.require(sphere_homology(h, n - 1), std::to_string(n) + "-fold join of K2-bar: reduced Betti " + reduced_betti_text(h) +
                                             ", expected S^" + std::to_string(n - 1));
  }
  for (int d = 2; d <= 4; ++d) {
    auto r = run_scenario("gamma-rs", {{"r", std::to_string(std::max(d, 3))}, {"s", std::to_string(d - 1)}});
    const CheckRecord* sphere = find_check(r, "nerve model on Q_" + std::to_string(d));
    std::string got = sphere ? "top non-trivial reduced homology in dimension " + sphere->data["top_nontrivial_dimension"].dump()
                             : "missing";
    c.require(sphere && sphere->verdict == Verdict::kPass,
              "nerve model on Q_" + std::to_string(d) + ": expected S^" + std::to_string(d - 1) + ", " + got);
  }
  c.require(seconds_since(t0) < 30.0, "runtime under 30 s");
  return c.finish();
}

bool criterion5() {
  Criterion c(5, "hypothesis suite for cubulable groups with FW");
  for (const char* n : {"2", "3"}) {
    auto r = run_scenario("cubulable-fw", {{"n", n}, {"q", "5"}});
    const std::string tag = std::string("n=") + n + ", q=5: ";
    c.require(check_passed(r, "diameter 2"), tag + "diameter 2");
    c.require(check_passed(r, "transitive on distance-2 pairs"), tag + "distance-2 transitivity under Isom(Gamma)");
    c.require(check_passed(r, "Z/5 has FW_"), tag + "fw_plus_cyclic(5, " + std::to_string(std::stoi(n) - 1) + ")");
    c.require(check_passed(r, "flag completion"), tag + "nontrivial_in_dim(flag completion, n-1)");
  }
  c.require(groups::fw_plus_cyclic(5, 1) && groups::fw_plus_cyclic(5, 2), "fw_plus_cyclic(5, 1) and (5, 2) true");
  c.require(!groups::fw_plus_cyclic(4, 2), "fw_plus_cyclic(4, 2) false");
  return c.finish();
}

bool criterion6() {
  Criterion c(6, "graph-product complex for K2 with Z/2 and Z/3");
  for (const auto& [q, vertices] : std::vector<std::pair<std::string, int>>{{"2", 9}, {"3", 16}}) {
    auto r = run_scenario("graph-product", {{"gamma", "k2"}, {"q", q}});
    const std::string tag = "K2, Z/" + q + ": ";
    const CheckRecord* med = find_check(r, "full coset complex is median");
    c.require(med && med->verdict == Verdict::kPass && med->data["vertices"] == vertices,
              tag + std::to_string(vertices) + " vertices, median");
    c.require(check_passed(r, "cubical dimension equals clique"), tag + "cubical dimension 2");
    c.require(check_passed(r, "isomorphic to the coset complex"), tag + "isomorphic to the singleton wall-system cubulation");
    c.require(check_passed(r, "stabilisers"), tag + "element stabilisers divide |Isom(K2)| = 2");
    c.require(check_passed(r, "relators"), tag + "relators act as identity permutations");
  }
  return c.finish();
}

bool criterion7() {
  Criterion c(7, "fixed set of a transitive coordinate action on Q_k");
  for (int k = 2; k <= 4; ++k) {
    auto r = run_scenario("cube-fix", {{"k", std::to_string(k)}});
    c.require(r.overall() == Verdict::kPass,
              "k=" + std::to_string(k) + ": Fix = {0,1}, hull = Q_k, not convex");
  }
  return c.finish();
}

bool criterion8() {
  Criterion c(8, "D-infinity morphism from the quasi-line action");
  auto r = run_scenario("quasiline-dinfty", {});
  const CheckRecord* hom = find_check(r, "is a morphism");
  c.require(hom && hom->verdict == Verdict::kPass && hom->data["pairs"] == 161 * 161,
            "homomorphism law on all 161^2 pairs of words of length <= 4");
  c.require(check_passed(r, "infinite image"), "infinite image");
  c.require(check_passed(r, "h(g0 g g0^-1)"), "h(g0 g g0^-1) = -h(g)");
  c.require(check_passed(r, "pure shift"), "pure shift maps to (1, +1) in the translations");
  return c.finish();
}

bool criterion9(const std::string& cli) {
  Criterion c(9, "exact arithmetic and byte-identical reports");
  const std::regex floating(R"(\b(float|double)\b|<cmath>|std::(sqrt|pow|exp|log)\b)");
  std::size_t files = 0;
  for (const char* module : {"groups", "topology", "wallspace", "exact"}) {
    for (const auto& root : {std::filesystem::path(MEDTK_SOURCE_DIR) / "src" / module,
                             std::filesystem::path(MEDTK_SOURCE_DIR) / "include" / "medtk" / module}) {
      if (!std::filesystem::exists(root)) continue;
      for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        ++files;
        std::string code = strip_line_comments(ss.str());
        if (std::regex_search(code, floating)) c.require(false, "floating point in " + entry.path().string());
      }
    }
  }
  c.require(files > 0, "no floating-point types in " + std::to_string(files) + " groups/topology/wallspace/exact sources");

  bool identical = true;
  for (const auto& name : scenario_names()) {
    auto a = io::dump(report_to_json(run_scenario(name, {})));
    auto b = io::dump(report_to_json(run_scenario(name, {})));
    identical = identical && a == b;
  }
  c.require(identical, "in-process reports identical across two runs of every scenario");
  bool cli_identical = true;
  for (const std::string args : {"affine-coxeter --n 3 --format json", "duality --corpus full --format json",
                                 "graph-product --q 3 --format json", "gamma-rs --r 4 --s 3"}) {
    auto a = run_command(cli + " " + args);
    auto b = run_command(cli + " " + args);
    cli_identical = cli_identical && !a.empty() && a == b;
  }
  c.require(cli_identical, "medtk output identical across two consecutive runs");
  return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : MEDTK_CLI_PATH;
  bool ok = true;
  ok = criterion1() && ok;
  ok = criterion2() && ok;
  ok = criterion3() && ok;
  ok = criterion4() && ok;
  ok = criterion5() && ok;
  ok = criterion6() && ok;
  ok = criterion7() && ok;
  ok = criterion8() && ok;
  ok = criterion9(cli) && ok;
  std::cout << (ok ? "all criteria pass" : "some criteria fail") << "\n";
  return ok ? 0 : 1;
}
