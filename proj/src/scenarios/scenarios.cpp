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

#include "medtk/scenarios/scenarios.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <optional>
#include <set>

#include "medtk/errors.hpp"
#include "medtk/graphprod/coset_complex.hpp"
#include "medtk/graphprod/vgp_action.hpp"
#include "medtk/graphs/builders.hpp"
#include "medtk/graphs/symmetry.hpp"
#include "medtk/groups/coxeter.hpp"
#include "medtk/groups/dinfty.hpp"
#include "medtk/groups/todd_coxeter.hpp"
#include "medtk/median/action.hpp"
#include "medtk/median/convexity.hpp"
#include "medtk/median/cubes.hpp"
#include "medtk/median/median_graph.hpp"
#include "medtk/quasiline/quasiline.hpp"
#include "medtk/quasimedian/qm_ball.hpp"
#include "medtk/quasimedian/wall_system.hpp"
#include "medtk/scenarios/corpus.hpp"
#include "medtk/topology/complex.hpp"
#include "medtk/topology/homology.hpp"
#include "medtk/wallspace/wallspace.hpp"

namespace medtk::scenarios {
namespace {

using graphs::FiniteGraph;
using graphs::Permutation;
using groups::Presentation;
using groups::Word;

class ParamReader {
 public:
  ParamReader(const Params& params, Json& record) : params_(params), record_(record) {}

  long long integer(const std::string& key, long long fallback, long long lo, long long hi) {
    long long value = fallback;
    if (auto it = params_.find(key); it != params_.end()) {
      const std::string& s = it->second;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("--" + key + " expects an integer, got '" + s + "'");
      }
    }
    if (value < lo || value > hi) {
      throw InputError("--" + key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    record_[key] = value;
    return value;
  }

  std::string choice(const std::string& key, const std::string& fallback, const std::vector<std::string>& allowed) {
    std::string value = fallback;
    if (auto it = params_.find(key); it != params_.end()) value = it->second;
    if (std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      throw InputError("--" + key + " must be one of: " + list);
    }
    record_[key] = value;
    return value;
  }

  std::optional<std::string> text(const std::string& key) {
    auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    record_[key] = it->second;
    return it->second;
  }

 private:
  const Params& params_;
  Json& record_;
};

// Runs `body`; a cap or an unsupported regime turns into one inconclusive check.
void guarded(ScenarioReport& r, const std::string& name, const std::string& anchor,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const ResourceError& e) {
    r.add(name, anchor, Verdict::kInconclusive, {{"resource_cap", e.what()}});
  } catch (const TruncationError& e) {
    r.add(name, anchor, Verdict::kInconclusive, {{"truncated", e.what()}});
  } catch (const UnsupportedRegime& e) {
    r.add(name, anchor, Verdict::kInconclusive, {{"unsupported", e.what()}});
  }
}

Json int_list(const std::vector<int>& v) { return Json(v); }

bool is_sphere(const topology::HomologyProfile& h, int dim) {
  if (dim < 0 || static_cast<std::size_t>(dim) >= h.reduced_betti.size()) return false;
  for (std::size_t i = 0; i < h.reduced_betti.size(); ++i) {
    if (h.reduced_betti[i] != (static_cast<int>(i) == dim ? 1u : 0u)) return false;
  }
  return std::all_of(h.torsion.begin(), h.torsion.end(), [](const auto& t) { return t.empty(); });
}

std::optional<int> top_nontrivial_dimension(const topology::HomologyProfile& h) {
  for (int d = static_cast<int>(h.reduced_betti.size()) - 1; d >= 0; --d) {
    if (h.reduced_nonzero(d)) return d;
  }
  return std::nullopt;
}

FiniteGraph join_of_pairs(int n) { return graphs::build_join(std::vector<FiniteGraph>(n, graphs::edgeless_graph(2))); }

// ---------------------------------------------------------------- affine-coxeter

void run_affine_coxeter(ScenarioReport& r, ParamReader& p) {
  const int n = static_cast<int>(p.integer("n", 2, 1, groups::kAffineCoxeterCap));
  const auto limit = static_cast<std::size_t>(p.integer("limit", groups::kDefaultCosetLimit, 1, 10'000'000));
  const Presentation pres = groups::build_affine_coxeter(n);
  const std::string tag = "A~" + std::to_string(n);

  const std::string lattice_name = "translation lattice of " + tag + " has index (n+1)!";
  const std::string lattice_anchor = "the affine Coxeter group of type A_n is Z^n extended by S_(n+1)";
  guarded(r, lattice_name, lattice_anchor, [&] {
    std::vector<Word> lattice;
    for (int i = 1; i <= n; ++i) lattice.push_back({i});
    groups::EnumerationStats stats;
    auto table = groups::todd_coxeter(pres, lattice, limit, &stats);
    long long fact = 1;
    for (int i = 2; i <= n + 1; ++i) fact *= i;
    r.resources["lattice_cosets_defined"] = stats.cosets_defined;
    r.add_bool(lattice_name, lattice_anchor, table.coset_count() == fact,
               {{"index", table.coset_count()}, {"expected", fact}});
  });

  const std::string fw_name = "FW_" + std::to_string(n) + " criterion for " + tag;
  const std::string fw_anchor =
      "affine Coxeter groups of type A_n have FW_n: no subgroup of index at most n maps to D-infinity "
      "with infinite image";
  guarded(r, fw_name, fw_anchor, [&] {
    auto v = groups::fwn_virtually_abelian(pres, n);
    Json data = io::fwn_verdict_to_json(pres, v);
    data["virtually_abelian"] = "caller-asserted; the lattice index check above supports it";
    r.resources["low_index_classes"] = v.subgroup_indices.size();
    r.add_bool(fw_name, fw_anchor, v.holds, std::move(data));
  });

  // The lattice-by-D4 subgroup has index 3 in A~3; its quotients only enter the n = 3 argument.
  const std::string d4_anchor = "the quotients of Lambda0 x| D4 by x=y=1, z=1 and x=yz are finite";
  if (n == 3) guarded(r, "Lambda0 x| D4 quotients", d4_anchor, [&] {
    std::size_t defined = 0;
    for (const auto& q : groups::verify_d4_quotients(limit)) {
      defined += q.stats.cosets_defined;
      const std::string name = "Lambda0 x| D4 quotient " + q.name + " is finite";
      Json data{{"added", Json::array()}, {"cosets_defined", q.stats.cosets_defined}};
      const Presentation quotient = groups::lattice_by_d4().with_relators(q.added);
      for (const auto& w : q.added) data["added"].push_back(quotient.format_word(w));
      if (q.order) {
        data["order"] = *q.order;
        r.add(name, d4_anchor, Verdict::kPass, std::move(data));
      } else if (q.infinite_witness) {
        data["finiteness"] = "infinite, certified";
        data["witness"] = io::dinfty_witness_to_json(quotient, *q.infinite_witness);
        data["witness_verified"] = groups::verify_dinfty_witness(quotient, *q.infinite_witness);
        r.add(name, d4_anchor, Verdict::kFail, std::move(data));
      } else {
        data["finiteness"] = "coset limit reached";
        data["coset_limit"] = limit;
        r.add(name, d4_anchor, Verdict::kInconclusive, std::move(data));
      }
    }
    r.resources["d4_cosets_defined"] = defined;
  });

  auto control = [&](const std::string& name, const Presentation& g, int k) {
    const std::string anchor = "negative control: a subgroup of index at most " + std::to_string(k) +
                               " maps to D-infinity with infinite image";
    guarded(r, name, anchor, [&] {
      auto v = groups::fwn_virtually_abelian(g, k);
      bool ok = !v.holds && v.witness && v.failing_presentation && v.failing_subgroup &&
                groups::verify_dinfty_witness(v.failing_presentation->presentation, *v.witness) &&
                v.failing_subgroup->contains(v.witness_in_group);
      r.add_bool(name, anchor, ok, io::fwn_verdict_to_json(g, v));
    });
  };
  control("control: A~1 = D-infinity fails FW_1 with a verified witness", groups::build_affine_coxeter(1), 1);
  control("control: Z^2 fails FW_1 with a verified witness", Presentation(2, {{1, 2, -1, -2}}, {"u", "v"}), 1);
  control("control: A~2 fails FW_3 with a verified witness", groups::build_affine_coxeter(2), 3);
}

// ---------------------------------------------------------------- cubulable-fw

void run_cubulable_fw(ScenarioReport& r, ParamReader& p) {
  const int n = static_cast<int>(p.integer("n", 2, 2, 4));
  const int q = static_cast<int>(p.integer("q", 5, 2, 64));
  const int radius = static_cast<int>(p.integer("radius", 1, 0, 3));
  const FiniteGraph gamma = join_of_pairs(n);

  r.add_bool("Gamma is the cross-polytope graph on " + std::to_string(2 * n) + " vertices",
             "the n-fold join of two isolated vertices",
             graphs::graph_isomorphic(gamma, graphs::cross_polytope_graph(n)).has_value(),
             {{"vertices", gamma.vertex_count()}, {"edges", gamma.edge_count()}});

  r.add_bool("Gamma has diameter 2", "hypothesis: Gamma has diameter two", gamma.diameter() == 2,
             {{"diameter", gamma.diameter()}});

  const std::string transitive_anchor = "hypothesis: Isom(Gamma) is transitive on pairs at distance two";
  guarded(r, "Isom(Gamma) is transitive on distance-2 pairs", transitive_anchor, [&] {
    auto isom = graphs::automorphism_group(gamma);
    auto d2 = graphs::check_distance2_transitivity(gamma, isom);
    r.add_bool("Isom(Gamma) is transitive on distance-2 pairs", transitive_anchor, d2.transitive,
               {{"isom_order", isom.size()}, {"pairs", d2.pair_count}, {"orbits", d2.orbit_count}});
  });

  r.add_bool("Z/" + std::to_string(q) + " has FW_" + std::to_string(n - 1),
             "hypothesis: the vertex groups have FW_(n-1); Z/q does when no d in 2..n-1 divides q",
             groups::fw_plus_cyclic(q, n - 1), {{"q", q}, {"n", n - 1}});
  r.add_bool("control: Z/4 fails FW_2", "a finite group with a subgroup of index 2 fails FW_2",
             !groups::fw_plus_cyclic(4, 2));

  const std::string sphere_anchor = "the flag completion of Gamma is an (n-1)-sphere, so it carries "
                                    "non-trivial reduced homology in dimension n-1";
  guarded(r, "flag completion of Gamma is S^" + std::to_string(n - 1), sphere_anchor, [&] {
    auto flag = topology::flag_completion(gamma);
    auto h = topology::homology(flag);
    r.add_bool("flag completion of Gamma is S^" + std::to_string(n - 1), sphere_anchor,
               is_sphere(h, n - 1) && topology::nontrivial_in_dim(flag, n - 1), io::homology_to_json(h));
  });

  const std::string complex_anchor =
      "the graph product of the vertex groups acts on the median graph of cosets, of cubical dimension clique(Gamma)";
  const std::string complex_name = "coset complex ball of radius " + std::to_string(radius) + " is median of dimension n";
  guarded(r, complex_name, complex_anchor, [&] {
    auto spec = graphprod::GraphProductSpec::cyclic(gamma, std::vector<int>(2 * n, q));
    auto cx = graphprod::build_coset_complex(spec, radius);
    auto certified = median::certify_median(cx.graph, std::max(median::kDefaultMedianCap, cx.graph.vertex_count()));
    Json data{{"vertices", cx.graph.vertex_count()}, {"elements", cx.elements.size()}};
    bool ok = false;
    if (auto* mg = std::get_if<median::MedianGraph>(&certified)) {
      int dim = median::cubical_dimension(*mg).dimension;
      data["cubical_dimension"] = dim;
      ok = dim == n;
    } else {
      data["median_failure"] = std::get<median::MedianFailure>(certified).describe();
    }
    r.resources["coset_complex_vertices"] = cx.graph.vertex_count();
    r.add_bool(complex_name, complex_anchor, ok, std::move(data));
  });
}

// ---------------------------------------------------------------- gamma-rs

FiniteGraph non_antipodal_graph(int d) {
  const int n = 1 << d;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((u ^ v) != n - 1) pairs.emplace_back(u, v);
    }
  }
  return FiniteGraph::from_pairs(n, pairs);
}

void run_gamma_rs(ScenarioReport& r, ParamReader& p) {
  const int rr = static_cast<int>(p.integer("r", 3, 2, 8));
  const int s = static_cast<int>(p.integer("s", 1, 1, rr - 1));
  const int d = s + 1;
  const FiniteGraph g = graphs::build_gamma_rs(rr, s);
  const std::string rs = "Gamma_{" + std::to_string(rr) + "," + std::to_string(s) + "}";

  bool adjacency_ok = g.vertex_count() == (1 << rr);
  std::size_t edges = 0;
  for (int u = 0; u < g.vertex_count() && adjacency_ok; ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      int h = std::popcount(static_cast<unsigned>(u ^ v));
      if (g.adjacent(u, v) != (h <= s)) adjacency_ok = false;
      edges += h <= s ? 1 : 0;
    }
  }
  adjacency_ok = adjacency_ok && edges == g.edge_count();
  r.add_bool(rs + " joins cube vertices at Hamming distance 1.." + std::to_string(s),
             "Gamma_{r,s}: the r-cube vertices, adjacent when their distance is at most s", adjacency_ok,
             {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}});

  const auto gens = graphs::hypercube_symmetry_generators(rr);
  bool automorphisms = std::all_of(gens.begin(), gens.end(), [&](const Permutation& x) { return x.is_automorphism(g); });
  r.add_bool("cube symmetries act on " + rs, "Isom(Q_r) acts on Gamma_{r,s} by automorphisms", automorphisms,
             {{"generators", gens.size()}});

  // Orbits of unordered pairs at Hamming distance d under the cube symmetries.
  std::map<std::pair<int, int>, int> orbit;
  int orbits = 0;
  for (int u = 0; u < (1 << rr); ++u) {
    for (int v = u + 1; v < (1 << rr); ++v) {
      if (std::popcount(static_cast<unsigned>(u ^ v)) != d || orbit.count({u, v})) continue;
      std::deque<std::pair<int, int>> queue{{u, v}};
      orbit[{u, v}] = orbits;
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (const auto& x : gens) {
          std::pair<int, int> img{std::min(x(a), x(b)), std::max(x(a), x(b))};
          if (orbit.emplace(img, orbits).second) queue.push_back(img);
        }
      }
      ++orbits;
    }
  }
  r.add_bool("cube symmetries are transitive on pairs at distance " + std::to_string(d),
             "Isom(Gamma_{r,s}) permutes transitively the pairs of non-adjacent vertices at minimal distance s+1",
             orbits == 1, {{"pairs", orbit.size()}, {"orbits", orbits}});

  const FiniteGraph model = non_antipodal_graph(d);
  const std::string sphere_name = "nerve model on Q_" + std::to_string(d) + " is S^" + std::to_string(d - 1);
  const std::string sphere_anchor =
      "the nerve of the fixed sets around a d-cube is a (d-1)-sphere (non-opposite pairs of Q_d vertices)";
  const std::string degree_name = "nerve model has non-trivial homology in some dimension >= " + std::to_string(s);
  const std::string degree_anchor = "a non-trivial nerve class in dimension at least s obstructs a fixed point";
  guarded(r, sphere_name, sphere_anchor, [&] {
    auto h = topology::homology(topology::flag_completion(model));
    Json data = io::homology_to_json(h);
    auto top = top_nontrivial_dimension(h);
    data["top_nontrivial_dimension"] = top ? Json(*top) : Json();
    data["cross_polytope_pairs"] = 1 << (d - 1);
    r.add_bool(sphere_name, sphere_anchor, is_sphere(h, d - 1), data);
    r.add_bool(degree_name, degree_anchor, top && *top >= s, {{"top_nontrivial_dimension", data["top_nontrivial_dimension"]}});
  });
}

// ---------------------------------------------------------------- duality

void run_duality(ScenarioReport& r, ParamReader& p) {
  const std::string size = p.choice("corpus", "small", {"small", "full"});
  const auto seed = static_cast<std::uint64_t>(p.integer("seed", 1, 0, 1LL << 62));
  const std::string anchor = "cubulating the walls of a median graph returns the graph (duality of wallspaces "
                             "and median graphs)";
  guarded(r, "cubulate(walls_of_median(X)) is isomorphic to X", anchor, [&] {
    auto corpus = median_corpus(size == "full" ? CorpusSize::kFull : CorpusSize::kSmall, seed);
    Json failures = Json::array();
    std::size_t vertices = 0;
    std::size_t walls = 0;
    std::size_t dropped = 0;
    for (const auto& item : corpus) {
      auto certified = median::certify_median(item.graph);
      if (!std::holds_alternative<median::MedianGraph>(certified)) {
        failures.push_back({{"graph", item.name}, {"reason", std::get<median::MedianFailure>(certified).describe()}});
        continue;
      }
      const auto& mg = std::get<median::MedianGraph>(certified);
      auto ws = wallspace::walls_of_median(mg);
      auto cub = wallspace::cubulate(ws);
      vertices += static_cast<std::size_t>(item.graph.vertex_count());
      walls += ws.wall_count();
      dropped += cub.dropped_orientations;
      bool iso = cub.graph.vertex_count() == item.graph.vertex_count() &&
                 graphs::graph_isomorphic(cub.graph.graph(), item.graph).has_value();
      bool points = true;
      for (int v = 0; v < item.graph.vertex_count() && points; ++v) {
        for (int w : item.graph.neighbors(v)) points = points && cub.graph.graph().adjacent(cub.point_vertex[v], cub.point_vertex[w]);
      }
      if (!iso || !points) failures.push_back({{"graph", item.name}, {"reason", iso ? "point map is not a graph map" : "not isomorphic"}});
    }
    r.resources["corpus_graphs"] = corpus.size();
    r.resources["corpus_vertices"] = vertices;
    r.resources["corpus_walls"] = walls;
    r.add_bool("cubulate(walls_of_median(X)) is isomorphic to X", anchor, failures.empty(),
               {{"graphs", corpus.size()}, {"failures", failures}});
    r.add_bool("every consistent orientation is principal", "finite median graphs have empty Roller boundary",
               dropped == 0, {{"non_principal_orientations", dropped}});
  });
}

// ---------------------------------------------------------------- graph-product

struct NamedSpec {
  graphprod::GraphProductSpec spec;
  std::vector<int> orders;
};

NamedSpec spec_from_params(ParamReader& p) {
  if (auto path = p.text("spec")) {
    auto [spec, orders] = io::spec_from_json(io::read_json_file(*path));
    return {std::move(spec), std::move(orders)};
  }
  const std::string gamma = p.choice("gamma", "k2", {"k1", "k2", "k3", "p3", "c4", "c5", "k2bar"});
  const int q = static_cast<int>(p.integer("q", 2, 2, 16));
  FiniteGraph g;
  if (gamma == "k1") g = graphs::complete_graph(1);
  if (gamma == "k2") g = graphs::complete_graph(2);
  if (gamma == "k3") g = graphs::complete_graph(3);
  if (gamma == "p3") g = graphs::path_graph(3);
  if (gamma == "c4") g = graphs::cycle_graph(4);
  if (gamma == "c5") g = graphs::cycle_graph(5);
  if (gamma == "k2bar") g = graphs::edgeless_graph(2);
  std::vector<int> orders(static_cast<std::size_t>(g.vertex_count()), q);
  return {graphprod::GraphProductSpec::cyclic(g, orders), orders};
}

bool is_complete(const FiniteGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

void run_graph_product(ScenarioReport& r, ParamReader& p) {
  auto [spec, orders] = spec_from_params(p);
  const int radius = static_cast<int>(p.integer("radius", 3, 0, 12));
  const int margin = static_cast<int>(p.integer("margin", 1, 0, radius));
  const FiniteGraph& gamma = spec.gamma;
  const bool complete = is_complete(gamma);
  int clique_number = 0;
  for (const auto& c : graphprod::cliques(gamma)) clique_number = std::max<int>(clique_number, static_cast<int>(c.size()));
  r.parameters["orders"] = orders;

  // Coset complex: full when Gamma is complete (the group is then finite).
  std::optional<graphprod::CosetComplex> cx;
  const std::string median_anchor = "the cosets g<Lambda> of the clique subgroups form a median graph";
  const std::string median_name = complete ? "full coset complex is median" : "truncated coset complex is median";
  guarded(r, median_name, median_anchor, [&] {
    cx = graphprod::build_coset_complex(spec, complete ? std::nullopt : std::optional<int>(radius));
    r.resources["coset_complex_vertices"] = cx->graph.vertex_count();
    auto certified = median::certify_median(cx->graph, std::max(median::kDefaultMedianCap, cx->graph.vertex_count()));
    if (auto* f = std::get_if<median::MedianFailure>(&certified)) {
      r.add(median_name, median_anchor, Verdict::kFail, {{"failure", f->describe()}});
      return;
    }
    const auto& mg = std::get<median::MedianGraph>(certified);
    Json data{{"vertices", cx->graph.vertex_count()}, {"edges", cx->graph.edge_count()}, {"full", cx->full()}};
    bool ok = true;
    if (complete) {
      long long expected = 1;
      for (int o : orders) expected *= o + 1;
      data["expected_vertices"] = expected;
      ok = expected == cx->graph.vertex_count();
    }
    r.add_bool(median_name, median_anchor, ok, std::move(data));
    int dim = median::cubical_dimension(mg).dimension;
    r.add_bool("cubical dimension equals clique(Gamma)", "the coset complex has cubical dimension clique(Gamma)",
               dim == clique_number, {{"cubical_dimension", dim}, {"clique_number", clique_number}});
  });

  const std::string qm_anchor = "in the Cayley graph of a graph product, maximal cliques are cosets gG_u and "
                                "prisms are cosets g<Lambda> with Lambda complete";
  guarded(r, "cliques and prisms of the ball are cosets", qm_anchor, [&] {
    auto ball = quasimedian::build_qm_ball(spec, radius);
    auto rep = quasimedian::verify_coset_structure(spec, ball, margin);
    r.resources["qm_ball_vertices"] = ball.graph.vertex_count();
    Json data = io::coset_report_to_json(rep);
    data["ball_vertices"] = ball.graph.vertex_count();
    data["closed"] = ball.closed;
    Verdict v = !rep.ok() ? Verdict::kFail : rep.checked == 0 ? Verdict::kInconclusive : Verdict::kPass;
    r.add("cliques and prisms of the ball are cosets", qm_anchor, v, std::move(data));
  });

  const std::string wall_anchor = "wall systems on the vertex groups extend to the quasi-median graph, and the "
                                  "cubulation has dimension at most clique(Gamma) times the vertex-group bound";
  const std::string wall_name = "wall-system cubulation is isomorphic to the coset complex";
  guarded(r, wall_name, wall_anchor, [&] {
    if (!complete) throw UnsupportedRegime("wall-system cubulation needs a complete Gamma (a finite graph product)");
    if (!cx) throw UnsupportedRegime("coset complex unavailable");
    auto ball = quasimedian::build_qm_ball(spec, gamma.vertex_count());
    std::vector<wallspace::Wallspace> walls;
    for (int o : orders) walls.push_back(quasimedian::singleton_walls(o));
    auto w = quasimedian::cubulate_with_wall_system(spec, ball, walls);
    bool iso = graphs::graph_isomorphic(w.cubulation.graph.graph(), cx->graph).has_value();
    r.add_bool(wall_name, wall_anchor, iso,
               {{"cubulation_vertices", w.cubulation.graph.vertex_count()},
                {"coset_complex_vertices", cx->graph.vertex_count()},
                {"walls", w.walls.wall_count()},
                {"coherent_pairs", w.coherent_pairs}});
    r.add_bool("wall-system cubulation respects the dimension bound", wall_anchor, w.dimension <= w.dimension_bound,
               {{"dimension", w.dimension}, {"bound", w.dimension_bound}});
  });

  const std::string stab_anchor = "Gamma[G] acts on the coset complex with vertex stabilisers of order dividing |Isom(Gamma)|";
  const std::string rel_anchor = "the defining relations of Gamma[G] act trivially";
  guarded(r, "vertex stabilisers of Gamma[G] divide |Isom(Gamma)|", stab_anchor, [&] {
    if (!cx || !cx->full()) throw TruncationError("the action needs the full coset complex (Gamma complete)");
    std::vector<Permutation> h;
    for (const auto& a : graphs::automorphism_group(gamma)) {
      bool same = true;
      for (int v = 0; v < gamma.vertex_count(); ++v) same = same && spec.groups[v] == spec.groups[a(v)];
      if (same && !a.is_identity()) h.push_back(a);
    }
    const std::size_t h_order = h.size() + 1;
    auto action = graphprod::vgp_action(spec, h, *cx);
    auto st = graphprod::stabilizers(action.action);
    long long g_order = static_cast<long long>(cx->elements.size());
    bool divides = true;
    std::set<std::size_t> seen;
    for (int v = 0; v < cx->graph.vertex_count(); ++v) {
      if (!cx->labels[v].clique.empty()) continue;
      seen.insert(st.stabilizer_orders[v]);
      divides = divides && h_order % st.stabilizer_orders[v] == 0;
    }
    r.add_bool("vertex stabilisers of Gamma[G] divide |Isom(Gamma)|", stab_anchor,
               divides && st.group_order == h_order * static_cast<std::size_t>(g_order),
               {{"isom_order", h_order},
                {"group_order", st.group_order},
                {"expected_group_order", h_order * static_cast<std::size_t>(g_order)},
                {"element_stabiliser_orders", Json(std::vector<std::size_t>(seen.begin(), seen.end()))},
                {"orbits", st.orbit_count}});
    std::size_t bad = 0;
    for (const auto& rel : action.relators) bad += action.action.evaluate(rel).is_identity() ? 0 : 1;
    r.add_bool("relators of Gamma[G] act as the identity", rel_anchor, bad == 0,
               {{"relators", action.relators.size()}, {"non_identity", bad}});
  });
  // When the action could not be built, the relator check is reported as skipped too.
  if (std::none_of(r.checks.begin(), r.checks.end(),
                   [](const CheckRecord& c) { return c.name == "relators of Gamma[G] act as the identity"; })) {
    r.add("relators of Gamma[G] act as the identity", rel_anchor, Verdict::kInconclusive,
          {{"skipped", "the action was not built"}});
  }
}

// ---------------------------------------------------------------- quasiline-dinfty

void run_quasiline_dinfty(ScenarioReport& r, ParamReader& p) {
  const int length = static_cast<int>(p.integer("length", quasiline::kDefaultWordLength, 1, 6));
  std::optional<std::string> path = p.text("action");
  using quasiline::PeriodicQuasiLine;
  using quasiline::QLIsometry;
  auto [ql, gens] = [&]() -> std::pair<PeriodicQuasiLine, std::map<std::string, QLIsometry>> {
    if (path) return io::quasiline_action_from_json(io::read_json_file(*path));
    return {PeriodicQuasiLine::line(),
            {{"a", QLIsometry{0, true, Permutation::identity(1)}}, {"b", QLIsometry{1, true, Permutation::identity(1)}}}};
  }();
  r.parameters["action_source"] = path ? "file" : "two reflections of the unit line";

  const std::string anchor = "an action on a median quasi-line without fixed points at infinity gives a morphism "
                             "to D-infinity with infinite image";
  guarded(r, "phi is a morphism to D-infinity", anchor, [&] {
    auto m = quasiline::dinfty_from_quasiline_action(ql, gens, length);
    Json phi = Json::object();
    for (const auto& [label, e] : m.phi) phi[label] = io::dinfty_element_to_json(e);
    r.resources["words"] = m.words;
    r.resources["pairs_checked"] = m.pairs_checked;
    r.add_bool("phi is a morphism to D-infinity", anchor, m.homomorphism && m.cocycle,
               {{"phi", phi}, {"word_length", m.word_length}, {"pairs", m.pairs_checked}});
    r.add_bool("phi has infinite image", anchor, m.infinite_image, {{"phi", phi}});
    r.add_bool("h(g0 g g0^-1) = -h(g) on the translation words", "the translation length changes sign under an end swap",
               m.conjugation && m.g0_square_trivial,
               {{"g0", m.g0 ? Json(*m.g0) : Json()}, {"conjugations", m.conjugations_checked},
                {"g0_square_trivial", m.g0_square_trivial}});
    r.add_bool("h is additive on the end-preserving words", "the translation length is a morphism on the index-2 subgroup",
               m.additive);
  });

  const std::string shift_anchor = "a pure shift lands in the translation subgroup of D-infinity";
  guarded(r, "control: pure shift maps to (1, +1)", shift_anchor, [&] {
    auto m = quasiline::dinfty_from_quasiline_action(PeriodicQuasiLine::line(),
                                                     {{"t", QLIsometry{1, false, Permutation::identity(1)}}}, length);
    bool ok = m.ok() && m.translations_only && m.phi.at("t") == groups::DinftyElement{1, 1};
    r.add_bool("control: pure shift maps to (1, +1)", shift_anchor, ok,
               {{"phi_t", io::dinfty_element_to_json(m.phi.at("t"))}, {"translations_only", m.translations_only}});
  });
}

// ---------------------------------------------------------------- cube-fix

void run_cube_fix(ScenarioReport& r, ParamReader& p) {
  const int k = static_cast<int>(p.integer("k", 3, 2, 10));
  const std::string group = p.choice("group", "cyclic", {"cyclic", "symmetric"});
  const int n = 1 << k;
  auto permute_coordinates = [&](const std::vector<int>& coord) {
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) {
      int w = 0;
      for (int i = 0; i < k; ++i) {
        if (v >> i & 1) w |= 1 << coord[i];
      }
      img[v] = w;
    }
    return Permutation(img);
  };
  std::vector<std::vector<int>> coordinate_gens;
  std::vector<int> cycle(k);
  for (int i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
  coordinate_gens.push_back(cycle);
  if (group == "symmetric" && k > 2) {
    std::vector<int> swap(k);
    for (int i = 0; i < k; ++i) swap[i] = i;
    std::swap(swap[0], swap[1]);
    coordinate_gens.push_back(swap);
  }
  // Transitivity on coordinates, by orbit closure of coordinate 0.
  std::set<int> orbit{0};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& g : coordinate_gens) {
      for (int i : std::vector<int>(orbit.begin(), orbit.end())) grew = orbit.insert(g[i]).second || grew;
    }
  }
  r.add_bool("coordinate action is transitive", "a transitive permutation action on the coordinates of Q_k",
             static_cast<int>(orbit.size()) == k, {{"orbit_size", orbit.size()}});

  const FiniteGraph q = graphs::build_hypercube(k);
  std::vector<Permutation> gens;
  std::vector<std::string> labels;
  for (const auto& c : coordinate_gens) {
    gens.push_back(permute_coordinates(c));
    labels.push_back(std::to_string(labels.size()));
  }
  median::GraphAction action(q, labels, gens);
  std::vector<median::Word> words;
  for (int i = 1; i <= static_cast<int>(gens.size()); ++i) words.push_back({i});
  Bitset fix = median::fixed_set(action, words);
  auto fixed = fix.indices();
  r.add_bool("fixed set is {0...0, 1...1}", "the fixed set of a transitive coordinate action on Q_k is {0,1}",
             fixed == std::vector<int>{0, n - 1}, {{"fixed", int_list(fixed)}});

  auto mg = median::require_median(q);
  auto hull = median::convex_hull(mg, fix);
  r.add_bool("convex hull of the fixed set is all of Q_k", "the convex hull of {0,1} is the whole cube",
             hull.hull.count() == static_cast<std::size_t>(n), {{"hull_size", hull.hull.count()}, {"cube_size", n}});
  const bool local = median::is_convex_local(q, fix);
  r.add_bool("fixed set is not convex", "fixed sets of median actions need not be convex (connected and locally convex criterion)",
             !hull.seed_is_convex && !local, {{"halfspace_criterion", hull.seed_is_convex}, {"local_criterion", local}});
}

struct Entry {
  std::string name;
  std::vector<std::string> flags;
  void (*run)(ScenarioReport&, ParamReader&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"affine-coxeter", {"n", "limit"}, run_affine_coxeter},
      {"cubulable-fw", {"n", "q", "radius"}, run_cubulable_fw},
      {"gamma-rs", {"r", "s"}, run_gamma_rs},
      {"duality", {"corpus", "seed"}, run_duality},
      {"graph-product", {"gamma", "q", "spec", "radius", "margin"}, run_graph_product},
      {"quasiline-dinfty", {"action", "length"}, run_quasiline_dinfty},
      {"cube-fix", {"k", "group"}, run_cube_fix},
  };
  return entries;
}

const Entry& lookup(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw InputError("unknown scenario '" + name + "'");
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& scenario_flags(const std::string& name) { return lookup(name).flags; }

ScenarioReport run_scenario(const std::string& name, const Params& params) {
  const Entry& entry = lookup(name);
  for (const auto& [key, value] : params) {
    if (std::find(entry.flags.begin(), entry.flags.end(), key) == entry.flags.end()) {
      throw InputError("scenario '" + name + "' does not take --" + key);
    }
  }
  ScenarioReport report;
  report.scenario = name;
  ParamReader reader(params, report.parameters);
  entry.run(report, reader);
  return report;
}

}  // namespace medtk::scenarios
