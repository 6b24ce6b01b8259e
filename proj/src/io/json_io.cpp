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

#include "medtk/io/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "medtk/errors.hpp"

namespace medtk::io {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

long long integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<long long>();
}

int small_int(const Json& j, const std::string& what) {
  long long v = integer(j, what);
  if (v < -(1LL << 30) || v > (1LL << 30)) throw InputError(what + " is out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(small_int(x, what + " entry"));
  return out;
}

const Json& array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  return j;
}

Json rational(const exact::Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const auto n = boost::multiprecision::numerator(r);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
      return n.convert_to<long long>();
    }
  }
  return r.str();
}

Json integer_value(const exact::Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

Json word(const groups::Word& w) {
  Json out = Json::array();
  for (int x : w) out.push_back(x);
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json graph_to_json(const graphs::FiniteGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

graphs::FiniteGraph graph_from_json(const Json& j) {
  const int n = small_int(field(j, "n"), "n");
  if (n < 0) throw InputError("n must be non-negative");
  std::vector<std::pair<int, int>> pairs;
  for (const Json& e : array(field(j, "edges"), "edges")) {
    auto ends = int_list(e, "edge");
    if (ends.size() != 2) throw InputError("an edge needs two endpoints");
    pairs.emplace_back(ends[0], ends[1]);
  }
  return graphs::FiniteGraph::from_pairs(n, pairs);
}

Json wallspace_to_json(const wallspace::Wallspace& ws) {
  Json walls = Json::array();
  for (const Bitset& side : ws.walls()) {
    Json members = Json::array();
    for (auto i : side.indices()) members.push_back(i);
    walls.push_back(std::move(members));
  }
  return Json{{"points", ws.point_count()}, {"walls", std::move(walls)}};
}

wallspace::Wallspace wallspace_from_json(const Json& j) {
  const int points = small_int(field(j, "points"), "points");
  if (points <= 0) throw InputError("points must be positive");
  std::vector<Bitset> sides;
  for (const Json& w : array(field(j, "walls"), "walls")) {
    Bitset side(static_cast<std::size_t>(points));
    for (int p : int_list(w, "wall")) {
      if (p < 0 || p >= points) throw InputError("wall point out of range");
      side.set(static_cast<std::size_t>(p));
    }
    sides.push_back(std::move(side));
  }
  return wallspace::Wallspace(points, std::move(sides));
}

Json presentation_to_json(const groups::Presentation& p) {
  Json relators = Json::array();
  for (const auto& r : p.relators()) relators.push_back(word(r));
  return Json{{"generators", p.generator_count()}, {"relators", std::move(relators)}, {"names", p.names()}};
}

groups::Presentation presentation_from_json(const Json& j) {
  const int k = small_int(field(j, "generators"), "generators");
  std::vector<groups::Word> relators;
  for (const Json& r : array(field(j, "relators"), "relators")) relators.push_back(int_list(r, "relator"));
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const Json& name : array(j.at("names"), "names")) {
      if (!name.is_string()) throw InputError("names must be strings");
      names.push_back(name.get<std::string>());
    }
    if (static_cast<int>(names.size()) != k) throw InputError("need one name per generator");
  }
  return groups::Presentation(k, std::move(relators), std::move(names));
}

Json complex_to_json(const topology::SimplicialComplex& sc) {
  Json facets = Json::array();
  for (const auto& f : sc.facets()) facets.push_back(f);
  return Json{{"n", sc.vertex_count()}, {"facets", std::move(facets)}};
}

topology::SimplicialComplex complex_from_json(const Json& j) {
  const int n = small_int(field(j, "n"), "n");
  if (n < 0) throw InputError("n must be non-negative");
  std::vector<topology::Simplex> facets;
  for (const Json& f : array(field(j, "facets"), "facets")) facets.push_back(int_list(f, "facet"));
  return topology::SimplicialComplex(n, std::move(facets));
}

Json homology_to_json(const topology::HomologyProfile& h) {
  Json torsion = Json::array();
  for (const auto& factors : h.torsion) {
    Json row = Json::array();
    for (const auto& t : factors) row.push_back(integer_value(t));
    torsion.push_back(std::move(row));
  }
  return Json{{"betti", h.betti},
              {"reduced_betti", h.reduced_betti},
              {"torsion", std::move(torsion)},
              {"face_counts", h.face_counts},
              {"euler_characteristic", h.euler_characteristic}};
}

Json spec_to_json(const graphprod::GraphProductSpec& spec, const std::vector<int>& orders) {
  Json o = Json::object();
  for (std::size_t v = 0; v < orders.size(); ++v) o[std::to_string(v)] = orders[v];
  return Json{{"gamma", graph_to_json(spec.gamma)}, {"orders", std::move(o)}};
}

std::pair<graphprod::GraphProductSpec, std::vector<int>> spec_from_json(const Json& j) {
  graphs::FiniteGraph gamma = graph_from_json(field(j, "gamma"));
  const Json& o = field(j, "orders");
  if (!o.is_object()) throw InputError("orders must be an object");
  std::vector<int> orders(static_cast<std::size_t>(gamma.vertex_count()), 0);
  for (const auto& [key, value] : o.items()) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || v < 0 || v >= gamma.vertex_count()) throw InputError("bad vertex key \"" + key + "\"");
    orders[v] = small_int(value, "order");
  }
  for (int q : orders) {
    if (q < 2) throw InputError("every vertex needs an order of at least 2");
  }
  auto spec = graphprod::GraphProductSpec::cyclic(std::move(gamma), orders);
  return {std::move(spec), orders};
}

Json coset_labels_to_json(const graphprod::CosetComplex& cx) {
  Json out = Json::array();
  for (const auto& label : cx.labels) {
    Json rep = Json::array();
    for (const auto& s : label.representative) rep.push_back({s.vertex, s.element});
    out.push_back(Json{{"representative", std::move(rep)}, {"clique", label.clique}});
  }
  return out;
}

Json coset_report_to_json(const quasimedian::CosetReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"vertex", v.vertex}, {"kind", v.kind}, {"detail", v.detail}});
  }
  return Json{{"checked", r.checked},
              {"violations", std::move(violations)},
              {"margin", r.margin},
              {"cliques_checked", r.cliques_checked},
              {"prisms_checked", r.prisms_checked},
              {"gates_checked", r.gates_checked}};
}

Json dinfty_element_to_json(const groups::DinftyElement& e) {
  return Json{{"translation", rational(e.shift)}, {"flip", e.sign}};
}

Json dinfty_witness_to_json(const groups::Presentation& p, const groups::DinftyWitness& w) {
  Json images = Json::object();
  for (int i = 0; i < p.generator_count(); ++i) {
    images[p.names()[i]] = dinfty_element_to_json({w.lambda[i], w.sigma[i]});
  }
  return Json{{"images", std::move(images)},
              {"certificate", word(w.certificate)},
              {"certificate_text", p.format_word(w.certificate)},
              {"certificate_translation", rational(w.certificate_value)}};
}

Json fwn_verdict_to_json(const groups::Presentation& p, const groups::FwnVerdict& v) {
  Json out{{"n", v.n},
           {"holds", v.holds},
           {"hypothesis_machine_checked", v.hypothesis_machine_checked},
           {"subgroup_indices", v.subgroup_indices}};
  if (v.failing_subgroup) out["failing_subgroup_index"] = v.failing_subgroup->coset_count();
  if (v.failing_presentation && v.witness) {
    const auto& sub = *v.failing_presentation;
    Json gens = Json::array();
    for (std::size_t i = 0; i < sub.generator_words.size(); ++i) {
      gens.push_back(Json{{"name", sub.presentation.names()[i]}, {"word", p.format_word(sub.generator_words[i])}});
    }
    out["subgroup_generators"] = std::move(gens);
    out["witness"] = dinfty_witness_to_json(sub.presentation, *v.witness);
    out["witness_in_group"] = word(v.witness_in_group);
    out["witness_in_group_text"] = p.format_word(v.witness_in_group);
  }
  return out;
}

Json quasiline_to_json(const quasiline::PeriodicQuasiLine& ql) {
  Json gluing = Json::array();
  for (auto [a, b] : ql.gluing()) gluing.push_back({a, b});
  return Json{{"period", graph_to_json(ql.period())}, {"gluing", std::move(gluing)}};
}

quasiline::PeriodicQuasiLine quasiline_from_json(const Json& j) {
  graphs::FiniteGraph period = graph_from_json(field(j, "period"));
  std::vector<std::pair<int, int>> gluing;
  for (const Json& pair : array(field(j, "gluing"), "gluing")) {
    auto ab = int_list(pair, "gluing pair");
    if (ab.size() != 2) throw InputError("a gluing pair needs two vertices");
    gluing.emplace_back(ab[0], ab[1]);
  }
  return quasiline::PeriodicQuasiLine(std::move(period), std::move(gluing));
}

Json isometry_to_json(const quasiline::QLIsometry& g) {
  return Json{{"shift", g.shift}, {"reverses", g.reverses}, {"internal", g.internal.images()}};
}

quasiline::QLIsometry isometry_from_json(const Json& j) {
  const Json& rev = field(j, "reverses");
  if (!rev.is_boolean()) throw InputError("reverses must be a boolean");
  std::vector<int> images = int_list(field(j, "internal"), "internal");
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) throw InputError("internal map is not a permutation");
  }
  return {integer(field(j, "shift"), "shift"), rev.get<bool>(), graphs::Permutation(std::move(images))};
}

std::pair<quasiline::PeriodicQuasiLine, std::map<std::string, quasiline::QLIsometry>> quasiline_action_from_json(
    const Json& j) {
  auto ql = quasiline_from_json(field(j, "quasiline"));
  const Json& gens = field(j, "generators");
  if (!gens.is_object()) throw InputError("generators must be an object");
  std::map<std::string, quasiline::QLIsometry> out;
  for (const auto& [label, value] : gens.items()) out.emplace(label, isometry_from_json(value));
  return {std::move(ql), std::move(out)};
}

}  // namespace medtk::io
