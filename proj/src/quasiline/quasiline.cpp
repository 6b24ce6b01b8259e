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

#include "medtk/quasiline/quasiline.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "medtk/errors.hpp"
#include "medtk/median/median_graph.hpp"

namespace medtk::quasiline {
namespace {

using Point = std::pair<long long, int>;

int permutation_order(const graphs::Permutation& p) {
  graphs::Permutation power = p;
  int order = 1;
  while (!power.is_identity()) {
    power = power * p;
    ++order;
  }
  return order;
}

}  // namespace

PeriodicQuasiLine::PeriodicQuasiLine(graphs::FiniteGraph period, std::vector<std::pair<int, int>> gluing)
    : period_(std::move(period)), gluing_(std::move(gluing)) {
  const int p = period_.vertex_count();
  if (p == 0) throw InputError("period graph is empty");
  if (gluing_.empty()) throw InputError("gluing is empty");
  right_.assign(p, {});
  left_.assign(p, {});
  std::set<int> rights, lefts;
  for (auto [a, b] : gluing_) {
    if (a < 0 || a >= p || b < 0 || b >= p) throw InputError("gluing vertex out of range");
    if (!rights.insert(a).second || !lefts.insert(b).second) {
      throw InputError("gluing is not a bijection between boundary sets");
    }
    right_[a].push_back(b);
    left_[b].push_back(a);
  }
  std::sort(gluing_.begin(), gluing_.end());
  for (int copies : {3, 5}) {
    auto r = median::certify_median(window(0, copies - 1));
    if (std::holds_alternative<median::MedianFailure>(r)) {
      throw ContractError("window of " + std::to_string(copies) + " periods is not a connected median graph: " +
                          std::get<median::MedianFailure>(r).describe());
    }
  }
}

PeriodicQuasiLine PeriodicQuasiLine::line() { return PeriodicQuasiLine(graphs::FiniteGraph(1), {{0, 0}}); }

graphs::FiniteGraph PeriodicQuasiLine::window(int first, int last) const {
  if (last < first) throw ContractError("window bounds are reversed");
  const int p = period_size();
  const int copies = last - first + 1;
  std::vector<graphs::Edge> edges;
  for (int c = 0; c < copies; ++c) {
    for (const auto& e : period_.edges()) edges.push_back({c * p + e.u, c * p + e.v});
    if (c + 1 < copies) {
      for (auto [a, b] : gluing_) edges.push_back({c * p + a, (c + 1) * p + b});
    }
  }
  std::sort(edges.begin(), edges.end());
  return graphs::FiniteGraph(copies * p, std::move(edges));
}

int PeriodicQuasiLine::distance(Point x, Point y) const {
  if (x == y) return 0;
  std::set<Point> seen{x};
  std::deque<std::pair<Point, int>> queue{{x, 0}};
  while (!queue.empty()) {
    auto [v, d] = queue.front();
    queue.pop_front();
    std::vector<Point> next;
    for (int b : period_.neighbors(v.second)) next.push_back({v.first, b});
    for (int b : right_[v.second]) next.push_back({v.first + 1, b});
    for (int a : left_[v.second]) next.push_back({v.first - 1, a});
    for (const Point& w : next) {
      if (w == y) return d + 1;
      if (seen.insert(w).second) queue.push_back({w, d + 1});
    }
  }
  throw InternalError("quasi-line is disconnected");
}

QLIsometry QLIsometry::identity(int period_size) { return {0, false, graphs::Permutation::identity(period_size)}; }

std::pair<long long, int> QLIsometry::operator()(std::pair<long long, int> x) const {
  return {reverses ? shift - x.first : shift + x.first, internal(x.second)};
}

QLIsometry operator*(const QLIsometry& g, const QLIsometry& h) {
  return {g.shift + (g.reverses ? -h.shift : h.shift), g.reverses != h.reverses, g.internal * h.internal};
}

QLIsometry QLIsometry::inverse() const {
  return {reverses ? shift : -shift, reverses, internal.inverse()};
}

void validate_isometry(const PeriodicQuasiLine& ql, const QLIsometry& g) {
  if (g.internal.size() != ql.period_size()) throw ContractError("internal map has the wrong size");
  if (!g.internal.is_automorphism(ql.period())) throw ContractError("internal map is not an automorphism of the period");
  const auto& glue = ql.gluing();
  for (auto [a, b] : glue) {
    std::pair<int, int> image =
        g.reverses ? std::make_pair(g.internal(b), g.internal(a)) : std::make_pair(g.internal(a), g.internal(b));
    if (!std::binary_search(glue.begin(), glue.end(), image)) {
      throw ContractError("isometry does not preserve the gluing");
    }
  }
}

TranslationData translation_data(const PeriodicQuasiLine& ql, const QLIsometry& g, int iteration_cap) {
  validate_isometry(ql, g);
  TranslationData out;
  if (g.reverses) {
    out.sigma = -1;
    return out;
  }
  const int order = permutation_order(g.internal);
  const long long step = g.shift * order;  // g^order shifts copies by `step`
  if (step == 0) return out;
  const Point base{0, 0};
  const int settle = ql.period_size() + 2;
  int previous = ql.distance(base, {step, 0});
  long long growth = -1;
  int stable = 0;
  for (int j = 1; j <= iteration_cap; ++j) {
    const int current = ql.distance(base, {step * (j + 1), 0});
    const long long delta = current - previous;
    previous = current;
    stable = delta == growth ? stable + 1 : 1;
    growth = delta;
    if (stable >= settle) {
      if (growth % order != 0) throw InternalError("translation length is not integral");
      out.h = (step > 0 ? 1 : -1) * growth / order;
      out.iterations = j;
      return out;
    }
  }
  throw_resource("translation length iterates", iteration_cap + 1, iteration_cap);
}

QuasiLineMorphism dinfty_from_quasiline_action(const PeriodicQuasiLine& ql, const std::map<std::string, QLIsometry>& gens,
                                               int word_length) {
  if (gens.empty()) throw ContractError("no generators");
  if (word_length < 1) throw ContractError("word length must be positive");
  QuasiLineMorphism out;
  out.word_length = word_length;
  std::vector<QLIsometry> letters;  // +1, -1, +2, -2, ...
  for (const auto& [label, g] : gens) {
    validate_isometry(ql, g);
    out.labels.push_back(label);
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  auto letter_of = [](std::size_t i) { return static_cast<int>(i / 2 + 1) * (i % 2 ? -1 : 1); };

  // Freely reduced words in shortlex order, with their values.
  std::vector<std::vector<int>> words{{}};
  std::vector<QLIsometry> values{QLIsometry::identity(ql.period_size())};
  for (std::size_t start = 0, len = 0; len < static_cast<std::size_t>(word_length); ++len) {
    const std::size_t end = words.size();
    for (std::size_t w = start; w < end; ++w) {
      for (std::size_t i = 0; i < letters.size(); ++i) {
        const int x = letter_of(i);
        if (!words[w].empty() && words[w].back() == -x) continue;
        std::vector<int> next = words[w];
        next.push_back(x);
        words.push_back(std::move(next));
        values.push_back(values[w] * letters[i]);
      }
    }
    start = end;
  }
  out.words = words.size();

  std::map<QLIsometry, TranslationData> cache;
  auto data = [&](const QLIsometry& g) -> const TranslationData& {
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, translation_data(ql, g)).first;
    return it->second;
  };

  std::optional<QLIsometry> g0;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (data(values[w]).sigma == -1) {
      out.g0 = words[w];
      g0 = values[w];
      break;
    }
  }
  out.translations_only = !g0.has_value();

  bool unbounded = false;
  for (const QLIsometry& v : values) unbounded = unbounded || (data(v).sigma == 1 && data(v).h != 0);
  if (!unbounded) {
    throw ContractError("every word of length <= " + std::to_string(word_length) + " has bounded orbits");
  }

  auto lambda = [&](const QLIsometry& g) -> long long {
    const TranslationData& t = data(g);
    return t.sigma == 1 ? t.h : data(g * *g0).h;
  };
  auto phi = [&](const QLIsometry& g) { return DinftyElement{lambda(g), data(g).sigma}; };

  for (std::size_t i = 0; i < out.labels.size(); ++i) out.phi[out.labels[i]] = phi(letters[2 * i]);

  for (std::size_t a = 0; a < values.size(); ++a) {
    const DinftyElement pa = phi(values[a]);
    if (pa.sign == 1 && pa.shift != 0) out.infinite_image = true;
    for (std::size_t b = 0; b < values.size(); ++b) {
      const QLIsometry ab = values[a] * values[b];
      const DinftyElement pb = phi(values[b]);
      const DinftyElement pab = phi(ab);
      ++out.pairs_checked;
      if (!(pab == pa * pb)) out.homomorphism = false;
      if (lambda(ab) != lambda(values[a]) + data(values[a]).sigma * lambda(values[b])) out.cocycle = false;
      if (data(values[a]).sigma == 1 && data(values[b]).sigma == 1 &&
          data(ab).h != data(values[a]).h + data(values[b]).h) {
        out.additive = false;
      }
    }
  }
  if (g0) {
    out.g0_square_trivial = data(*g0 * *g0).h == 0;
    const QLIsometry g0_inverse = g0->inverse();
    for (const QLIsometry& v : values) {
      if (data(v).sigma != 1) continue;
      ++out.conjugations_checked;
      if (data(*g0 * v * g0_inverse).h != -data(v).h) out.conjugation = false;
    }
  }
  return out;
}

}  // namespace medtk::quasiline
