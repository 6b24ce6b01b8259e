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

#include "medtk/graphprod/normal_form.hpp"

#include <algorithm>

#include "medtk/errors.hpp"

namespace medtk::graphprod {
namespace {

bool commute(const GraphProductSpec& spec, int u, int v) { return u != v && spec.gamma.adjacent(u, v); }

// One merge step; false when the word is already reduced.
bool merge_once(const GraphProductSpec& spec, std::vector<Syllable>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].vertex == w[i].vertex) {
        const FiniteGroup& g = spec.groups[w[i].vertex];
        w[i].element = g.multiply(w[i].element, w[j].element);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
        if (w[i].element == 0) w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
      if (!commute(spec, w[i].vertex, w[j].vertex)) break;
    }
  }
  return false;
}

// Least vertex sequence among commutation-equivalent orderings: repeatedly
// take the smallest-vertex syllable all of whose non-commuting predecessors
// are placed.
NormalForm canonical_shuffle(const GraphProductSpec& spec, const std::vector<Syllable>& w) {
  const std::size_t n = w.size();
  std::vector<char> placed(n, 0);
  NormalForm out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (placed[j]) continue;
      bool free = true;
      for (std::size_t i = 0; i < j && free; ++i) {
        free = placed[i] || commute(spec, w[i].vertex, w[j].vertex);
      }
      if (free && (best == n || w[j].vertex < w[best].vertex)) best = j;
    }
    placed[best] = 1;
    out.push_back(w[best]);
  }
  return out;
}

}  // namespace

NormalForm normal_form(const GraphProductSpec& spec, const std::vector<Syllable>& word) {
  std::vector<Syllable> w;
  w.reserve(word.size());
  for (const Syllable& s : word) {
    if (s.vertex < 0 || s.vertex >= spec.gamma.vertex_count()) throw InputError("syllable vertex out of range");
    if (s.element < 0 || s.element >= spec.groups[s.vertex].order()) throw InputError("syllable element out of range");
    if (s.element != 0) w.push_back(s);
  }
  while (merge_once(spec, w)) {
  }
  return canonical_shuffle(spec, w);
}

NormalForm multiply(const GraphProductSpec& spec, const NormalForm& a, const NormalForm& b) {
  std::vector<Syllable> w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normal_form(spec, w);
}

NormalForm inverse(const GraphProductSpec& spec, const NormalForm& a) {
  std::vector<Syllable> w(a.rbegin(), a.rend());
  for (Syllable& s : w) s.element = spec.groups[s.vertex].inverse(s.element);
  return normal_form(spec, w);
}

bool same_coset(const GraphProductSpec& spec, const NormalForm& g, const NormalForm& g2,
                const std::vector<int>& clique) {
  NormalForm d = multiply(spec, inverse(spec, g), g2);
  return std::all_of(d.begin(), d.end(), [&](const Syllable& s) {
    return std::find(clique.begin(), clique.end(), s.vertex) != clique.end();
  });
}

NormalForm coset_representative(const GraphProductSpec& spec, const NormalForm& g, const std::vector<int>& clique) {
  NormalForm w = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = w.size(); j-- > 0;) {
      if (std::find(clique.begin(), clique.end(), w[j].vertex) == clique.end()) continue;
      bool last = true;
      for (std::size_t k = j + 1; k < w.size() && last; ++k) last = commute(spec, w[j].vertex, w[k].vertex);
      if (!last) continue;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
      changed = true;
      break;
    }
  }
  return normal_form(spec, w);
}

std::string format_normal_form(const NormalForm& g) {
  if (g.empty()) return "1";
  std::string out;
  for (const Syllable& s : g) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(s.vertex) + "," + std::to_string(s.element) + ")";
  }
  return out;
}

}  // namespace medtk::graphprod
