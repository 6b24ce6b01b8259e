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

#include "medtk/wallspace/wallspace.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "medtk/errors.hpp"

namespace medtk::wallspace {

Wallspace::Wallspace(int point_count, std::vector<Bitset> sides) : points_(point_count) {
  if (point_count <= 0) throw InputError("wallspace needs at least one point");
  const auto n = static_cast<std::size_t>(point_count);
  std::set<Bitset> seen;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    Bitset s = std::move(sides[i]);
    if (s.size() != n) throw InputError("wall " + std::to_string(i) + " has the wrong universe");
    if (!s.test(0)) s = s.complement();
    if (s.count() == n) throw InputError("wall " + std::to_string(i) + " has an empty side");
    if (!seen.insert(s).second) throw InputError("wall " + std::to_string(i) + " is repeated");
    walls_.push_back(std::move(s));
  }
  const std::size_t k = walls_.size();
  crossing_.assign(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    Bitset ci = walls_[i].complement();
    for (std::size_t j = i + 1; j < k; ++j) {
      Bitset cj = walls_[j].complement();
      bool c = walls_[i].intersects(walls_[j]) && walls_[i].intersects(cj) &&
               ci.intersects(walls_[j]) && ci.intersects(cj);
      crossing_[i][j] = crossing_[j][i] = c ? 1 : 0;
    }
  }
}

bool Wallspace::separates_points() const {
  for (int p = 0; p < points_; ++p) {
    for (int q = p + 1; q < points_; ++q) {
      bool any = false;
      for (std::size_t w = 0; w < walls_.size() && !any; ++w) any = separates(w, p, q);
      if (!any) return false;
    }
  }
  return true;
}

Wallspace walls_of_median(const median::MedianGraph& mg) {
  std::vector<Bitset> sides;
  for (const auto& h : mg.hyperplanes()) sides.push_back(h.minus);
  return Wallspace(mg.vertex_count(), std::move(sides));
}

Cubulation cubulate(const Wallspace& ws, int wall_cap) {
  const int k = static_cast<int>(ws.wall_count());
  if (k > wall_cap) throw_resource("cubulation wall count", k, wall_cap);
  if (k > 31) throw_resource("cubulation wall count", k, 31);

  // sides[2i] = canonical side of wall i, sides[2i+1] = its complement
  std::vector<Bitset> sides;
  for (const Bitset& w : ws.walls()) {
    sides.push_back(w);
    sides.push_back(w.complement());
  }
  std::vector<std::vector<char>> meet(2 * k, std::vector<char>(2 * k, 1));
  for (int a = 0; a < 2 * k; ++a) {
    for (int b = a + 1; b < 2 * k; ++b) {
      meet[a][b] = meet[b][a] = sides[a].intersects(sides[b]) ? 1 : 0;
    }
  }
  const auto bit = [k](int wall) { return std::uint32_t{1} << (k - 1 - wall); };

  std::vector<std::uint32_t> all;
  std::vector<int> choice(k, 0);
  std::function<void(int, std::uint32_t)> extend = [&](int i, std::uint32_t mask) {
    if (i == k) {
      all.push_back(mask);
      return;
    }
    for (int s = 0; s < 2; ++s) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = meet[2 * i + s][2 * j + choice[j]] != 0;
      if (!ok) continue;
      choice[i] = s;
      extend(i + 1, s ? mask | bit(i) : mask);
    }
  };
  extend(0, 0);  // choice order makes `all` ascending

  const auto locate = [&](std::uint32_t m) -> int {
    auto it = std::lower_bound(all.begin(), all.end(), m);
    return it != all.end() && *it == m ? static_cast<int>(it - all.begin()) : -1;
  };
  std::vector<int> principal(ws.point_count());
  for (int p = 0; p < ws.point_count(); ++p) {
    std::uint32_t m = 0;
    for (int i = 0; i < k; ++i) {
      if (!ws.wall(i).test(static_cast<std::size_t>(p))) m |= bit(i);
    }
    principal[p] = locate(m);
    if (principal[p] < 0) throw InternalError("principal orientation is inconsistent");
  }

  // Component of the principal orientations under single flips.
  std::vector<int> comp_index(all.size(), -1);
  std::deque<int> queue;
  for (int v : principal) {
    if (comp_index[v] < 0) {
      comp_index[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      int w = locate(all[v] ^ bit(i));
      if (w >= 0 && comp_index[w] < 0) {
        comp_index[w] = 0;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::uint32_t> kept;
  std::size_t dropped = 0;
  for (std::size_t v = 0; v < all.size(); ++v) {
    if (comp_index[v] >= 0) {
      comp_index[v] = static_cast<int>(kept.size());
      kept.push_back(all[v]);
    } else {
      ++dropped;
    }
  }
  if (kept.size() > static_cast<std::size_t>(median::kDefaultMedianCap)) {
    throw_resource("cubulation vertex count", static_cast<long long>(kept.size()),
                   median::kDefaultMedianCap);
  }
  std::vector<graphs::Edge> edges;
  for (std::size_t v = 0; v < kept.size(); ++v) {
    for (int i = 0; i < k; ++i) {
      std::uint32_t m = kept[v] ^ bit(i);
      if (m < kept[v]) continue;
      auto it = std::lower_bound(kept.begin(), kept.end(), m);
      if (it != kept.end() && *it == m) {
        edges.push_back({static_cast<int>(v), static_cast<int>(it - kept.begin())});
      }
    }
  }
  graphs::FiniteGraph g(static_cast<int>(kept.size()), std::move(edges));
  auto certified = median::certify_median(g);
  if (auto* f = std::get_if<median::MedianFailure>(&certified)) {
    throw InternalError("cubulation is not median: " + f->describe());
  }
  Cubulation out{std::get<median::MedianGraph>(std::move(certified)), std::move(kept), {}, dropped};
  for (int p = 0; p < ws.point_count(); ++p) out.point_vertex.push_back(comp_index[principal[p]]);
  return out;
}

int max_crossing_family(const Wallspace& ws) {
  const int k = static_cast<int>(ws.wall_count());
  if (k > 24) throw_resource("crossing-family search wall count", k, 24);
  int best = 0;
  std::vector<int> chosen;
  std::function<void(int)> grow = [&](int from) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int i = from; i < k; ++i) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](int j) { return ws.crosses(i, j); });
      if (!ok) continue;
      chosen.push_back(i);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return best;
}

}  // namespace medtk::wallspace
