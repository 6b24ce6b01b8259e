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

#include "medtk/groups/low_index.hpp"

#include <algorithm>

#include "medtk/errors.hpp"

namespace medtk::groups {
namespace {

class Search {
 public:
  Search(const Presentation& pres, int n, std::size_t node_cap)
      : relators_(pres.relators()), width_(2 * pres.generator_count()), max_(n), node_cap_(node_cap) {}

  void run() {
    std::vector<int> table(static_cast<std::size_t>(width_) * max_, -1);
    descend(table, 1);
    std::sort(found_.begin(), found_.end(), [](const CosetTable& a, const CosetTable& b) {
      if (a.coset_count() != b.coset_count()) return a.coset_count() < b.coset_count();
      return a < b;
    });
  }

  std::vector<CosetTable> take() { return std::move(found_); }

 private:
  int& at(std::vector<int>& t, int c, int col) const { return t[static_cast<std::size_t>(c) * width_ + col]; }

  // Applies every forced entry. False on a contradiction.
  bool deduce(std::vector<int>& t, int used) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < used; ++c) {
        for (const Word& r : relators_) {
          int f = c, i = 0, j = static_cast<int>(r.size()) - 1;
          while (i <= j && at(t, f, letter_column(r[i])) >= 0) f = at(t, f, letter_column(r[i++]));
          if (i > j) {
            if (f != c) return false;
            continue;
          }
          int b = c;
          while (j > i && at(t, b, letter_column(r[j]) ^ 1) >= 0) b = at(t, b, letter_column(r[j--]) ^ 1);
          if (j == i) {
            const int col = letter_column(r[i]);
            if (at(t, b, col ^ 1) >= 0) return false;
            at(t, f, col) = b;
            at(t, b, col ^ 1) = f;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  void descend(std::vector<int>& t, int used) {
    if (++nodes_ > node_cap_) {
      throw_resource("low-index search nodes", static_cast<long long>(nodes_), static_cast<long long>(node_cap_));
    }
    if (!deduce(t, used)) return;
    for (int c = 0; c < used; ++c) {
      for (int col = 0; col < width_; ++col) {
        if (at(t, c, col) >= 0) continue;
        for (int d = 0; d <= used && d < max_; ++d) {
          if (d < used && at(t, d, col ^ 1) >= 0) continue;
          std::vector<int> next = t;
          at(next, c, col) = d;
          at(next, d, col ^ 1) = c;
          descend(next, d == used ? used + 1 : used);
        }
        return;
      }
    }
    complete(t, used);
  }

  void complete(const std::vector<int>& t, int used) {
    CosetTable table(width_ / 2, std::vector<int>(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(used) * width_));
    if (!table.closed_under(relators_)) return;
    if (!table.is_standard()) throw InternalError("low-index search produced a non-standard table");
    for (int base = 1; base < used; ++base) {
      if (table.standardized(base) < table) return;
    }
    found_.push_back(std::move(table));
  }

  const std::vector<Word>& relators_;
  int width_;
  int max_;
  std::size_t node_cap_;
  std::size_t nodes_ = 0;
  std::vector<CosetTable> found_;
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& pres, int n, std::size_t node_cap) {
  if (n < 1) throw ContractError("low-index bound must be positive");
  if (n > kLowIndexCap) throw_resource("low-index bound", n, kLowIndexCap);
  if (pres.generator_count() == 0) return {CosetTable(0, {})};
  Search s(pres, n, node_cap);
  s.run();
  return s.take();
}

}  // namespace medtk::groups
