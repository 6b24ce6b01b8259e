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

#include "medtk/graphprod/finite_group.hpp"

#include <deque>

#include "medtk/errors.hpp"

namespace medtk::graphprod {

FiniteGroup FiniteGroup::cyclic(int q) {
  if (q < 2) throw ContractError("cyclic vertex group order must be at least 2");
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) t[a][b] = (a + b) % q;
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  if (n < 1) throw InputError("group table is empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
    for (int x : row) {
      if (x < 0 || x >= n) throw InputError("group table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) throw InputError("element 0 is not the identity");
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw InputError("group table has a one-sided inverse");
        inverse_[a] = b;
      }
    }
    if (inverse_[a] < 0) throw InputError("group table element has no inverse");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw InputError("group table is not associative");
      }
    }
  }
  finish();
}

void FiniteGroup::finish() {
  const int n = order();
  std::vector<char> in(n, 0);
  in[0] = 1;
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a) {
        if (!in[a]) continue;
        for (int g : generators_) {
          int p = table_[a][g];
          if (!in[p]) in[p] = 1, grew = true;
        }
      }
    }
  };
  for (int a = 1; a < n; ++a) {
    if (in[a]) continue;
    generators_.push_back(a);
    close();
  }
  words_.assign(n, {});
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      int p = table_[a][generators_[i]];
      if (seen[p]) continue;
      seen[p] = 1;
      words_[p] = words_[a];
      words_[p].push_back(static_cast<int>(i));
      queue.push_back(p);
    }
  }
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int p = a; p != 0; p = table_[p][a]) ++k;
  return k;
}

bool FiniteGroup::is_cyclic_table() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) {
      if (table_[a][b] != (a + b) % order()) return false;
    }
  }
  return true;
}

void GraphProductSpec::validate() const {
  if (static_cast<int>(groups.size()) != gamma.vertex_count()) {
    throw InputError("graph product needs one vertex group per vertex of gamma");
  }
}

GraphProductSpec GraphProductSpec::cyclic(graphs::FiniteGraph gamma, const std::vector<int>& orders) {
  GraphProductSpec s{std::move(gamma), {}};
  for (int q : orders) {
    if (q < 2) throw InputError("vertex group order must be at least 2");
    s.groups.push_back(FiniteGroup::cyclic(q));
  }
  s.validate();
  return s;
}

}  // namespace medtk::graphprod
