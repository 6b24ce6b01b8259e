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

#include "medtk/groups/reidemeister_schreier.hpp"

#include "medtk/errors.hpp"

namespace medtk::groups {

Word SubgroupPresentation::to_parent(std::span<const int> w) const {
  Word out;
  for (int x : w) {
    const Word& g = generator_words[std::abs(x) - 1];
    Word piece = x > 0 ? g : inverse(g);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

SubgroupPresentation reidemeister_schreier(const Presentation& pres, const CosetTable& table) {
  if (table.generator_count() != pres.generator_count()) {
    throw ContractError("coset table and presentation disagree on the generator count");
  }
  if (!table.closed_under(pres.relators())) throw ContractError("coset table is not closed under the relators");
  const int k = pres.generator_count();
  const int n = table.coset_count();

  // Breadth-first spanning tree; tree[c * k + x - 1] marks the edge c --x--> cx.
  std::vector<Word> transversal(n);
  std::vector<char> reached(n, 0), tree(static_cast<std::size_t>(n) * k, 0);
  std::vector<int> order{0};
  reached[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int c = order[i];
    for (int col = 0; col < 2 * k; ++col) {
      const int d = table.at_column(c, col);
      if (reached[d]) continue;
      reached[d] = 1;
      const int x = column_letter(col);
      transversal[d] = transversal[c];
      transversal[d].push_back(x);
      if (x > 0) {
        tree[static_cast<std::size_t>(c) * k + x - 1] = 1;
      } else {
        tree[static_cast<std::size_t>(d) * k - x - 1] = 1;
      }
      order.push_back(d);
    }
  }

  std::vector<int> label(static_cast<std::size_t>(n) * k, 0);
  std::vector<Word> words;
  std::vector<std::string> names;
  for (int c = 0; c < n; ++c) {
    for (int x = 1; x <= k; ++x) {
      const std::size_t slot = static_cast<std::size_t>(c) * k + x - 1;
      if (tree[slot]) continue;
      label[slot] = static_cast<int>(words.size()) + 1;
      Word w = transversal[c];
      w.push_back(x);
      Word back = inverse(transversal[table.act(c, x)]);
      w.insert(w.end(), back.begin(), back.end());
      words.push_back(free_reduce(w));
      names.push_back(pres.names()[x - 1] + "@" + std::to_string(c));
    }
  }

  std::vector<Word> relators;
  for (int c = 0; c < n; ++c) {
    for (const Word& r : pres.relators()) {
      Word rewritten;
      int at = c;
      for (int x : r) {
        if (x > 0) {
          if (int s = label[static_cast<std::size_t>(at) * k + x - 1]) rewritten.push_back(s);
          at = table.act(at, x);
        } else {
          const int from = table.act(at, x);
          if (int s = label[static_cast<std::size_t>(from) * k - x - 1]) rewritten.push_back(-s);
          at = from;
        }
      }
      relators.push_back(std::move(rewritten));
    }
  }
  SubgroupPresentation out{Presentation(static_cast<int>(words.size()), std::move(relators), std::move(names)),
                           std::move(words), std::move(transversal), std::move(label)};
  return out;
}

}  // namespace medtk::groups
