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

#include "medtk/groups/coxeter.hpp"

#include "medtk/errors.hpp"

namespace medtk::groups {
namespace {

// g h g^-1 (target)^-1 as a relator.
Word conjugation(int g, int h, const Word& target) {
  Word w{g, h, -g};
  Word back = inverse(target);
  w.insert(w.end(), back.begin(), back.end());
  return w;
}

Word commutator(int a, int b) { return {a, b, -a, -b}; }

}  // namespace

Presentation build_affine_coxeter(int n) {
  if (n < 1) throw ContractError("affine Coxeter rank must be positive");
  if (n > kAffineCoxeterCap) throw_resource("affine Coxeter rank", n, kAffineCoxeterCap);
  auto l = [](int i) { return i; };
  auto s = [n](int i) { return n + i; };
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("l" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));

  std::vector<Word> rels;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) rels.push_back(commutator(l(i), l(j)));
  }
  for (int i = 1; i <= n; ++i) {
    rels.push_back({s(i), s(i)});
    for (int j = i + 1; j <= n; ++j) {
      if (j == i + 1) {
        rels.push_back({s(i), s(j), s(i), s(j), s(i), s(j)});
      } else {
        rels.push_back({s(i), s(j), s(i), s(j)});
      }
    }
  }
  // s_j swaps coordinates j and j+1; l_i = e_i - e_{i+1}.
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      Word image;
      if (j == i) {
        image = {-l(i)};
      } else if (j == i - 1) {
        image = {l(i - 1), l(i)};
      } else if (j == i + 1) {
        image = {l(i), l(i + 1)};
      } else {
        image = {l(i)};
      }
      rels.push_back(conjugation(s(j), l(i), image));
    }
  }
  return Presentation(2 * n, std::move(rels), std::move(names));
}

Presentation lattice_by_d4() {
  enum { a = 1, b, c, x, y, z };
  std::vector<Word> rels{
      commutator(a, b), commutator(b, c), commutator(a, c),
      {x, x}, {y, y}, {z, z}, commutator(x, y),
      conjugation(z, x, {y}), conjugation(z, y, {x}),
      conjugation(x, a, {-a}), conjugation(y, a, {-a}), conjugation(z, a, {a}),
      conjugation(x, b, {-b}), conjugation(y, b, {-a, b}), conjugation(z, b, {c}),
      conjugation(x, c, {-a, c}), conjugation(y, c, {-c}), conjugation(z, c, {b}),
  };
  return Presentation(6, std::move(rels), {"a", "b", "c", "x", "y", "z"});
}

std::vector<D4Quotient> verify_d4_quotients(std::size_t coset_limit) {
  enum { x = 4, y = 5, z = 6 };
  std::vector<D4Quotient> cases{
      {"x=y=1", {{x}, {y}}, std::nullopt, {}, std::nullopt},
      {"z=1", {{z}}, std::nullopt, {}, std::nullopt},
      {"x=yz", {{x, -z, -y}}, std::nullopt, {}, std::nullopt},
  };
  const Presentation base = lattice_by_d4();
  for (D4Quotient& q : cases) {
    const Presentation quotient = base.with_relators(q.added);
    try {
      CosetTable t = todd_coxeter(quotient, {}, coset_limit, &q.stats);
      q.order = t.coset_count();
    } catch (const ResourceError&) {
      q.infinite_witness = dinfty_witness(quotient);
      if (q.infinite_witness && !verify_dinfty_witness(quotient, *q.infinite_witness)) {
        throw InternalError("D-infinity witness for a quotient failed verification");
      }
    }
  }
  return cases;
}

bool fw_plus_cyclic(long long q, int n) {
  if (q < 2) throw ContractError("cyclic order must be at least 2");
  if (n < 1) throw ContractError("cubical dimension must be positive");
  for (long long d = 2; d <= n; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

}  // namespace medtk::groups
