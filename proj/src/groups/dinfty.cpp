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

#include "medtk/groups/dinfty.hpp"

#include <algorithm>

#include "medtk/errors.hpp"
#include "medtk/groups/abelian.hpp"
#include "medtk/groups/low_index.hpp"

namespace medtk::groups {
namespace {

// The table of ker(sigma): one coset, or two swapped by the generators with
// sigma = -1.
CosetTable kernel_table(const std::vector<int>& sigma) {
  const int k = static_cast<int>(sigma.size());
  bool trivial = std::all_of(sigma.begin(), sigma.end(), [](int s) { return s == 1; });
  if (trivial) return CosetTable(k, std::vector<int>(2 * k, 0));
  std::vector<int> data(4 * k);
  for (int c = 0; c < 2; ++c) {
    for (int col = 0; col < 2 * k; ++col) data[2 * k * c + col] = sigma[col / 2] == 1 ? c : 1 - c;
  }
  return CosetTable(k, std::move(data));
}

// Rows lambda(r) = 0 of the cocycle system for a fixed sigma.
exact::RationalMatrix cocycle_system(const Presentation& pres, const std::vector<int>& sigma) {
  exact::RationalMatrix rows;
  for (const Word& r : pres.relators()) {
    std::vector<Rational> row(sigma.size(), Rational(0));
    int prefix = 1;
    for (int x : r) {
      const int g = std::abs(x) - 1;
      // lambda(x^-1) = -sigma(x) lambda(x)
      row[g] += x > 0 ? prefix : -prefix * sigma[g];
      prefix *= sigma[g];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

DinftyElement evaluate(const std::vector<int>& sigma, const std::vector<Rational>& lambda,
                       std::span<const int> word) {
  DinftyElement out;
  for (int x : word) {
    DinftyElement g{lambda[std::abs(x) - 1], sigma[std::abs(x) - 1]};
    out = out * (x > 0 ? g : g.inverse());
  }
  return out;
}

std::optional<DinftyWitness> dinfty_witness(const Presentation& pres, int rank_cap) {
  const int k = pres.generator_count();
  auto basis = mod2_homomorphism_basis(pres);
  const int rank = static_cast<int>(basis.size());
  if (rank > rank_cap) throw_resource("mod-2 rank for the sigma search", rank, rank_cap);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rank); ++mask) {
    std::vector<int> bits(k, 0);
    for (int b = 0; b < rank; ++b) {
      if (mask >> b & 1) {
        for (int g = 0; g < k; ++g) bits[g] ^= basis[b][g];
      }
    }
    std::vector<int> sigma(k);
    for (int g = 0; g < k; ++g) sigma[g] = bits[g] ? -1 : 1;
    auto solutions = exact::nullspace(cocycle_system(pres, sigma), static_cast<std::size_t>(k));
    if (solutions.empty()) continue;
    SubgroupPresentation kernel = reidemeister_schreier(pres, kernel_table(sigma));
    for (const auto& v : solutions) {
      auto scaled = exact::primitive_integer_vector(v);
      std::vector<Rational> lambda(scaled.begin(), scaled.end());
      for (const Word& w : kernel.generator_words) {
        DinftyElement e = evaluate(sigma, lambda, w);
        if (e.sign != 1) throw InternalError("Schreier generator of ker sigma has sign -1");
        if (e.shift != 0) return DinftyWitness{sigma, lambda, w, e.shift};
      }
    }
  }
  return std::nullopt;
}

bool verify_dinfty_witness(const Presentation& pres, const DinftyWitness& w) {
  const int k = pres.generator_count();
  if (static_cast<int>(w.sigma.size()) != k || static_cast<int>(w.lambda.size()) != k) return false;
  for (int s : w.sigma) {
    if (s != 1 && s != -1) return false;
  }
  for (const Word& r : pres.relators()) {
    if (!(evaluate(w.sigma, w.lambda, r) == DinftyElement{})) return false;
  }
  for (int a = -k; a <= k; ++a) {
    for (int b = -k; b <= k; ++b) {
      if (a == 0 || b == 0) continue;
      Word ab{a, b};
      if (!(evaluate(w.sigma, w.lambda, ab) ==
            evaluate(w.sigma, w.lambda, Word{a}) * evaluate(w.sigma, w.lambda, Word{b}))) {
        return false;
      }
    }
  }
  DinftyElement c = evaluate(w.sigma, w.lambda, w.certificate);
  return c.sign == 1 && c.shift != 0 && c.shift == w.certificate_value;
}

FwnVerdict fwn_virtually_abelian(const Presentation& pres, int n) {
  FwnVerdict verdict;
  verdict.n = n;
  for (const CosetTable& table : low_index_subgroups(pres, n)) {
    verdict.subgroup_indices.push_back(table.coset_count());
    SubgroupPresentation sub = reidemeister_schreier(pres, table);
    auto witness = dinfty_witness(sub.presentation);
    if (!witness) continue;
    if (!verify_dinfty_witness(sub.presentation, *witness)) throw InternalError("D-infinity witness failed verification");
    Word in_group = sub.to_parent(witness->certificate);
    if (!table.contains(in_group)) throw InternalError("witness word does not lie in the subgroup");
    verdict.holds = false;
    verdict.failing_subgroup = table;
    verdict.failing_presentation = std::move(sub);
    verdict.witness = std::move(witness);
    verdict.witness_in_group = std::move(in_group);
    break;
  }
  return verdict;
}

}  // namespace medtk::groups
