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

#pragma once

#include <optional>
#include <vector>

#include "medtk/exact/rational.hpp"
#include "medtk/groups/presentation.hpp"
#include "medtk/groups/reidemeister_schreier.hpp"

namespace medtk::groups {

using exact::Rational;

// Element of D-infinity = Z x| Z/2 written as x -> sign * x + shift, with the
// product (t, e)(t', e') = (t + e t', e e').
struct DinftyElement {
  Rational shift = 0;
  int sign = 1;

  DinftyElement inverse() const { return {-sign * shift, sign}; }
  friend DinftyElement operator*(const DinftyElement& a, const DinftyElement& b) {
    return {a.shift + a.sign * b.shift, a.sign * b.sign};
  }
  friend bool operator==(const DinftyElement&, const DinftyElement&) = default;
};

// A morphism to D-infinity with infinite image: generator i maps to
// (lambda[i], sigma[i]), and `certificate` is a word with sigma = +1 and
// lambda = certificate_value != 0.
struct DinftyWitness {
  std::vector<int> sigma;
  std::vector<Rational> lambda;
  Word certificate;
  Rational certificate_value;
};

inline constexpr int kDefaultSigmaRankCap = 16;

DinftyElement evaluate(const std::vector<int>& sigma, const std::vector<Rational>& lambda,
                       std::span<const int> word);

// Searches every sigma: G -> Z/2 and every lambda solving the cocycle system
// for a pair whose lambda is non-zero on some Schreier generator of ker
// sigma. Returns the first one found (sigma in mask order over the mod-2
// basis, trivial sigma first). Throws ResourceError if the mod-2 rank of the
// abelianisation exceeds `rank_cap`.
std::optional<DinftyWitness> dinfty_witness(const Presentation& pres, int rank_cap = kDefaultSigmaRankCap);

// Re-checks a witness with exact arithmetic: every relator maps to the
// identity, the map is multiplicative on all pairs of letters and the
// certificate has sigma = +1 and the recorded non-zero lambda.
bool verify_dinfty_witness(const Presentation& pres, const DinftyWitness& w);

struct FwnVerdict {
  int n = 0;
  bool holds = true;
  // The virtually abelian hypothesis is the caller's assertion.
  bool hypothesis_machine_checked = false;
  std::vector<int> subgroup_indices;  // index of each conjugacy class examined
  std::optional<CosetTable> failing_subgroup;
  std::optional<SubgroupPresentation> failing_presentation;
  std::optional<DinftyWitness> witness;  // over failing_presentation's generators
  Word witness_in_group;                 // the certificate as a word in G
};

// Fixed-point criterion for virtually abelian groups: fails iff some subgroup
// of index <= n has a morphism to D-infinity with infinite image.
FwnVerdict fwn_virtually_abelian(const Presentation& pres, int n);

}  // namespace medtk::groups
