// Copyright 2026 The Authors.
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

#ifndef LORENTZ_STRATA_HPP_
#define LORENTZ_STRATA_HPP_

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "lorentz/poly_core.hpp"

namespace lorentz {

// A finite subset of Delta_n^d = {alpha in N^n : sum alpha = d}.
struct MConvexCandidate {
  int n = 0;
  int d = 0;
  std::set<Exponent> points;
};

// A family of d-subsets of [n].
struct BasisFamily {
  int n = 0;
  int d = 0;
  std::set<Mask> bases;
};

// alpha, beta in J and index i with alpha_i > beta_i such that no j with
// alpha_j < beta_j has alpha - e_i + e_j in J.
struct ExchangeWitness {
  Exponent alpha;
  Exponent beta;
  int i = 0;
};

// B1, B2 in the family and x in B1 \ B2 such that no y in B2 \ B1 gives
// (B1 - x) + y in the family.
struct BasisExchangeWitness {
  Mask b1 = 0;
  Mask b2 = 0;
  int x = 0;
};

struct MConvexVerdict {
  bool m_convex = false;
  std::optional<ExchangeWitness> witness;
};

struct MatroidVerdict {
  bool matroid = false;
  std::optional<BasisExchangeWitness> witness;
};

// Exchange axiom over all (alpha, beta, i). Points are visited in
// lexicographically decreasing order, so the reported witness is the first
// violation in that order. Throws DomainError on an empty or malformed set.
MConvexVerdict is_m_convex(const MConvexCandidate& j);

// Basis exchange axiom; bases are visited in colex order.
MatroidVerdict is_matroid_bases(const BasisFamily& b);

struct MultiaffineStratum {
  BasisFamily support;
  MatroidVerdict verdict;
};

struct HomStratum {
  MConvexCandidate support;
  MConvexVerdict verdict;
};

// Support at relative tolerance `rel_tol` (see support()), tagged with its
// exchange verdict. A coefficient below -rel_tol * max|c| raises
// NegativeCoefficientError carrying the basis index (multiaffine) or the
// position in the term map (HomPoly).
MultiaffineStratum support_stratum(const MultiAffinePoly& f,
                                   double rel_tol = kSupportTolerance);
HomStratum support_stratum(const HomPoly& f, double rel_tol = kSupportTolerance);

}  // namespace lorentz

#endif  // LORENTZ_STRATA_HPP_
