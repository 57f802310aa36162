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

#include "lorentz/strata.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lorentz/error.hpp"

namespace lorentz {

MConvexVerdict is_m_convex(const MConvexCandidate& j) {
  if (j.points.empty()) throw DomainError("M-convexity of an empty set");
  for (const Exponent& alpha : j.points) {
    if (static_cast<int>(alpha.size()) != j.n) throw DomainError("point of wrong length");
    int total = 0;
    for (int a : alpha) {
      if (a < 0) throw DomainError("negative exponent");
      total += a;
    }
    if (total != j.d) throw DomainError("point not in Delta_n^d");
  }

  Exponent moved;
  for (auto a_it = j.points.rbegin(); a_it != j.points.rend(); ++a_it) {
    const Exponent& alpha = *a_it;
    for (auto b_it = j.points.rbegin(); b_it != j.points.rend(); ++b_it) {
      const Exponent& beta = *b_it;
      for (int i = 0; i < j.n; ++i) {
        if (alpha[i] <= beta[i]) continue;
        bool exchanged = false;
        for (int k = 0; k < j.n && !exchanged; ++k) {
          if (alpha[k] >= beta[k]) continue;
          moved = alpha;
          --moved[i];
          ++moved[k];
          exchanged = j.points.contains(moved);
        }
        if (!exchanged) return {false, ExchangeWitness{alpha, beta, i}};
      }
    }
  }
  return {true, std::nullopt};
}

MatroidVerdict is_matroid_bases(const BasisFamily& b) {
  if (b.bases.empty()) throw DomainError("matroid check of an empty family");
  for (Mask s : b.bases) {
    if (std::popcount(s) != b.d || (b.n < 32 && (s >> b.n) != 0)) {
      throw DomainError("family member is not a d-subset of [n]");
    }
  }
  for (Mask b1 : b.bases) {
    for (Mask b2 : b.bases) {
      for (Mask rest = b1 & ~b2; rest != 0; rest &= rest - 1) {
        const int x = std::countr_zero(rest);
        bool exchanged = false;
        for (Mask cand = b2 & ~b1; cand != 0 && !exchanged; cand &= cand - 1) {
          const Mask y = cand & (~cand + 1);
          exchanged = b.bases.contains((b1 & ~(Mask{1} << x)) | y);
        }
        if (!exchanged) return {false, BasisExchangeWitness{b1, b2, x}};
      }
    }
  }
  return {true, std::nullopt};
}

MultiaffineStratum support_stratum(const MultiAffinePoly& f, double rel_tol) {
  double max_abs = 0.0;
  for (double c : f.coeffs()) max_abs = std::max(max_abs, std::abs(c));
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] < -rel_tol * max_abs) throw NegativeCoefficientError(k, f[k]);
  }
  MultiaffineStratum out;
  out.support.n = f.n();
  out.support.d = f.d();
  for (Mask s : support(f, rel_tol)) out.support.bases.insert(s);
  if (out.support.bases.empty()) throw DomainError("zero polynomial has no stratum");
  out.verdict = is_matroid_bases(out.support);
  return out;
}

HomStratum support_stratum(const HomPoly& f, double rel_tol) {
  double max_abs = 0.0;
  for (const auto& [alpha, c] : f.terms()) max_abs = std::max(max_abs, std::abs(c));
  std::size_t index = 0;
  for (const auto& [alpha, c] : f.terms()) {
    if (c < -rel_tol * max_abs) throw NegativeCoefficientError(index, c);
    ++index;
  }
  HomStratum out;
  out.support.n = f.n();
  out.support.d = f.d();
  for (const Exponent& alpha : support(f, rel_tol)) out.support.points.insert(alpha);
  if (out.support.points.empty()) throw DomainError("zero polynomial has no stratum");
  out.verdict = is_m_convex(out.support);
  return out;
}

}  // namespace lorentz
