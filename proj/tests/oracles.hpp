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

// Independent reference computations used only by the tests.

#ifndef LORENTZ_TESTS_ORACLES_HPP_
#define LORENTZ_TESTS_ORACLES_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "lorentz/poly_core.hpp"
#include "lorentz/strata.hpp"

namespace lorentz::oracle {

// exp(-s) * sum_k (s L)^k / k!, truncated once terms drop below 1e-18.
inline Eigen::MatrixXd taylor_flow(const Eigen::MatrixXd& l, double s) {
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(l.rows(), l.cols());
  Eigen::MatrixXd sum = term;
  for (int k = 1; k < 200; ++k) {
    term = term * l * (s / k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  return std::exp(-s) * sum;
}

inline Eigen::VectorXd eigen_eigenvalues_desc(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  Eigen::VectorXd ev = solver.eigenvalues().reverse();
  return ev;
}

// Closed-form discriminants, ascending coefficients.
inline double quadratic_disc(double c, double b, double a) { return b * b - 4 * a * c; }
inline double cubic_disc(double d, double c, double b, double a) {
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d +
         18 * a * b * c * d;
}

// All d-subsets with nonzero bits below n.
inline std::vector<Mask> all_subsets(int n, int d) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) == d) out.push_back(s);
  }
  return out;
}

// Matroid test through independent sets: the down-closure of the family must
// satisfy augmentation and its maximal members must be exactly the family.
inline bool matroid_by_augmentation(int n, const std::set<Mask>& bases) {
  if (bases.empty()) return false;
  std::set<Mask> independent;
  for (Mask b : bases) {
    for (Mask s = b;; s = (s - 1) & b) {
      independent.insert(s);
      if (s == 0) break;
    }
  }
  for (Mask i : independent) {
    for (Mask j : independent) {
      if (std::popcount(i) >= std::popcount(j)) continue;
      bool augmented = false;
      for (int x = 0; x < n && !augmented; ++x) {
        const Mask bit = Mask{1} << x;
        if ((j & bit) && !(i & bit) && independent.count(i | bit)) augmented = true;
      }
      if (!augmented) return false;
    }
  }
  return true;
}

inline std::vector<Exponent> simplex_points(int n, int d) {
  std::vector<Exponent> out;
  Exponent alpha(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      alpha[i] = left;
      out.push_back(alpha);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      alpha[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

// M-convexity through the base polyhedron: rho(A) = max_{alpha in J} alpha(A)
// must be submodular and J must be every lattice point x of Delta_n^d with
// x(A) <= rho(A) for all A.
inline bool m_convex_by_polyhedron(int n, int d, const std::set<Exponent>& points) {
  if (points.empty()) return false;
  const Mask full = (Mask{1} << n) - 1;
  std::vector<int> rho(full + 1, 0);
  auto weight = [n](const Exponent& x, Mask a) {
    int w = 0;
    for (int i = 0; i < n; ++i) {
      if (a & (Mask{1} << i)) w += x[i];
    }
    return w;
  };
  for (Mask a = 0; a <= full; ++a) {
    int best = -1;
    for (const Exponent& x : points) best = std::max(best, weight(x, a));
    rho[a] = best;
  }
  for (Mask a = 0; a <= full; ++a) {
    for (Mask b = 0; b <= full; ++b) {
      if (rho[a] + rho[b] < rho[a | b] + rho[a & b]) return false;
    }
  }
  for (const Exponent& x : simplex_points(n, d)) {
    bool inside = true;
    for (Mask a = 0; a <= full && inside; ++a) inside = weight(x, a) <= rho[a];
    if (inside != (points.count(x) > 0)) return false;
  }
  return true;
}

// Condition (2') sampled: the smallest discriminant of the quadratic
// d^S f(t 1 - y) over all |S| = d - 2 and `count` random unit sum-zero y on the
// remaining variables, scaled by the squared leading coefficient.
inline double min_quadratic_disc(const MultiAffinePoly& f, int count, std::uint64_t seed) {
  const int n = f.n();
  const int d = f.d();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst = INFINITY;
  for (Mask s : all_subsets(n, d - 2)) {
    const MultiAffinePoly q = partial_derivative_set(f, s);
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
      if (!(s & (Mask{1} << i))) rest.push_back(i);
    }
    const int m = static_cast<int>(rest.size());
    for (int k = 0; k < count; ++k) {
      std::vector<double> z(m);
      double mean = 0;
      for (double& v : z) mean += (v = normal(rng));
      mean /= m;
      double norm = 0;
      for (double& v : z) norm += (v -= mean) * v;
      norm = std::sqrt(norm);
      std::vector<double> y(n, 0.0);
      for (int i = 0; i < m; ++i) y[rest[i]] = z[i] / norm;
      // q(t 1 - y) = a t^2 + b t + c evaluated from three points.
      auto at = [&](double t) {
        std::vector<double> p(n);
        for (int i = 0; i < n; ++i) p[i] = t - y[i];
        return evaluate(q, p);
      };
      const double c = at(0);
      const double a = (at(1) + at(-1)) / 2 - c;
      const double b = (at(1) - at(-1)) / 2;
      worst = std::min(worst, quadratic_disc(c, b, a) / (a * a));
    }
  }
  return worst;
}

}  // namespace lorentz::oracle

#endif  // LORENTZ_TESTS_ORACLES_HPP_
