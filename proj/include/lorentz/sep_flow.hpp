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

#ifndef LORENTZ_SEP_FLOW_HPP_
#define LORENTZ_SEP_FLOW_HPP_

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lorentz/poly_core.hpp"

namespace lorentz {

// Rates q_{ij} >= 0 on unordered pairs i < j of [n] (0-based). Validated on
// construction: entries nonnegative, total 1 within 1e-12, and the graph of
// positive-rate pairs connected (so the transpositions generate S_n).
class TranspositionRates {
 public:
  TranspositionRates(int n, std::map<std::pair<int, int>, double> rates);

  int n() const { return n_; }
  const std::map<std::pair<int, int>, double>& rates() const { return rates_; }

 private:
  int n_;
  std::map<std::pair<int, int>, double> rates_;
};

// q = 1 / C(n, 2) on every pair; n >= 2.
TranspositionRates uniform_rates(int n);

// L = sum_tau q_tau tau acting on the multiaffine basis: entry (A, B) is the
// total rate of transpositions mapping B to A. Symmetric and doubly
// stochastic.
struct SepGenerator {
  BasisPtr basis;
  Eigen::MatrixXd matrix;
  TranspositionRates rates;
};

SepGenerator build_generator(BasisPtr basis, const TranspositionRates& rates);

// Eigen-decomposition of a generator. Column 0 of `eigenvectors` is the unit
// all-ones vector (lambda_0 = 1); the remaining columns are orthonormal,
// ordered by descending eigenvalue, and canonical inside each degenerate
// eigenspace: they come from Gram-Schmidt on the projections of the
// coordinate vectors taken in colex order, signed with first nonzero entry
// positive.
struct SepSpectrum {
  BasisPtr basis;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  // N = C(n, d) - 1, the number of non-constant modes.
  Eigen::Index modes() const { return eigenvalues.size() - 1; }
  double lambda_1() const { return modes() > 0 ? eigenvalues(1) : 0.0; }
  double lambda_min() const { return eigenvalues(eigenvalues.size() - 1); }
  double spectral_gap() const { return 1.0 - lambda_1(); }
};

// Rejection if lambda_0 is not simple or lambda_N <= -1 + 1e-9 (periodic
// generator, e.g. n = 2, d = 1).
SepSpectrum spectral(const SepGenerator& generator);

// Smallest m <= 2 N' with L^m entrywise positive; Rejection otherwise.
int check_primitivity(const SepGenerator& generator);

// T_s f = x_0 f_0 + sum_j x_j exp(-s (1 - lambda_j)) f_j. Backward flows with
// |s| (1 - lambda_N) > 700 raise Rejection.
MultiAffinePoly flow(const MultiAffinePoly& f, double s, const SepSpectrum& spec);

// exp(-s) exp(s L) as a matrix on the coefficient basis.
Eigen::MatrixXd flow_matrix(double s, const SepSpectrum& spec);

// x_0 = f(1) is the coordinate along f_0 = e_d / C(n, d); x holds the
// coordinates along the orthonormal modes f_1..f_N.
struct EigenCoords {
  double x0 = 0.0;
  Eigen::VectorXd x;
};

EigenCoords eigen_coords(const MultiAffinePoly& f, const SepSpectrum& spec);
MultiAffinePoly from_eigen_coords(const EigenCoords& coords, const SepSpectrum& spec);
double centered_norm(const MultiAffinePoly& f, const SepSpectrum& spec);

struct RadiusBounds {
  double inner = 0.0;  // r exp(-s (1 - lambda_N))
  double outer = 0.0;  // r exp(-s (1 - lambda_1))
};

RadiusBounds radius_bounds(double r, double s, const SepSpectrum& spec);

// Blocks of variables (0-based); must partition [n].
using Partition = std::vector<std::vector<int>>;

// Average of sigma(f) over the product of the symmetric groups of the blocks.
MultiAffinePoly symmetrize_partition(const MultiAffinePoly& f, const Partition& blocks);

}  // namespace lorentz

#endif  // LORENTZ_SEP_FLOW_HPP_
