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

#ifndef LORENTZ_POLY_CORE_HPP_
#define LORENTZ_POLY_CORE_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lorentz/subset_basis.hpp"
#include "lorentz/univariate.hpp"

namespace lorentz {

using Exponent = std::vector<int>;

// Relative support threshold: |c| > kSupportTolerance * max|c|.
inline constexpr double kSupportTolerance = 1e-12;

// Homogeneous multiaffine polynomial sum_S a(S) w^S, stored densely over a
// SubsetBasis.
class MultiAffinePoly {
 public:
  explicit MultiAffinePoly(BasisPtr basis);
  MultiAffinePoly(BasisPtr basis, std::vector<double> coeffs);

  const SubsetBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  int n() const { return basis_->n(); }
  int d() const { return basis_->d(); }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t index) const { return coeffs_[index]; }
  double coeff(Mask s) const;

  Eigen::Map<const Eigen::VectorXd> vector() const {
    return {coeffs_.data(), static_cast<Eigen::Index>(coeffs_.size())};
  }

 private:
  BasisPtr basis_;
  std::vector<double> coeffs_;
};

// Homogeneous polynomial of degree d in n variables with per-variable degree
// caps kappa, stored sparsely by exponent vector. Exact zero coefficients are
// not stored.
class HomPoly {
 public:
  // Empty kappa means kappa = (d, ..., d), i.e. no effective cap.
  HomPoly(int n, int d, std::vector<int> kappa = {},
          std::map<Exponent, double> terms = {});

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<int>& kappa() const { return kappa_; }
  const std::map<Exponent, double>& terms() const { return terms_; }
  double coeff(const Exponent& alpha) const;

  // Throws DomainError unless alpha has length n, nonnegative entries summing
  // to d and respects the caps.
  void check_exponent(const Exponent& alpha) const;

  bool is_multiaffine() const;

 private:
  int n_;
  int d_;
  std::vector<int> kappa_;
  std::map<Exponent, double> terms_;
};

// All alpha in Delta_n^d with alpha_i <= kappa_i, in lexicographically
// decreasing order ((d,0,..,0) first).
std::vector<Exponent> capped_exponents(int n, int d, std::span<const int> kappa);

MultiAffinePoly elementary_symmetric(int n, int d);

double evaluate(const MultiAffinePoly& f, std::span<const double> point);
double evaluate(const HomPoly& f, std::span<const double> point);
double value_at_ones(const MultiAffinePoly& f);
double value_at_ones(const HomPoly& f);

// Divides by f(1); throws DomainError if f(1) is not positive.
MultiAffinePoly normalize(const MultiAffinePoly& f);
HomPoly normalize(const HomPoly& f);

// prod_{j in S} d/dw_j f, expressed over the same n variables with degree
// d - |S|; the variables of S do not occur in the result.
MultiAffinePoly partial_derivative_set(const MultiAffinePoly& f, Mask s);

// Coefficients of t -> f(t*1 - y).
UniPoly restrict_line(const MultiAffinePoly& f, std::span<const double> y);
UniPoly restrict_line(const HomPoly& f, std::span<const double> y);

// Symmetric H with q(w) = 1/2 w^T H w on the listed variables.
Eigen::MatrixXd hessian_quadratic(const MultiAffinePoly& q,
                                  std::span<const int> vars);
Eigen::MatrixXd hessian_quadratic(const HomPoly& q, std::span<const int> vars);

MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b);
MultiAffinePoly operator-(const MultiAffinePoly& a, const MultiAffinePoly& b);
MultiAffinePoly operator*(double factor, const MultiAffinePoly& f);
HomPoly operator+(const HomPoly& a, const HomPoly& b);
HomPoly operator-(const HomPoly& a, const HomPoly& b);
HomPoly operator*(double factor, const HomPoly& f);

double l2_norm(const MultiAffinePoly& f);
double l2_norm(const HomPoly& f);

std::vector<Mask> support(const MultiAffinePoly& f,
                          double rel_tol = kSupportTolerance);
std::vector<Exponent> support(const HomPoly& f,
                              double rel_tol = kSupportTolerance);

// Conversions between the two representations of a multiaffine polynomial.
HomPoly to_hom(const MultiAffinePoly& f);
MultiAffinePoly to_multiaffine(const HomPoly& f);

}  // namespace lorentz

#endif  // LORENTZ_POLY_CORE_HPP_
