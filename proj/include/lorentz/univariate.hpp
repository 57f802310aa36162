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

#ifndef LORENTZ_UNIVARIATE_HPP_
#define LORENTZ_UNIVARIATE_HPP_

#include <span>
#include <vector>

namespace lorentz {

// Real univariate polynomial c_0 + c_1 t + ... + c_m t^m. Trailing zero
// coefficients are stripped on construction, so the leading coefficient is
// nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<double> ascending);

  static UniPoly from_roots(std::span<const double> roots);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const double> coeffs() const { return coeffs_; }
  double coeff(int k) const;
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double operator()(double t) const;
  UniPoly derivative(int order = 1) const;

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(double factor) const;

 private:
  std::vector<double> coeffs_;
};

}  // namespace lorentz

#endif  // LORENTZ_UNIVARIATE_HPP_
