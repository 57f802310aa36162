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

#ifndef LORENTZ_POLARIZE_HPP_
#define LORENTZ_POLARIZE_HPP_

#include <memory>
#include <vector>

#include "lorentz/poly_core.hpp"
#include "lorentz/sep_flow.hpp"

namespace lorentz {

// Lifted variables for caps kappa: variable i of the capped space becomes the
// block w_{i,0}, ..., w_{i,kappa_i - 1}, numbered consecutively.
class PolarizationPlan {
 public:
  // Requires sum(kappa) <= kMaxVariables and d <= sum(kappa).
  PolarizationPlan(int n, int d, std::vector<int> kappa);
  explicit PolarizationPlan(const HomPoly& f);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<int>& kappa() const { return kappa_; }
  int lifted_variables() const { return static_cast<int>(block_of_.size()); }
  const BasisPtr& lifted_basis() const { return lifted_basis_; }
  const Partition& blocks() const { return blocks_; }
  int block_of(int lifted_variable) const { return block_of_.at(lifted_variable); }

  // Number of elements of `lifted` in each block.
  Exponent project(Mask lifted) const;

 private:
  int n_;
  int d_;
  std::vector<int> kappa_;
  Partition blocks_;
  std::vector<int> block_of_;
  BasisPtr lifted_basis_;
};

// Replaces each w_i^a by e_a(w_{i,*}) / C(kappa_i, a).
MultiAffinePoly polarize_up(const HomPoly& f, const PolarizationPlan& plan);
MultiAffinePoly polarize_up(const HomPoly& f);

// Substitutes w_{i,j} -> w_i.
HomPoly project_down(const MultiAffinePoly& g, const PolarizationPlan& plan);

// Uniform-rate spectral decompositions keyed by (variables, d), computed once
// per process. Thread-safe.
std::shared_ptr<const SepSpectrum> uniform_spectrum(int variables, int d);

// Pi_down o T_s o Pi_up with the uniform-rate flow on the lifted variables.
HomPoly hat_flow(const HomPoly& f, double s, const PolarizationPlan& plan,
                 const SepSpectrum& lifted);
HomPoly hat_flow(const HomPoly& f, double s, const PolarizationPlan& plan);

// e_d(w_{1,1}, ..., w_{n,d}) / C(nd, d) after w_{i,j} -> w_i; kappa = (d..d).
// Coefficient of alpha is prod_i C(d, alpha_i) / C(nd, d). Requires d >= 1
// and n d <= kMaxVariables.
HomPoly f_n_d(int n, int d);

}  // namespace lorentz

#endif  // LORENTZ_POLARIZE_HPP_
