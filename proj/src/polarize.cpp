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

#include "lorentz/polarize.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "lorentz/error.hpp"

namespace lorentz {

PolarizationPlan::PolarizationPlan(int n, int d, std::vector<int> kappa)
    : n_(n), d_(d), kappa_(std::move(kappa)) {
  if (n <= 0) throw DomainError("polarization needs n > 0");
  if (static_cast<int>(kappa_.size()) != n) throw DomainError("kappa has the wrong length");
  int total = 0;
  for (int i = 0; i < n; ++i) {
    if (kappa_[i] <= 0) throw DomainError("kappa entries must be positive");
    blocks_.emplace_back();
    for (int j = 0; j < kappa_[i]; ++j) {
      blocks_.back().push_back(total);
      block_of_.push_back(i);
      ++total;
    }
  }
  if (total > kMaxVariables) {
    throw DomainError("polarization needs " + std::to_string(total) +
                      " lifted variables; limit is " + std::to_string(kMaxVariables));
  }
  if (d < 0 || d > total) throw DomainError("degree exceeds the lifted variable count");
  lifted_basis_ = enumerate_subsets(total, d);
}

PolarizationPlan::PolarizationPlan(const HomPoly& f)
    : PolarizationPlan(f.n(), f.d(), f.kappa()) {}

Exponent PolarizationPlan::project(Mask lifted) const {
  Exponent alpha(n_, 0);
  for (int v : mask_elements(lifted)) ++alpha[block_of_.at(v)];
  return alpha;
}

MultiAffinePoly polarize_up(const HomPoly& f, const PolarizationPlan& plan) {
  if (f.n() != plan.n() || f.d() != plan.d()) throw DomainError("plan does not match polynomial");
  for (const auto& [alpha, c] : f.terms()) {
    for (int i = 0; i < f.n(); ++i) {
      if (alpha[i] > plan.kappa()[i]) {
        f.check_exponent(alpha);  // reports the offending exponent
        throw DomainError("exponent exceeds the plan's caps");
      }
    }
  }
  const BasisPtr& basis = plan.lifted_basis();
  std::vector<double> coeffs(basis->size(), 0.0);
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const Exponent alpha = plan.project(basis->unrank(k));
    const double c = f.coeff(alpha);
    if (c == 0.0) continue;
    double weight = c;
    for (int i = 0; i < f.n(); ++i) {
      weight /= static_cast<double>(binomial(plan.kappa()[i], alpha[i]));
    }
    coeffs[k] = weight;
  }
  return MultiAffinePoly(basis, std::move(coeffs));
}

MultiAffinePoly polarize_up(const HomPoly& f) { return polarize_up(f, PolarizationPlan(f)); }

HomPoly project_down(const MultiAffinePoly& g, const PolarizationPlan& plan) {
  if (!(g.basis() == *plan.lifted_basis())) {
    throw DomainError("polynomial does not live on the plan's lifted basis");
  }
  std::map<Exponent, double> terms;
  for (std::size_t k = 0; k < g.size(); ++k) {
    terms[plan.project(g.basis().unrank(k))] += g[k];
  }
  return HomPoly(plan.n(), plan.d(), plan.kappa(), std::move(terms));
}

std::shared_ptr<const SepSpectrum> uniform_spectrum(int variables, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const SepSpectrum>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({variables, d});
    if (it != cache.end()) return it->second;
  }
  // Computed outside the lock; concurrent fills produce identical values.
  std::shared_ptr<const SepSpectrum> spec;
  if (variables == 1) {
    // A single variable admits no transposition; the flow is the identity.
    spec = std::make_shared<const SepSpectrum>(SepSpectrum{
        enumerate_subsets(1, d), Eigen::VectorXd::Ones(1), Eigen::MatrixXd::Ones(1, 1)});
  } else {
    spec = std::make_shared<const SepSpectrum>(spectral(
        build_generator(enumerate_subsets(variables, d), uniform_rates(variables))));
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache[{variables, d}] = spec;
  return spec;
}

HomPoly hat_flow(const HomPoly& f, double s, const PolarizationPlan& plan,
                 const SepSpectrum& lifted) {
  return project_down(flow(polarize_up(f, plan), s, lifted), plan);
}

HomPoly hat_flow(const HomPoly& f, double s, const PolarizationPlan& plan) {
  return hat_flow(f, s, plan, *uniform_spectrum(plan.lifted_variables(), plan.d()));
}

HomPoly f_n_d(int n, int d) {
  if (d < 1 || n < 1) throw DomainError("f_n^d needs n, d >= 1");
  if (n * d > kMaxVariables) {
    throw DomainError("f_n^d limited to n*d <= " + std::to_string(kMaxVariables));
  }
  const std::vector<int> kappa(n, d);
  const double total = static_cast<double>(binomial(n * d, d));
  std::map<Exponent, double> terms;
  for (const Exponent& alpha : capped_exponents(n, d, kappa)) {
    double count = 1.0;
    for (int a : alpha) count *= static_cast<double>(binomial(d, a));
    terms[alpha] = count / total;
  }
  return HomPoly(n, d, kappa, std::move(terms));
}

}  // namespace lorentz
