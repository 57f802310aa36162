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

#include "lorentz/sampling.hpp"

#include <cmath>
#include <map>

#include "lorentz/error.hpp"

namespace lorentz {

HomPoly product_of_linear_forms(int n, std::span<const std::vector<double>> forms) {
  std::map<Exponent, double> current{{Exponent(n, 0), 1.0}};
  for (const auto& form : forms) {
    if (static_cast<int>(form.size()) != n) throw DomainError("linear form has wrong length");
    std::map<Exponent, double> next;
    for (const auto& [alpha, c] : current) {
      for (int i = 0; i < n; ++i) {
        if (form[i] == 0.0) continue;
        Exponent beta = alpha;
        ++beta[i];
        next[beta] += c * form[i];
      }
    }
    current = std::move(next);
  }
  const int d = static_cast<int>(forms.size());
  return HomPoly(n, d, {}, std::move(current));
}

namespace {

std::vector<std::vector<double>> random_forms(int n, int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> forms(d, std::vector<double>(n));
  for (auto& form : forms) {
    for (double& a : form) a = std::abs(gauss(rng));
  }
  return forms;
}

}  // namespace

HomPoly random_stable_member(int n, int d, std::mt19937_64& rng) {
  return normalize(product_of_linear_forms(n, random_forms(n, d, rng)));
}

MultiAffinePoly random_multiaffine_member(int n, int d, std::mt19937_64& rng) {
  if (d > n) throw DomainError("multiaffine member needs d <= n");
  const HomPoly product = product_of_linear_forms(n, random_forms(n, d, rng));
  auto basis = enumerate_subsets(n, d);
  std::vector<double> coeffs(basis->size(), 0.0);
  for (std::size_t k = 0; k < basis->size(); ++k) {
    Exponent alpha(n, 0);
    for (int i : mask_elements(basis->unrank(k))) alpha[i] = 1;
    coeffs[k] = product.coeff(alpha);
  }
  return normalize(MultiAffinePoly(basis, std::move(coeffs)));
}

}  // namespace lorentz
