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

#ifndef LORENTZ_SAMPLING_HPP_
#define LORENTZ_SAMPLING_HPP_

#include <random>
#include <span>
#include <vector>

#include "lorentz/poly_core.hpp"

namespace lorentz {

// prod_k (a_k . w) expanded over exponent vectors; kappa = (d, ..., d).
HomPoly product_of_linear_forms(int n, std::span<const std::vector<double>> forms);

// Normalized product of d linear forms with entries |N(0, 1)|. Real stable
// with nonnegative coefficients, hence Lorentzian.
HomPoly random_stable_member(int n, int d, std::mt19937_64& rng);

// Normalized multiaffine part of such a product (requires d <= n). Taking the
// multiaffine part preserves stability, so the result is a multiaffine
// stable and Lorentzian polynomial with full support.
MultiAffinePoly random_multiaffine_member(int n, int d, std::mt19937_64& rng);

}  // namespace lorentz

#endif  // LORENTZ_SAMPLING_HPP_
