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

#include "lorentz/subset_basis.hpp"

#include <bit>
#include <string>

#include "lorentz/error.hpp"

namespace lorentz {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / i;
  }
  return result;
}

int popcount(Mask s) { return std::popcount(s); }

std::vector<int> mask_elements(Mask s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Mask mask_from_elements(std::span<const int> elements) {
  Mask s = 0;
  for (int e : elements) {
    if (e < 0 || e >= 32) throw DomainError("variable index out of range");
    Mask bit = Mask{1} << e;
    if (s & bit) throw DomainError("repeated element in subset");
    s |= bit;
  }
  return s;
}

SubsetBasis::SubsetBasis(int n, int d, int max_variables) : n_(n), d_(d) {
  if (n <= 0) throw DomainError("subset basis needs n > 0");
  if (d < 0 || d > n) {
    throw DomainError("subset basis needs 0 <= d <= n (got n=" +
                      std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  if (n > max_variables || n > 31) {
    throw DomainError("subset basis limited to " +
                      std::to_string(max_variables) + " variables (got " +
                      std::to_string(n) + ")");
  }
  subsets_.reserve(binomial(n, d));
  if (d == 0) {
    subsets_.push_back(0);
    return;
  }
  // Gosper's hack walks d-subsets in increasing numeric (= colex) order.
  const Mask limit = Mask{1} << n;
  Mask s = (Mask{1} << d) - 1;
  while (s < limit) {
    subsets_.push_back(s);
    Mask c = s & (~s + 1);
    Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

std::optional<std::size_t> SubsetBasis::find(Mask s) const {
  if (popcount(s) != d_ || (n_ < 32 && (s >> n_) != 0)) return std::nullopt;
  std::size_t index = 0;
  int k = 1;
  while (s != 0) {
    int e = std::countr_zero(s);
    index += binomial(e, k);
    ++k;
    s &= s - 1;
  }
  return index;
}

std::size_t SubsetBasis::rank(Mask s) const {
  auto index = find(s);
  if (!index) {
    throw DomainError("mask is not a " + std::to_string(d_) + "-subset of [" +
                      std::to_string(n_) + "]");
  }
  return *index;
}

BasisPtr enumerate_subsets(int n, int d, int max_variables) {
  return std::make_shared<const SubsetBasis>(n, d, max_variables);
}

}  // namespace lorentz
