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

#ifndef LORENTZ_SUBSET_BASIS_HPP_
#define LORENTZ_SUBSET_BASIS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace lorentz {

// Bit i set <=> variable i (0-based) belongs to the subset.
using Mask = std::uint32_t;

inline constexpr int kMaxVariables = 16;

std::uint64_t binomial(int n, int k);

int popcount(Mask s);
std::vector<int> mask_elements(Mask s);
Mask mask_from_elements(std::span<const int> elements);

// The d-subsets of {0, ..., n-1} in colexicographic order. For bitmasks colex
// order coincides with increasing numeric value, and the rank of
// {s_0 < s_1 < ... < s_{d-1}} is sum_k C(s_k, k+1).
class SubsetBasis {
 public:
  SubsetBasis(int n, int d, int max_variables = kMaxVariables);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t size() const { return subsets_.size(); }

  Mask unrank(std::size_t index) const { return subsets_.at(index); }
  // Throws DomainError if `s` is not a d-subset of [n].
  std::size_t rank(Mask s) const;
  std::optional<std::size_t> find(Mask s) const;

  std::span<const Mask> subsets() const { return subsets_; }

  bool operator==(const SubsetBasis& other) const {
    return n_ == other.n_ && d_ == other.d_;
  }

 private:
  int n_;
  int d_;
  std::vector<Mask> subsets_;
};

using BasisPtr = std::shared_ptr<const SubsetBasis>;

BasisPtr enumerate_subsets(int n, int d, int max_variables = kMaxVariables);

}  // namespace lorentz

#endif  // LORENTZ_SUBSET_BASIS_HPP_
