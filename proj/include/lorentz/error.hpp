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

#ifndef LORENTZ_ERROR_HPP_
#define LORENTZ_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lorentz {

// Input outside an operation's domain (bad sizes, cap violations, malformed
// subsets, unnormalized polynomials).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A well-formed input that the computation refuses: disconnected rates,
// periodic generators, backward-flow overflow.
class Rejection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeCoefficientError : public Rejection {
 public:
  NegativeCoefficientError(std::size_t index, double value)
      : Rejection("negative coefficient " + std::to_string(value) +
                  " at term index " + std::to_string(index)),
        index_(index),
        value_(value) {}

  std::size_t index() const { return index_; }
  double value() const { return value_; }

 private:
  std::size_t index_;
  double value_;
};

}  // namespace lorentz

#endif  // LORENTZ_ERROR_HPP_
