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

#ifndef LORENTZ_SYMMETRIC_EIGEN_HPP_
#define LORENTZ_SYMMETRIC_EIGEN_HPP_

#include <Eigen/Dense>

namespace lorentz {

struct SymmetricSpectrum {
  Eigen::VectorXd eigenvalues;   // descending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, matching order
};

// Cyclic Jacobi rotations. Deterministic for a fixed input: eigenvalues are
// sorted in descending order (ties keep their Jacobi order) and every
// eigenvector is signed so that its first non-negligible entry is positive.
// Throws DomainError for non-square input or asymmetry above 1e-12 (relative
// to the largest entry, floor 1).
SymmetricSpectrum symmetric_eigen(const Eigen::MatrixXd& h);

// Flips the sign of each column so its first entry above `threshold` in
// magnitude is positive.
void canonicalize_signs(Eigen::MatrixXd& vectors, double threshold = 1e-10);

}  // namespace lorentz

#endif  // LORENTZ_SYMMETRIC_EIGEN_HPP_
