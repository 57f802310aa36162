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

#ifndef LORENTZ_CERTIFY_HPP_
#define LORENTZ_CERTIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "lorentz/poly_core.hpp"
#include "lorentz/strata.hpp"
#include "lorentz/symmetric_eigen.hpp"
#include "lorentz/univariate.hpp"

namespace lorentz {

inline constexpr double kDefaultCertifyTolerance = 1e-9;
inline constexpr int kDefaultDirections = 256;
inline constexpr std::uint64_t kDefaultSeed = 20240607;

enum class Status { StrictInterior, BoundaryWithinTol, Rejected };
std::string_view to_string(Status status);

struct NegativeCoefficientWitness {
  Exponent exponent;  // 0/1 vector for multiaffine polynomials
  double value = 0.0;
};

// The quadratic d^S f on the variables outside S failed the signature test.
struct HessianWitness {
  Mask subset = 0;
  std::vector<double> eigenvalues;  // descending
};

// t -> f(t*1 - y) has non-real zeros.
struct DirectionWitness {
  std::vector<double> y;
  std::vector<double> line_coeffs;  // ascending
  std::vector<double> hermite_eigenvalues;
};

using Witness = std::variant<NegativeCoefficientWitness, HessianWitness,
                             BasisExchangeWitness, ExchangeWitness, DirectionWitness>;

struct Verdict {
  Status status = Status::Rejected;
  double tolerance = kDefaultCertifyTolerance;
  std::optional<Witness> witness;

  bool member() const { return status != Status::Rejected; }
};

enum class Signature { Strict, AtMostOnePositive, Fail };
std::string_view to_string(Signature signature);

struct SignatureReport {
  Signature signature = Signature::Fail;
  std::vector<double> eigenvalues;  // descending
};

// Eigenvalues are compared against tol * sum|lambda_i|. Strict: one
// eigenvalue above the threshold and all others below its negative.
// AtMostOnePositive: at most one above the threshold.
SignatureReport lorentzian_signature(const Eigen::MatrixXd& h,
                                     double tol = kDefaultCertifyTolerance);

// Requires f(1) = 1 within 1e-9 (DomainError otherwise).
//   StrictInterior: every a(S) > tol and every Hessian of d^S f, |S| = d-2,
//     has strict Lorentzian signature.
//   BoundaryWithinTol: every a(S) >= -tol, the support {a(S) > tol} is the
//     basis family of a matroid and every such Hessian has at most one
//     positive eigenvalue.
//   Rejected otherwise, with the first failing check as witness.
Verdict certify_multiaffine(const MultiAffinePoly& f,
                            double tol = kDefaultCertifyTolerance);

// Lorentzian membership in the capped space of f (f.kappa()), decided on the
// polarization of f.
Verdict certify_hom(const HomPoly& f, double tol = kDefaultCertifyTolerance);

// H[i][j] = s_{i+j}, 0 <= i, j < deg p, with s_k the Newton power sums of the
// roots of p. DomainError for the zero polynomial or a constant.
Eigen::MatrixXd hermite_matrix(const UniPoly& p);

enum class RootClass { AllRealDistinct, AllRealWithTies, NotAllReal };
std::string_view to_string(RootClass root_class);

struct RootReport {
  RootClass root_class = RootClass::NotAllReal;
  bool degree_dropped = false;  // leading coefficients below 1e-14 max|c| were stripped
  int degree = 0;               // degree actually examined
  std::vector<double> hermite_eigenvalues;
};

// Classifies the zeros of p through its Hermite form, evaluated in a centered
// and scaled Chebyshev basis (congruent to hermite_matrix, so the inertia is
// unchanged; the reported eigenvalues are those of this form): positive definite
// (min eigenvalue > tol * sum|lambda|) means real and distinct, negative
// eigenvalue below -tol * sum|lambda| means non-real zeros, otherwise real
// with ties. A polynomial that strips down to a nonzero constant has no zeros
// and is reported AllRealDistinct with degree 0.
RootReport real_rooted(const UniPoly& p, double tol = kDefaultCertifyTolerance);

// disc(p) = (-1)^{m(m-1)/2} Res(p, p') / c_m via the Sylvester determinant,
// so disc(a t^2 + b t + c) = b^2 - 4ac. Requires degree >= 1.
double discriminant(const UniPoly& p);

// `count` unit vectors with coordinate sum zero, from seeded Gaussian samples
// projected onto the hyperplane sum x_i = 0. Requires n >= 2, count >= 1.
std::vector<std::vector<double>> sample_sphere_sumzero(int n, int count,
                                                       std::uint64_t seed);

// Sampled real-stability test on t -> f(t*1 - y) for `directions` seeded y on
// the sum-zero unit sphere. Rejected is conclusive; the other verdicts hold at
// the sampled resolution. Interiority additionally needs every coefficient
// allowed by the caps of f to exceed tol. Requires f(1) = 1 within 1e-9.
Verdict certify_stable(const HomPoly& f, int directions = kDefaultDirections,
                       std::uint64_t seed = kDefaultSeed,
                       double tol = kDefaultCertifyTolerance);

}  // namespace lorentz

#endif  // LORENTZ_CERTIFY_HPP_
