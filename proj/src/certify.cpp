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

#include "lorentz/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "lorentz/error.hpp"
#include "lorentz/polarize.hpp"

namespace lorentz {
namespace {

constexpr double kNormalizationTolerance = 1e-9;
constexpr double kLeadingDropRatio = 1e-14;

void require_normalized(double mass) {
  if (std::abs(mass - 1.0) > kNormalizationTolerance) {
    throw DomainError("polynomial must satisfy f(1) = 1 (got " + std::to_string(mass) +
                      "); normalize first");
  }
}

Exponent indicator(int n, Mask s) {
  Exponent alpha(n, 0);
  for (int i : mask_elements(s)) alpha[i] = 1;
  return alpha;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.begin(), v.end()}; }

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::StrictInterior:
      return "StrictInterior";
    case Status::BoundaryWithinTol:
      return "BoundaryWithinTol";
    case Status::Rejected:
      return "Rejected";
  }
  return "?";
}

std::string_view to_string(Signature signature) {
  switch (signature) {
    case Signature::Strict:
      return "Strict";
    case Signature::AtMostOnePositive:
      return "AtMostOnePositive";
    case Signature::Fail:
      return "Fail";
  }
  return "?";
}

std::string_view to_string(RootClass root_class) {
  switch (root_class) {
    case RootClass::AllRealDistinct:
      return "AllRealDistinct";
    case RootClass::AllRealWithTies:
      return "AllRealWithTies";
    case RootClass::NotAllReal:
      return "NotAllReal";
  }
  return "?";
}

SignatureReport lorentzian_signature(const Eigen::MatrixXd& h, double tol) {
  SignatureReport report;
  const Eigen::VectorXd lambda = symmetric_eigen(h).eigenvalues;
  report.eigenvalues = to_std(lambda);
  const double threshold = tol * lambda.cwiseAbs().sum();
  int positive = 0;
  int negative = 0;
  for (double l : report.eigenvalues) {
    if (l > threshold) ++positive;
    if (l < -threshold) ++negative;
  }
  const int size = static_cast<int>(report.eigenvalues.size());
  if (positive == 1 && negative == size - 1) {
    report.signature = Signature::Strict;
  } else if (positive <= 1) {
    report.signature = Signature::AtMostOnePositive;
  } else {
    report.signature = Signature::Fail;
  }
  return report;
}

Verdict certify_multiaffine(const MultiAffinePoly& f, double tol) {
  require_normalized(value_at_ones(f));
  Verdict verdict;
  verdict.tolerance = tol;

  const auto subsets = f.basis().subsets();
  bool all_positive = true;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] < -tol) {
      verdict.status = Status::Rejected;
      verdict.witness = NegativeCoefficientWitness{indicator(f.n(), subsets[k]), f[k]};
      return verdict;
    }
    if (f[k] <= tol) all_positive = false;
  }

  bool all_strict = true;
  std::optional<HessianWitness> failure;
  if (f.d() >= 2) {
    const SubsetBasis inner(f.n(), f.d() - 2);
    const Mask everything = (Mask{1} << f.n()) - 1;
    for (Mask s : inner.subsets()) {
      const std::vector<int> vars = mask_elements(everything & ~s);
      const auto m = static_cast<Eigen::Index>(vars.size());
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
      for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = a + 1; b < m; ++b) {
          const double c = f.coeff(s | (Mask{1} << vars[a]) | (Mask{1} << vars[b]));
          h(a, b) = c;
          h(b, a) = c;
        }
      }
      SignatureReport report = lorentzian_signature(h, tol);
      if (report.signature != Signature::Strict) all_strict = false;
      if (report.signature == Signature::Fail) {
        failure = HessianWitness{s, std::move(report.eigenvalues)};
        break;
      }
    }
  }

  if (all_positive && all_strict) {
    verdict.status = Status::StrictInterior;
    return verdict;
  }

  BasisFamily family{f.n(), f.d(), {}};
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] > tol) family.bases.insert(subsets[k]);
  }
  if (family.bases.empty()) {
    verdict.status = Status::Rejected;
    return verdict;
  }
  MatroidVerdict matroid = is_matroid_bases(family);
  if (!matroid.matroid) {
    verdict.status = Status::Rejected;
    verdict.witness = *matroid.witness;
    return verdict;
  }
  if (failure) {
    verdict.status = Status::Rejected;
    verdict.witness = std::move(*failure);
    return verdict;
  }
  verdict.status = Status::BoundaryWithinTol;
  return verdict;
}

Verdict certify_hom(const HomPoly& f, double tol) {
  require_normalized(value_at_ones(f));
  for (const auto& [alpha, c] : f.terms()) {
    if (c < -tol) {
      Verdict verdict;
      verdict.tolerance = tol;
      verdict.witness = NegativeCoefficientWitness{alpha, c};
      return verdict;
    }
  }
  Verdict verdict = certify_multiaffine(polarize_up(f), tol);
  if (verdict.witness && std::holds_alternative<BasisExchangeWitness>(*verdict.witness)) {
    MConvexCandidate support_set{f.n(), f.d(), {}};
    for (const auto& [alpha, c] : f.terms()) {
      if (c > tol) support_set.points.insert(alpha);
    }
    MConvexVerdict exchange = is_m_convex(support_set);
    if (!exchange.m_convex) verdict.witness = *exchange.witness;
  }
  return verdict;
}

namespace {

// s_0..s_{count-1}, the power sums of the zeros of p, by Newton's identities.
std::vector<double> power_sums(const UniPoly& p, int count) {
  const int m = p.degree();
  std::vector<double> b(m);
  for (int k = 0; k < m; ++k) b[k] = p.coeff(k) / p.leading();
  std::vector<double> s(count, 0.0);
  s[0] = m;
  for (int k = 1; k < count; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= std::min(k - 1, m); ++i) acc += b[m - i] * s[k - i];
    if (k <= m) acc += k * b[m - k];
    s[k] = -acc;
  }
  return s;
}

// The Hermite form of p written in the basis T_k((t - mu) / rho), with T_k the
// Chebyshev polynomials, mu the mean of the zeros and rho^2 = m * their
// variance. It is congruent to hermite_matrix(p), so the inertia is the same,
// but clustered real zeros no longer push the smallest eigenvalue far below
// round-off of the monomial moments.
Eigen::MatrixXd chebyshev_hermite(const UniPoly& p) {
  const int m = p.degree();
  const std::vector<double> s = power_sums(p, 3);
  const double mu = s[1] / m;
  double rho = std::sqrt(std::abs(s[2] / m - mu * mu) * m);
  if (!(rho > 0.0) || !std::isfinite(rho)) rho = 1.0;
  const UniPoly line(std::vector<double>{mu, rho});
  UniPoly shifted(std::vector<double>{p.leading()});
  for (int k = m - 1; k >= 0; --k) {
    shifted = shifted * line + UniPoly(std::vector<double>{p.coeff(k)});
  }
  if (shifted.degree() != m) return hermite_matrix(p);
  const int count = 2 * m - 1;
  const std::vector<double> moments = power_sums(shifted, count);
  std::vector<std::vector<double>> cheb{{1.0}, {0.0, 1.0}};
  while (static_cast<int>(cheb.size()) < count) {
    const auto& a = cheb[cheb.size() - 1];
    const auto& b = cheb[cheb.size() - 2];
    std::vector<double> next(a.size() + 1, 0.0);
    for (std::size_t j = 0; j < a.size(); ++j) next[j + 1] += 2.0 * a[j];
    for (std::size_t j = 0; j < b.size(); ++j) next[j] -= b[j];
    cheb.push_back(std::move(next));
  }
  std::vector<double> c(count, 0.0);
  for (int k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < cheb[k].size(); ++j) c[k] += cheb[k][j] * moments[j];
  }
  Eigen::MatrixXd h(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) h(i, j) = 0.5 * (c[i + j] + c[std::abs(i - j)]);
  }
  return h;
}

}  // namespace

Eigen::MatrixXd hermite_matrix(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("Hermite matrix of the zero polynomial");
  const int m = p.degree();
  if (m < 1) throw DomainError("Hermite matrix needs degree >= 1");
  const std::vector<double> s = power_sums(p, 2 * m - 1);
  Eigen::MatrixXd h(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) h(i, j) = s[i + j];
  }
  return h;
}

RootReport real_rooted(const UniPoly& p, double tol) {
  if (p.is_zero()) throw DomainError("root classification of the zero polynomial");
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  double max_abs = 0.0;
  for (double x : c) max_abs = std::max(max_abs, std::abs(x));
  RootReport report;
  while (c.size() > 1 && std::abs(c.back()) < kLeadingDropRatio * max_abs) {
    c.pop_back();
    report.degree_dropped = true;
  }
  const UniPoly q(std::move(c));
  report.degree = q.degree();
  if (q.degree() == 0) {
    report.root_class = RootClass::AllRealDistinct;
    return report;
  }
  const Eigen::VectorXd lambda = symmetric_eigen(chebyshev_hermite(q)).eigenvalues;
  report.hermite_eigenvalues = to_std(lambda);
  const double threshold = tol * lambda.cwiseAbs().sum();
  const double smallest = lambda(lambda.size() - 1);
  if (smallest > threshold) {
    report.root_class = RootClass::AllRealDistinct;
  } else if (smallest < -threshold) {
    report.root_class = RootClass::NotAllReal;
  } else {
    report.root_class = RootClass::AllRealWithTies;
  }
  return report;
}

double discriminant(const UniPoly& p) {
  const int m = p.degree();
  if (m < 1) throw DomainError("discriminant needs degree >= 1");
  const UniPoly dp = p.derivative();
  const int size = 2 * m - 1;
  Eigen::MatrixXd sylvester = Eigen::MatrixXd::Zero(size, size);
  // m - 1 shifted rows of p, then m shifted rows of p', descending powers.
  for (int r = 0; r < m - 1; ++r) {
    for (int k = 0; k <= m; ++k) sylvester(r, r + k) = p.coeff(m - k);
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= m - 1; ++k) sylvester(m - 1 + r, r + k) = dp.coeff(m - 1 - k);
  }
  const double resultant = size == 1 ? sylvester(0, 0) : sylvester.fullPivLu().determinant();
  const double sign = ((m * (m - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * resultant / p.leading();
}

std::vector<std::vector<double>> sample_sphere_sumzero(int n, int count, std::uint64_t seed) {
  if (n < 2) throw DomainError("sum-zero sphere needs n >= 2");
  if (count < 1) throw DomainError("need at least one direction");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> out;
  out.reserve(count);
  Eigen::VectorXd x(n);
  while (static_cast<int>(out.size()) < count) {
    for (int i = 0; i < n; ++i) x(i) = gauss(rng);
    for (int pass = 0; pass < 2; ++pass) {
      x.array() -= x.mean();
      const double norm = x.norm();
      if (norm < 1e-8) break;
      x /= norm;
    }
    if (std::abs(x.norm() - 1.0) > 1e-12) continue;
    out.emplace_back(x.begin(), x.end());
  }
  return out;
}

Verdict certify_stable(const HomPoly& f, int directions, std::uint64_t seed, double tol) {
  require_normalized(value_at_ones(f));
  Verdict verdict;
  verdict.tolerance = tol;
  for (const auto& [alpha, c] : f.terms()) {
    if (c < -tol) {
      verdict.witness = NegativeCoefficientWitness{alpha, c};
      return verdict;
    }
  }
  bool all_positive = true;
  for (const Exponent& alpha : capped_exponents(f.n(), f.d(), f.kappa())) {
    if (f.coeff(alpha) <= tol) {
      all_positive = false;
      break;
    }
  }

  bool distinct = true;
  if (f.n() >= 2 && f.d() >= 1) {
    for (const auto& y : sample_sphere_sumzero(f.n(), directions, seed)) {
      const UniPoly line = restrict_line(f, y);
      RootReport report = real_rooted(line, tol);
      if (report.root_class == RootClass::NotAllReal) {
        verdict.status = Status::Rejected;
        verdict.witness = DirectionWitness{
            y, {line.coeffs().begin(), line.coeffs().end()}, std::move(report.hermite_eigenvalues)};
        return verdict;
      }
      if (report.root_class == RootClass::AllRealWithTies) distinct = false;
    }
  }
  verdict.status =
      (distinct && all_positive) ? Status::StrictInterior : Status::BoundaryWithinTol;
  return verdict;
}

}  // namespace lorentz
