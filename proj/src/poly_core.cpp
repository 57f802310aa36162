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

#include "lorentz/poly_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "lorentz/error.hpp"

namespace lorentz {
namespace {

void check_point(int n, std::span<const double> point) {
  if (static_cast<int>(point.size()) != n) {
    throw DomainError("point has " + std::to_string(point.size()) +
                      " coordinates, polynomial has " + std::to_string(n) +
                      " variables");
  }
}

void check_same_basis(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  if (!(a.basis() == b.basis())) throw DomainError("basis mismatch");
}

void check_same_space(const HomPoly& a, const HomPoly& b) {
  if (a.n() != b.n() || a.d() != b.d() || a.kappa() != b.kappa()) {
    throw DomainError("polynomial spaces differ (n, d or kappa)");
  }
}

void capped_exponents_rec(int i, int remaining, std::span<const int> kappa,
                          Exponent& current, std::vector<Exponent>& out) {
  const int n = static_cast<int>(kappa.size());
  if (i == n - 1) {
    if (remaining <= kappa[i]) {
      current[i] = remaining;
      out.push_back(current);
    }
    return;
  }
  for (int a = std::min(remaining, kappa[i]); a >= 0; --a) {
    current[i] = a;
    capped_exponents_rec(i + 1, remaining - a, kappa, current, out);
  }
}

}  // namespace

MultiAffinePoly::MultiAffinePoly(BasisPtr basis)
    : basis_(std::move(basis)), coeffs_(basis_->size(), 0.0) {}

MultiAffinePoly::MultiAffinePoly(BasisPtr basis, std::vector<double> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size()) {
    throw DomainError("coefficient vector length " +
                      std::to_string(coeffs_.size()) + " != basis size " +
                      std::to_string(basis_->size()));
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("non-finite coefficient");
  }
}

double MultiAffinePoly::coeff(Mask s) const {
  auto index = basis_->find(s);
  return index ? coeffs_[*index] : 0.0;
}

HomPoly::HomPoly(int n, int d, std::vector<int> kappa,
                 std::map<Exponent, double> terms)
    : n_(n), d_(d), kappa_(std::move(kappa)) {
  if (n <= 0) throw DomainError("polynomial needs n > 0");
  if (d < 0) throw DomainError("polynomial needs d >= 0");
  if (kappa_.empty()) kappa_.assign(n, std::max(d, 1));
  if (static_cast<int>(kappa_.size()) != n) {
    throw DomainError("kappa has length " + std::to_string(kappa_.size()) +
                      ", expected " + std::to_string(n));
  }
  int cap_total = 0;
  for (int k : kappa_) {
    if (k <= 0) throw DomainError("kappa entries must be positive");
    cap_total += k;
  }
  if (cap_total < d) throw DomainError("caps admit no monomial of degree d");
  for (auto& [alpha, c] : terms) {
    check_exponent(alpha);
    if (!std::isfinite(c)) throw DomainError("non-finite coefficient");
    if (c != 0.0) terms_.emplace(alpha, c);
  }
}

void HomPoly::check_exponent(const Exponent& alpha) const {
  if (static_cast<int>(alpha.size()) != n_) {
    throw DomainError("exponent has length " + std::to_string(alpha.size()) +
                      ", expected " + std::to_string(n_));
  }
  int total = 0;
  for (int i = 0; i < n_; ++i) {
    if (alpha[i] < 0) throw DomainError("negative exponent");
    if (alpha[i] > kappa_[i]) {
      std::string shown;
      for (int a : alpha) shown += (shown.empty() ? "" : ",") + std::to_string(a);
      throw DomainError("exponent (" + shown + ") exceeds cap kappa_" +
                        std::to_string(i) + " = " + std::to_string(kappa_[i]));
    }
    total += alpha[i];
  }
  if (total != d_) {
    throw DomainError("exponent degree " + std::to_string(total) +
                      " != " + std::to_string(d_));
  }
}

double HomPoly::coeff(const Exponent& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0.0 : it->second;
}

bool HomPoly::is_multiaffine() const {
  for (const auto& [alpha, c] : terms_) {
    for (int a : alpha) {
      if (a > 1) return false;
    }
  }
  return true;
}

std::vector<Exponent> capped_exponents(int n, int d, std::span<const int> kappa) {
  std::vector<Exponent> out;
  if (n <= 0 || static_cast<int>(kappa.size()) != n) return out;
  Exponent current(n, 0);
  capped_exponents_rec(0, d, kappa, current, out);
  return out;
}

MultiAffinePoly elementary_symmetric(int n, int d) {
  auto basis = enumerate_subsets(n, d);
  return MultiAffinePoly(basis, std::vector<double>(basis->size(), 1.0));
}

double evaluate(const MultiAffinePoly& f, std::span<const double> point) {
  check_point(f.n(), point);
  double total = 0.0;
  const auto subsets = f.basis().subsets();
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if (f[k] == 0.0) continue;
    double term = f[k];
    for (Mask s = subsets[k]; s != 0; s &= s - 1) term *= point[std::countr_zero(s)];
    total += term;
  }
  return total;
}

double evaluate(const HomPoly& f, std::span<const double> point) {
  check_point(f.n(), point);
  double total = 0.0;
  for (const auto& [alpha, c] : f.terms()) {
    double term = c;
    for (int i = 0; i < f.n(); ++i) {
      for (int p = 0; p < alpha[i]; ++p) term *= point[i];
    }
    total += term;
  }
  return total;
}

double value_at_ones(const MultiAffinePoly& f) {
  double total = 0.0;
  for (double c : f.coeffs()) total += c;
  return total;
}

double value_at_ones(const HomPoly& f) {
  double total = 0.0;
  for (const auto& [alpha, c] : f.terms()) total += c;
  return total;
}

MultiAffinePoly normalize(const MultiAffinePoly& f) {
  const double mass = value_at_ones(f);
  if (!(mass > 0.0)) throw DomainError("cannot normalize: f(1) <= 0");
  return (1.0 / mass) * f;
}

HomPoly normalize(const HomPoly& f) {
  const double mass = value_at_ones(f);
  if (!(mass > 0.0)) throw DomainError("cannot normalize: f(1) <= 0");
  return (1.0 / mass) * f;
}

MultiAffinePoly partial_derivative_set(const MultiAffinePoly& f, Mask s) {
  if (f.n() < 32 && (s >> f.n()) != 0) {
    throw DomainError("derivative set is not a subset of the variables");
  }
  const int order = popcount(s);
  if (order > f.d()) throw DomainError("derivative order exceeds degree");
  auto out_basis = enumerate_subsets(f.n(), f.d() - order);
  std::vector<double> coeffs(out_basis->size(), 0.0);
  const auto subsets = out_basis->subsets();
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if ((subsets[k] & s) == 0) coeffs[k] = f.coeff(subsets[k] | s);
  }
  return MultiAffinePoly(out_basis, std::move(coeffs));
}

UniPoly restrict_line(const MultiAffinePoly& f, std::span<const double> y) {
  check_point(f.n(), y);
  std::vector<double> acc(f.d() + 1, 0.0);
  const auto subsets = f.basis().subsets();
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if (f[k] == 0.0) continue;
    std::vector<double> roots;
    for (int i : mask_elements(subsets[k])) roots.push_back(y[i]);
    const UniPoly term = UniPoly::from_roots(roots);
    for (int p = 0; p <= term.degree(); ++p) acc[p] += f[k] * term.coeff(p);
  }
  return UniPoly(std::move(acc));
}

UniPoly restrict_line(const HomPoly& f, std::span<const double> y) {
  check_point(f.n(), y);
  std::vector<double> acc(f.d() + 1, 0.0);
  for (const auto& [alpha, c] : f.terms()) {
    std::vector<double> roots;
    for (int i = 0; i < f.n(); ++i) roots.insert(roots.end(), alpha[i], y[i]);
    const UniPoly term = UniPoly::from_roots(roots);
    for (int p = 0; p <= term.degree(); ++p) acc[p] += c * term.coeff(p);
  }
  return UniPoly(std::move(acc));
}

Eigen::MatrixXd hessian_quadratic(const MultiAffinePoly& q,
                                  std::span<const int> vars) {
  if (q.d() != 2) throw DomainError("Hessian needs a quadratic (d = 2)");
  const auto m = static_cast<Eigen::Index>(vars.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = a + 1; b < m; ++b) {
      const int pair[2] = {vars[a], vars[b]};
      const double c = q.coeff(mask_from_elements(pair));
      h(a, b) = c;
      h(b, a) = c;
    }
  }
  return h;
}

Eigen::MatrixXd hessian_quadratic(const HomPoly& q, std::span<const int> vars) {
  if (q.d() != 2) throw DomainError("Hessian needs a quadratic (d = 2)");
  const auto m = static_cast<Eigen::Index>(vars.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    if (vars[a] < 0 || vars[a] >= q.n()) throw DomainError("variable out of range");
    for (Eigen::Index b = a; b < m; ++b) {
      Exponent alpha(q.n(), 0);
      alpha[vars[a]] += 1;
      alpha[vars[b]] += 1;
      const double c = q.coeff(alpha);
      if (a == b) {
        h(a, a) = 2.0 * c;
      } else {
        h(a, b) = c;
        h(b, a) = c;
      }
    }
  }
  return h;
}

MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  check_same_basis(a, b);
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return MultiAffinePoly(a.basis_ptr(), std::move(c));
}

MultiAffinePoly operator-(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  return a + (-1.0) * b;
}

MultiAffinePoly operator*(double factor, const MultiAffinePoly& f) {
  std::vector<double> c(f.coeffs().begin(), f.coeffs().end());
  for (double& x : c) x *= factor;
  return MultiAffinePoly(f.basis_ptr(), std::move(c));
}

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
  check_same_space(a, b);
  std::map<Exponent, double> terms = a.terms();
  for (const auto& [alpha, c] : b.terms()) terms[alpha] += c;
  return HomPoly(a.n(), a.d(), a.kappa(), std::move(terms));
}

HomPoly operator-(const HomPoly& a, const HomPoly& b) { return a + (-1.0) * b; }

HomPoly operator*(double factor, const HomPoly& f) {
  std::map<Exponent, double> terms = f.terms();
  for (auto& [alpha, c] : terms) c *= factor;
  return HomPoly(f.n(), f.d(), f.kappa(), std::move(terms));
}

double l2_norm(const MultiAffinePoly& f) { return f.vector().norm(); }

double l2_norm(const HomPoly& f) {
  double sq = 0.0;
  for (const auto& [alpha, c] : f.terms()) sq += c * c;
  return std::sqrt(sq);
}

std::vector<Mask> support(const MultiAffinePoly& f, double rel_tol) {
  double max_abs = 0.0;
  for (double c : f.coeffs()) max_abs = std::max(max_abs, std::abs(c));
  std::vector<Mask> out;
  if (max_abs == 0.0) return out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (std::abs(f[k]) > rel_tol * max_abs) out.push_back(f.basis().unrank(k));
  }
  return out;
}

std::vector<Exponent> support(const HomPoly& f, double rel_tol) {
  double max_abs = 0.0;
  for (const auto& [alpha, c] : f.terms()) max_abs = std::max(max_abs, std::abs(c));
  std::vector<Exponent> out;
  if (max_abs == 0.0) return out;
  for (const auto& [alpha, c] : f.terms()) {
    if (std::abs(c) > rel_tol * max_abs) out.push_back(alpha);
  }
  return out;
}

HomPoly to_hom(const MultiAffinePoly& f) {
  std::map<Exponent, double> terms;
  for (std::size_t k = 0; k < f.size(); ++k) {
    Exponent alpha(f.n(), 0);
    for (int i : mask_elements(f.basis().unrank(k))) alpha[i] = 1;
    terms[alpha] = f[k];
  }
  return HomPoly(f.n(), f.d(), std::vector<int>(f.n(), 1), std::move(terms));
}

MultiAffinePoly to_multiaffine(const HomPoly& f) {
  if (f.d() > f.n()) throw DomainError("degree exceeds variable count");
  auto basis = enumerate_subsets(f.n(), f.d());
  std::vector<double> coeffs(basis->size(), 0.0);
  for (const auto& [alpha, c] : f.terms()) {
    Mask s = 0;
    for (int i = 0; i < f.n(); ++i) {
      if (alpha[i] > 1) throw DomainError("polynomial is not multiaffine");
      if (alpha[i] == 1) s |= Mask{1} << i;
    }
    coeffs[basis->rank(s)] = c;
  }
  return MultiAffinePoly(basis, std::move(coeffs));
}

}  // namespace lorentz
