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

#include "lorentz/sep_flow.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "lorentz/error.hpp"
#include "lorentz/symmetric_eigen.hpp"

namespace lorentz {
namespace {

constexpr double kOverflowExponent = 700.0;
constexpr double kClusterTolerance = 1e-8;

// Orthonormal basis of span(cluster) built from projections of the
// coordinate vectors e_0, e_1, ... in order.
Eigen::MatrixXd canonical_basis(const Eigen::MatrixXd& cluster) {
  const Eigen::Index dim = cluster.rows();
  const Eigen::Index m = cluster.cols();
  Eigen::MatrixXd out(dim, m);
  Eigen::Index accepted = 0;
  for (Eigen::Index k = 0; k < dim && accepted < m; ++k) {
    Eigen::VectorXd v = cluster * cluster.row(k).transpose();
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index a = 0; a < accepted; ++a) {
        v -= out.col(a).dot(v) * out.col(a);
      }
    }
    const double norm = v.norm();
    if (norm > 1e-6) out.col(accepted++) = v / norm;
  }
  if (accepted < m) throw Rejection("failed to orthonormalize a degenerate eigenspace");
  canonicalize_signs(out);
  return out;
}

}  // namespace

TranspositionRates::TranspositionRates(int n, std::map<std::pair<int, int>, double> rates)
    : n_(n) {
  if (n < 2) throw DomainError("transposition rates need n >= 2");
  double total = 0.0;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [pair, q] : rates) {
    auto [i, j] = pair;
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n || i == j) {
      throw DomainError("transposition (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not a pair of [n]");
    }
    if (!(q >= 0.0) || !std::isfinite(q)) throw DomainError("rates must be nonnegative");
    if (rates_.contains({i, j})) throw DomainError("duplicate transposition rate");
    rates_[{i, j}] = q;
    total += q;
    if (q > 0.0) parent[root(i)] = root(j);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("rates sum to " + std::to_string(total) + ", expected 1");
  }
  for (int v = 1; v < n; ++v) {
    if (root(v) != root(0)) {
      throw Rejection("positive-rate transpositions do not generate S_n");
    }
  }
}

TranspositionRates uniform_rates(int n) {
  if (n < 2) throw DomainError("uniform rates need n >= 2");
  std::map<std::pair<int, int>, double> rates;
  const double q = 1.0 / static_cast<double>(binomial(n, 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) rates[{i, j}] = q;
  }
  return TranspositionRates(n, std::move(rates));
}

SepGenerator build_generator(BasisPtr basis, const TranspositionRates& rates) {
  if (basis->n() != rates.n()) throw DomainError("rates and basis disagree on n");
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(dim, dim);
  const auto subsets = basis->subsets();
  for (Eigen::Index b = 0; b < dim; ++b) {
    const Mask from = subsets[b];
    for (const auto& [pair, q] : rates.rates()) {
      if (q == 0.0) continue;
      const Mask bi = Mask{1} << pair.first;
      const Mask bj = Mask{1} << pair.second;
      Mask to = from;
      if (((from & bi) != 0) != ((from & bj) != 0)) to ^= bi | bj;
      matrix(static_cast<Eigen::Index>(basis->rank(to)), b) += q;
    }
  }
  return SepGenerator{std::move(basis), std::move(matrix), rates};
}

SepSpectrum spectral(const SepGenerator& generator) {
  const SymmetricSpectrum raw = symmetric_eigen(generator.matrix);
  const Eigen::Index dim = raw.eigenvalues.size();

  SepSpectrum spec;
  spec.basis = generator.basis;
  spec.eigenvalues = raw.eigenvalues;
  spec.eigenvectors.resize(dim, dim);
  spec.eigenvectors.col(0) =
      Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));

  if (std::abs(raw.eigenvalues(0) - 1.0) > 1e-9) {
    throw Rejection("top eigenvalue " + std::to_string(raw.eigenvalues(0)) + " != 1");
  }
  if (dim > 1 && raw.eigenvalues(0) - raw.eigenvalues(1) <= 1e-9) {
    throw Rejection("eigenvalue 1 is not simple; generator is not primitive");
  }
  if (dim > 1 && raw.eigenvalues(dim - 1) <= -1.0 + 1e-9) {
    throw Rejection("smallest eigenvalue " + std::to_string(raw.eigenvalues(dim - 1)) +
                    " <= -1 + 1e-9; generator is periodic");
  }

  Eigen::Index start = 1;
  while (start < dim) {
    Eigen::Index end = start + 1;
    while (end < dim &&
           raw.eigenvalues(end - 1) - raw.eigenvalues(end) <= kClusterTolerance) {
      ++end;
    }
    spec.eigenvectors.middleCols(start, end - start) =
        canonical_basis(raw.eigenvectors.middleCols(start, end - start));
    start = end;
  }
  return spec;
}

int check_primitivity(const SepGenerator& generator) {
  const auto dim = static_cast<std::size_t>(generator.matrix.rows());
  const std::size_t words = (dim + 63) / 64;
  using Row = std::vector<std::uint64_t>;
  std::vector<Row> adjacency(dim, Row(words, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (generator.matrix(i, j) > 0.0) adjacency[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  Row full(words, ~std::uint64_t{0});
  if (dim % 64 != 0) full.back() = (std::uint64_t{1} << (dim % 64)) - 1;

  std::vector<Row> reach = adjacency;
  for (std::size_t m = 1; m <= 2 * dim; ++m) {
    bool positive = true;
    for (const Row& row : reach) {
      if (row != full) {
        positive = false;
        break;
      }
    }
    if (positive) return static_cast<int>(m);
    std::vector<Row> next(dim, Row(words, 0));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t w = 0; w < words; ++w) {
        for (std::uint64_t bits = reach[i][w]; bits != 0; bits &= bits - 1) {
          const std::size_t k = w * 64 + std::countr_zero(bits);
          for (std::size_t v = 0; v < words; ++v) next[i][v] |= adjacency[k][v];
        }
      }
    }
    reach = std::move(next);
  }
  throw Rejection("no power L^m with m <= 2N' is entrywise positive");
}

namespace {

Eigen::VectorXd mode_factors(double s, const SepSpectrum& spec) {
  const Eigen::Index dim = spec.eigenvalues.size();
  if (s < 0.0 && dim > 1 && -s * (1.0 - spec.lambda_min()) > kOverflowExponent) {
    throw Rejection("backward flow to s = " + std::to_string(s) +
                    " overflows (exponent above 700)");
  }
  Eigen::VectorXd factors(dim);
  factors(0) = 1.0;
  for (Eigen::Index j = 1; j < dim; ++j) {
    factors(j) = std::exp(-s * (1.0 - spec.eigenvalues(j)));
  }
  return factors;
}

void check_dimension(const MultiAffinePoly& f, const SepSpectrum& spec) {
  if (!(f.basis() == *spec.basis)) {
    throw DomainError("polynomial basis does not match the spectral decomposition");
  }
}

}  // namespace

MultiAffinePoly flow(const MultiAffinePoly& f, double s, const SepSpectrum& spec) {
  check_dimension(f, spec);
  if (s == 0.0) return f;
  const Eigen::VectorXd factors = mode_factors(s, spec);
  const Eigen::Index modes = spec.modes();
  const auto rest = spec.eigenvectors.rightCols(modes);
  Eigen::VectorXd centered =
      rest * factors.tail(modes).cwiseProduct(rest.transpose() * f.vector());
  // The modes are orthogonal to 1 only up to round-off, which a backward flow
  // amplifies; pin the mass to x_0 exactly.
  if (modes > 0) centered.array() -= centered.mean();
  const double x0 = value_at_ones(f);
  Eigen::VectorXd out = centered.array() + x0 / static_cast<double>(centered.size());
  return MultiAffinePoly(spec.basis, std::vector<double>(out.begin(), out.end()));
}

Eigen::MatrixXd flow_matrix(double s, const SepSpectrum& spec) {
  const Eigen::VectorXd factors = mode_factors(s, spec);
  return spec.eigenvectors * factors.asDiagonal() * spec.eigenvectors.transpose();
}

EigenCoords eigen_coords(const MultiAffinePoly& f, const SepSpectrum& spec) {
  check_dimension(f, spec);
  EigenCoords coords;
  coords.x0 = value_at_ones(f);
  const Eigen::Index modes = spec.modes();
  coords.x = spec.eigenvectors.rightCols(modes).transpose() * f.vector();
  return coords;
}

MultiAffinePoly from_eigen_coords(const EigenCoords& coords, const SepSpectrum& spec) {
  const Eigen::Index dim = spec.eigenvalues.size();
  if (coords.x.size() != spec.modes()) throw DomainError("coordinate vector has wrong length");
  Eigen::VectorXd c = Eigen::VectorXd::Constant(dim, coords.x0 / static_cast<double>(dim));
  c += spec.eigenvectors.rightCols(spec.modes()) * coords.x;
  return MultiAffinePoly(spec.basis, std::vector<double>(c.begin(), c.end()));
}

double centered_norm(const MultiAffinePoly& f, const SepSpectrum& spec) {
  return eigen_coords(f, spec).x.norm();
}

RadiusBounds radius_bounds(double r, double s, const SepSpectrum& spec) {
  if (r < 0.0) throw DomainError("radius must be nonnegative");
  return {r * std::exp(-s * (1.0 - spec.lambda_min())),
          r * std::exp(-s * (1.0 - spec.lambda_1()))};
}

MultiAffinePoly symmetrize_partition(const MultiAffinePoly& f, const Partition& blocks) {
  const int n = f.n();
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("partition has an empty block");
    for (int v : blocks[b]) {
      if (v < 0 || v >= n) throw DomainError("partition names a variable outside [n]");
      if (block_of[v] != -1) throw DomainError("partition blocks overlap");
      block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (block_of[v] == -1) throw DomainError("partition does not cover every variable");
  }

  std::map<std::vector<int>, std::pair<double, int>> orbit_sums;
  std::vector<std::vector<int>> keys(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::vector<int> counts(blocks.size(), 0);
    for (int v : mask_elements(f.basis().unrank(k))) ++counts[block_of[v]];
    auto& [sum, size] = orbit_sums[counts];
    sum += f[k];
    ++size;
    keys[k] = std::move(counts);
  }
  std::vector<double> coeffs(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& [sum, size] = orbit_sums[keys[k]];
    coeffs[k] = sum / size;
  }
  return MultiAffinePoly(f.basis_ptr(), std::move(coeffs));
}

}  // namespace lorentz
