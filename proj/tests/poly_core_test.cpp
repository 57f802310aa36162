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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lorentz/error.hpp"
#include "lorentz/poly_core.hpp"
#include "lorentz/poly_json.hpp"
#include "lorentz/polarize.hpp"
#include "lorentz/symmetric_eigen.hpp"
#include "lorentz/univariate.hpp"
#include "oracles.hpp"

namespace lorentz {
namespace {

Mask m(std::initializer_list<int> one_based) {
  Mask s = 0;
  for (int v : one_based) s |= Mask{1} << (v - 1);
  return s;
}

MultiAffinePoly random_multiaffine(int n, int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto basis = enumerate_subsets(n, d);
  std::vector<double> c(basis->size());
  for (double& v : c) v = u(rng);
  return MultiAffinePoly(basis, c);
}

std::vector<double> random_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> p(n);
  for (double& v : p) v = u(rng);
  return p;
}

TEST(SubsetBasis, SingleSubset) {
  SubsetBasis b(2, 2);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.unrank(0), m({1, 2}));
}

TEST(SubsetBasis, ColexOrder) {
  SubsetBasis b(3, 2);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.unrank(0), m({1, 2}));
  EXPECT_EQ(b.unrank(1), m({1, 3}));
  EXPECT_EQ(b.unrank(2), m({2, 3}));
}

TEST(SubsetBasis, SizeIsBinomial) {
  EXPECT_EQ(SubsetBasis(6, 3).size(), 20u);
  for (int n = 1; n <= 12; ++n) {
    for (int d = 0; d <= n; ++d) EXPECT_EQ(SubsetBasis(n, d).size(), binomial(n, d));
  }
}

TEST(SubsetBasis, RankRoundTrip) {
  for (int n = 1; n <= 10; ++n) {
    for (int d = 0; d <= n; ++d) {
      SubsetBasis b(n, d);
      for (std::size_t k = 0; k < b.size(); ++k) ASSERT_EQ(b.rank(b.unrank(k)), k);
    }
  }
}

TEST(SubsetBasis, Errors) {
  EXPECT_THROW(SubsetBasis(17, 2), DomainError);
  EXPECT_THROW(SubsetBasis(3, 4), DomainError);
  EXPECT_THROW(SubsetBasis(3, -1), DomainError);
  SubsetBasis b(4, 2);
  EXPECT_THROW(b.rank(m({1, 2, 3})), DomainError);
  EXPECT_THROW(b.rank(m({1, 5})), DomainError);
  EXPECT_FALSE(b.find(m({1})).has_value());
}

TEST(Elementary, Examples) {
  const MultiAffinePoly e23 = elementary_symmetric(3, 2);
  for (double c : e23.coeffs()) EXPECT_EQ(c, 1.0);
  EXPECT_EQ(e23.size(), 3u);
  const MultiAffinePoly e12 = elementary_symmetric(2, 1);
  EXPECT_EQ(e12.coeff(m({1})), 1.0);
  EXPECT_EQ(e12.coeff(m({2})), 1.0);
  const MultiAffinePoly g = normalize(e23);
  EXPECT_DOUBLE_EQ(value_at_ones(g), 1.0);
  for (double c : g.coeffs()) EXPECT_DOUBLE_EQ(c, 1.0 / 3.0);
}

TEST(Evaluate, Examples) {
  const std::vector<double> ones{1, 1, 1};
  EXPECT_EQ(evaluate(elementary_symmetric(3, 2), ones), 3.0);
  HomPoly w1w2(2, 2, {}, {{{1, 1}, 1.0}});
  EXPECT_EQ(evaluate(w1w2, std::vector<double>{2, 3}), 6.0);
  EXPECT_NEAR(evaluate(f_n_d(2, 2), std::vector<double>{1, 1}), 1.0, 1e-15);
}

TEST(Evaluate, WrongArity) {
  EXPECT_THROW(evaluate(elementary_symmetric(3, 2), std::vector<double>{1, 1}), DomainError);
}

TEST(PartialDerivative, Examples) {
  const MultiAffinePoly e23 = elementary_symmetric(3, 2);
  const MultiAffinePoly g = partial_derivative_set(e23, m({1}));
  EXPECT_EQ(g.d(), 1);
  EXPECT_EQ(g.coeff(m({1})), 0.0);
  EXPECT_EQ(g.coeff(m({2})), 1.0);
  EXPECT_EQ(g.coeff(m({3})), 1.0);

  const MultiAffinePoly same = partial_derivative_set(e23, 0);
  EXPECT_EQ(std::vector<double>(same.coeffs().begin(), same.coeffs().end()),
            std::vector<double>(e23.coeffs().begin(), e23.coeffs().end()));

  const MultiAffinePoly h = partial_derivative_set(elementary_symmetric(4, 3), m({1, 2}));
  EXPECT_EQ(h.coeff(m({3})), 1.0);
  EXPECT_EQ(h.coeff(m({4})), 1.0);
  EXPECT_EQ(h.coeff(m({1})), 0.0);
  EXPECT_EQ(h.coeff(m({2})), 0.0);
}

TEST(PartialDerivative, MatchesFiniteDifferences) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    const int d = 2 + trial % (n - 1);
    const MultiAffinePoly f = random_multiaffine(n, d, rng);
    const std::vector<double> p = random_point(n, rng);
    const double h = 1e-3;
    for (int i = 0; i < n; ++i) {
      std::vector<double> plus = p, minus = p;
      plus[i] += h;
      minus[i] -= h;
      const double fd = (evaluate(f, plus) - evaluate(f, minus)) / (2 * h);
      const double exact = evaluate(partial_derivative_set(f, Mask{1} << i), p);
      EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact)));
    }
    // mixed second derivative
    auto shifted = [&](double a, double b) {
      std::vector<double> q = p;
      q[0] += a;
      q[1] += b;
      return evaluate(f, q);
    };
    const double fd2 =
        (shifted(h, h) - shifted(h, -h) - shifted(-h, h) + shifted(-h, -h)) / (4 * h * h);
    const double exact2 = evaluate(partial_derivative_set(f, m({1, 2})), p);
    EXPECT_NEAR(fd2, exact2, 1e-6 * std::max(1.0, std::abs(exact2)));
  }
}

TEST(PartialDerivative, DegreeTooSmall) {
  EXPECT_THROW(partial_derivative_set(elementary_symmetric(3, 1), m({1, 2})), DomainError);
}

TEST(RestrictLine, Examples) {
  HomPoly w1w2(2, 2, {}, {{{1, 1}, 1.0}});
  UniPoly p = restrict_line(w1w2, std::vector<double>{1, -1});
  ASSERT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff(0), -1.0);
  EXPECT_EQ(p.coeff(1), 0.0);
  EXPECT_EQ(p.coeff(2), 1.0);

  UniPoly q = restrict_line(elementary_symmetric(2, 1), std::vector<double>{0.3, 0.5});
  EXPECT_DOUBLE_EQ(q.coeff(1), 2.0);
  EXPECT_DOUBLE_EQ(q.coeff(0), -0.8);

  UniPoly r = restrict_line(to_multiaffine(w1w2), std::vector<double>{0, 0});
  EXPECT_EQ(r.degree(), 2);
  EXPECT_EQ(r.coeff(0), 0.0);
  EXPECT_EQ(r.coeff(1), 0.0);
  EXPECT_EQ(r.coeff(2), 1.0);
}

TEST(RestrictLine, LeadingCoefficientIsValueAtOnes) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const int d = 1 + trial % n;
    const MultiAffinePoly f = random_multiaffine(n, d, rng);
    const UniPoly p = restrict_line(f, random_point(n, rng));
    EXPECT_NEAR(p.coeff(d), value_at_ones(f), 1e-12);
  }
}

TEST(RestrictLine, CommutesWithDerivative) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 4;
    const int d = 2 + trial % (n - 1);
    const MultiAffinePoly f = random_multiaffine(n, d, rng);
    const std::vector<double> y = random_point(n, rng);
    for (Mask s : oracle::all_subsets(n, d - 2)) {
      const MultiAffinePoly g = partial_derivative_set(f, s);
      const UniPoly line = restrict_line(g, y);
      for (double t : {-1.5, 0.0, 0.7, 2.0}) {
        std::vector<double> point(n);
        for (int i = 0; i < n; ++i) point[i] = t - y[i];
        EXPECT_NEAR(line(t), evaluate(g, point), 1e-10);
      }
    }
  }
}

TEST(RestrictLine, HomPolyMatchesEvaluation) {
  HomPoly f(2, 3, {}, {{{3, 0}, 0.5}, {{1, 2}, 2.0}, {{0, 3}, -1.0}});
  const std::vector<double> y{0.4, -1.1};
  const UniPoly p = restrict_line(f, y);
  for (double t : {-1.0, 0.5, 3.0}) {
    EXPECT_NEAR(p(t), evaluate(f, std::vector<double>{t - y[0], t - y[1]}), 1e-12);
  }
}

TEST(Hessian, Examples) {
  const Eigen::MatrixXd h = hessian_quadratic(elementary_symmetric(3, 2), std::vector<int>{0, 1, 2});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(h(i, j), i == j ? 0.0 : 1.0);
  }
  const SymmetricSpectrum spec = symmetric_eigen(h);
  EXPECT_NEAR(spec.eigenvalues(0), 2.0, 1e-12);
  EXPECT_NEAR(spec.eigenvalues(1), -1.0, 1e-12);
  EXPECT_NEAR(spec.eigenvalues(2), -1.0, 1e-12);

  HomPoly w1w2(2, 2, {}, {{{1, 1}, 1.0}});
  const Eigen::MatrixXd h2 = hessian_quadratic(w1w2, std::vector<int>{0, 1});
  EXPECT_EQ(h2(0, 0), 0.0);
  EXPECT_EQ(h2(0, 1), 1.0);
  EXPECT_EQ(h2(1, 0), 1.0);

  auto b = enumerate_subsets(3, 2);
  MultiAffinePoly push(b, {0.5, 0.5, 0.0});
  const Eigen::MatrixXd h3 = hessian_quadratic(push, std::vector<int>{0, 1, 2});
  EXPECT_EQ(h3(0, 1), 0.5);
  EXPECT_EQ(h3(0, 2), 0.5);
  EXPECT_EQ(h3(1, 2), 0.0);
  const SymmetricSpectrum s3 = symmetric_eigen(h3);
  EXPECT_NEAR(s3.eigenvalues(0), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s3.eigenvalues(1), 0.0, 1e-12);
  EXPECT_NEAR(s3.eigenvalues(2), -1 / std::sqrt(2.0), 1e-12);
}

TEST(Hessian, HomPolyDiagonal) {
  const HomPoly f = f_n_d(2, 2);
  const Eigen::MatrixXd h = hessian_quadratic(f, std::vector<int>{0, 1});
  EXPECT_NEAR(h(0, 0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(h(1, 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(h(0, 1), 2.0 / 3.0, 1e-15);
}

TEST(HomPoly, Validation) {
  EXPECT_THROW(HomPoly(2, 2, {}, {{{1, 0}, 1.0}}), DomainError);
  EXPECT_THROW(HomPoly(2, 2, {}, {{{1, 1, 0}, 1.0}}), DomainError);
  EXPECT_THROW(HomPoly(2, 2, {1, 1}, {{{2, 0}, 1.0}}), DomainError);
  EXPECT_THROW(HomPoly(2, 2, {}, {{{3, -1}, 1.0}}), DomainError);
  HomPoly zeros(2, 2, {}, {{{2, 0}, 0.0}, {{1, 1}, 1.0}});
  EXPECT_EQ(zeros.terms().size(), 1u);
}

TEST(Normalize, RejectsNonPositiveMass) {
  HomPoly f(2, 1, {}, {{{1, 0}, 1.0}, {{0, 1}, -1.0}});
  EXPECT_THROW(normalize(f), DomainError);
}

TEST(Support, RelativeTolerance) {
  auto b = enumerate_subsets(3, 2);
  MultiAffinePoly f(b, {1.0, 1e-13, 0.5});
  EXPECT_EQ(support(f).size(), 2u);
  EXPECT_EQ(support(f, 1e-14).size(), 3u);
}

TEST(Conversions, RoundTrip) {
  std::mt19937_64 rng(3);
  const MultiAffinePoly f = random_multiaffine(5, 3, rng);
  const MultiAffinePoly g = to_multiaffine(to_hom(f));
  for (std::size_t k = 0; k < f.size(); ++k) EXPECT_EQ(f[k], g[k]);
  HomPoly sq(2, 2, {}, {{{2, 0}, 1.0}});
  EXPECT_THROW(to_multiaffine(sq), DomainError);
}

TEST(Univariate, Basics) {
  const UniPoly p = UniPoly::from_roots(std::vector<double>{1, 2, 3});
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.coeff(0), -6.0);
  EXPECT_EQ(p(2.0), 0.0);
  const UniPoly dp = p.derivative();
  EXPECT_EQ(dp.coeff(0), 11.0);
  EXPECT_EQ(p.derivative(4).degree(), -1);
  EXPECT_TRUE(UniPoly(std::vector<double>{0, 0}).is_zero());
}

TEST(SymmetricEigen, Examples) {
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  auto s = symmetric_eigen(swap);
  EXPECT_NEAR(s.eigenvalues(0), 1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues(1), -1.0, 1e-14);

  Eigen::MatrixXd j = Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3);
  auto t = symmetric_eigen(j);
  EXPECT_NEAR(t.eigenvalues(0), 2.0, 1e-14);
  EXPECT_NEAR(t.eigenvalues(1), -1.0, 1e-14);
  EXPECT_NEAR(t.eigenvalues(2), -1.0, 1e-14);

  auto id = symmetric_eigen(Eigen::MatrixXd::Identity(4, 4));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(id.eigenvalues(i), 1.0);
}

TEST(SymmetricEigen, AgreesWithReferenceSolver) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 12;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k <= i; ++k) a(i, k) = a(k, i) = normal(rng);
    }
    const SymmetricSpectrum s = symmetric_eigen(a);
    const Eigen::VectorXd ref = oracle::eigen_eigenvalues_desc(a);
    EXPECT_LT((s.eigenvalues - ref).cwiseAbs().maxCoeff(), 1e-11);
    const Eigen::MatrixXd& v = s.eigenvectors;
    EXPECT_LT((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-11);
    EXPECT_LT((a * v - v * s.eigenvalues.asDiagonal()).norm(), 1e-10);
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) {
        if (std::abs(v(r, c)) > 1e-10) {
          EXPECT_GT(v(r, c), 0.0);
          break;
        }
      }
    }
  }
}

TEST(SymmetricEigen, RejectsAsymmetric) {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 0.5, 0;
  EXPECT_THROW(symmetric_eigen(a), DomainError);
  EXPECT_THROW(symmetric_eigen(Eigen::MatrixXd(2, 3)), DomainError);
}

TEST(PolyJson, RoundTripIsByteStable) {
  const std::string text = R"({"n": 3, "d": 2, "terms": [
      {"exponent": [0, 1, 1], "coeff": 0.1},
      {"exponent": [1, 1, 0], "coeff": 0.7},
      {"exponent": [1, 0, 1], "coeff": 0.2}]})";
  const std::string once = poly_to_string(normalize(parse_poly(text)));
  const std::string twice = poly_to_string(normalize(parse_poly(once)));
  EXPECT_EQ(once, twice);
}

TEST(PolyJson, KappaPreserved) {
  HomPoly f(2, 2, {2, 1}, {{{2, 0}, 0.5}, {{1, 1}, 0.5}});
  const HomPoly g = parse_poly(poly_to_string(f));
  EXPECT_EQ(g.kappa(), f.kappa());
  EXPECT_EQ(g.terms(), f.terms());
}

TEST(PolyJson, SchemaErrorsNameTheField) {
  auto message = [](const std::string& text) {
    try {
      parse_poly(text);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"d": 1, "terms": []})").find("n"), std::string::npos);
  EXPECT_NE(message(R"({"n": 2, "d": 1, "terms": [{"exponent": [1, 0], "coeff": "x"}]})")
                .find("terms[0].coeff"),
            std::string::npos);
  EXPECT_NE(message(R"({"n": 2, "d": 1, "terms": [{"exponent": [1, 1], "coeff": 1}]})")
                .find("terms[0]"),
            std::string::npos);
  EXPECT_NE(message(R"({"n": 2, "d": 1, "terms": [{"exponent": [1, 0], "coeff": 1},
                                                  {"exponent": [1, 0], "coeff": 2}]})")
                .find("terms[1]"),
            std::string::npos);
  EXPECT_NE(message("{\"n\": 2,\n \"d\": }").find("line"), std::string::npos);
}

}  // namespace
}  // namespace lorentz
