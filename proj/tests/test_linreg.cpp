#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "cointkit/distributions.hpp"
#include "cointkit/linreg.hpp"
#include "cointkit/random.hpp"
#include "oracles.hpp"

using namespace cointkit;

namespace {

Eigen::MatrixXd random_matrix(Rng& rng, Eigen::Index n, Eigen::Index k) {
  Eigen::MatrixXd m(n, k);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.normal();
  return m;
}

oracle::Mat to_rows(const Eigen::MatrixXd& m) {
  oracle::Mat out(static_cast<std::size_t>(m.rows()), oracle::Vec(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return out;
}

oracle::Vec to_vec(const Eigen::VectorXd& v) { return oracle::Vec(v.data(), v.data() + v.size()); }

double rel(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

}  // namespace

TEST(Ols, ExactLine) {
  Eigen::MatrixXd X(3, 2);
  X << 1, 1, 1, 2, 1, 3;
  const Eigen::VectorXd y = Eigen::Vector3d(2, 4, 6);
  const RegressionFit f = ols_fit(X, y);
  EXPECT_NEAR(f.coefficients(0), 0.0, 1e-12);
  EXPECT_NEAR(f.coefficients(1), 2.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_TRUE(f.has_intercept);
}

TEST(Ols, DuplicatedColumnIsRankDeficient) {
  Rng rng(1);
  Eigen::MatrixXd X = random_matrix(rng, 20, 3);
  X.col(2) = X.col(1);
  try {
    ols_fit(X, random_matrix(rng, 20, 1).col(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
  }
}

TEST(Ols, LinearCombinationIsRankDeficient) {
  Rng rng(2);
  for (int rep = 0; rep < 50; ++rep) {
    const Eigen::Index k = 2 + static_cast<Eigen::Index>(rng.uniform() * 4);
    Eigen::MatrixXd base = random_matrix(rng, 40, k);
    Eigen::VectorXd w = random_matrix(rng, k, 1).col(0);
    Eigen::MatrixXd X(40, k + 1);
    X << base, base * w;
    EXPECT_THROW(ols_fit(X, random_matrix(rng, 40, 1).col(0)), Error);
  }
}

TEST(Ols, ShapeErrors) {
  EXPECT_THROW(ols_fit(Eigen::MatrixXd::Ones(3, 1), Eigen::VectorXd::Ones(4)), Error);
  EXPECT_THROW(ols_fit(Eigen::MatrixXd::Ones(2, 2), Eigen::VectorXd::Ones(2)), Error);
}

TEST(Ols, MatchesNormalEquationsOracle) {
  Rng rng(20);
  Eigen::MatrixXd X = random_matrix(rng, 20, 3);
  X.col(0).setOnes();
  const Eigen::VectorXd y = X * Eigen::Vector3d(0.5, -1.0, 2.0) + random_matrix(rng, 20, 1).col(0);
  const RegressionFit f = ols_fit(X, y);
  const oracle::Ols o = oracle::normal_equations(to_rows(X), to_vec(y));
  for (Eigen::Index j = 0; j < 3; ++j) {
    EXPECT_LT(rel(f.coefficients(j), o.beta[static_cast<std::size_t>(j)]), 1e-10);
    EXPECT_LT(rel(f.standard_errors(j), o.se[static_cast<std::size_t>(j)]), 1e-10);
  }
  EXPECT_LT(rel(f.r_squared, o.r_squared), 1e-10);
}

TEST(Ols, Invariants) {
  Rng rng(21);
  for (int rep = 0; rep < 100; ++rep) {
    const Eigen::Index n = 10 + static_cast<Eigen::Index>(rng.uniform() * 40);
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng.uniform() * 5);
    Eigen::MatrixXd X = random_matrix(rng, n, k);
    X.col(0).setOnes();
    const Eigen::VectorXd y = 100.0 * random_matrix(rng, n, 1).col(0);
    const RegressionFit f = ols_fit(X, y);
    const double scale = X.norm() * y.norm();
    EXPECT_LT((X.transpose() * f.residuals).cwiseAbs().maxCoeff(), 1e-8 * scale);
    for (Eigen::Index j = 0; j < k; ++j)
      EXPECT_NEAR(f.t_statistics(j), f.coefficients(j) / f.standard_errors(j), 1e-10 * std::fabs(f.t_statistics(j)));
    EXPECT_LT(std::fabs(f.residuals.mean()), 1e-10 * y.cwiseAbs().maxCoeff());
    const double sst = (y.array() - y.mean()).square().sum();
    EXPECT_NEAR(f.r_squared, 1.0 - f.ssr / sst, 1e-12);
    EXPECT_LE(f.adjusted_r_squared, f.r_squared + 1e-15);
  }
}

TEST(Ols, FStatisticAgainstRestrictedFit) {
  Rng rng(22);
  Eigen::MatrixXd X = random_matrix(rng, 30, 4);
  X.col(0).setOnes();
  const Eigen::VectorXd y = X * Eigen::Vector4d(1, 0.3, 0, -0.2) + random_matrix(rng, 30, 1).col(0);
  const RegressionFit f = ols_fit(X, y);
  const double ssr0 = (y.array() - y.mean()).square().sum();
  const double expected = ((ssr0 - f.ssr) / 3.0) / (f.ssr / 26.0);
  EXPECT_NEAR(f.f_statistic, expected, 1e-10 * expected);
}

TEST(ResidualCovariance, SingleEquation) {
  const Eigen::VectorXd u = Eigen::Vector4d(1, -2, 3, 0.5);
  const Eigen::MatrixXd s = residual_covariance(Eigen::MatrixXd(u));
  EXPECT_NEAR(s(0, 0), u.squaredNorm() / 4.0, 1e-15);
  const Eigen::MatrixXd s_adj = residual_covariance(Eigen::MatrixXd(u), true, 1);
  EXPECT_NEAR(s_adj(0, 0), u.squaredNorm() / 3.0, 1e-15);
}

TEST(ResidualCovariance, IdenticalSeriesAreSingular) {
  Rng rng(4);
  const Eigen::VectorXd u = random_matrix(rng, 30, 1).col(0);
  const Eigen::MatrixXd s = residual_covariance(std::vector<Eigen::VectorXd>{u, u});
  EXPECT_NEAR(s.determinant(), 0.0, 1e-12);
  EXPECT_THROW(gaussian_loglik(s, 30), Error);
  EXPECT_THROW(residual_covariance(Eigen::MatrixXd::Ones(1, 2)), Error);
  EXPECT_THROW(residual_covariance(std::vector<Eigen::VectorXd>{u, Eigen::VectorXd::Ones(3)}), Error);
}

TEST(ResidualCovariance, MonteCarloBivariate) {
  Rng rng(20240101);
  const int T = 10000;
  Eigen::MatrixXd u(T, 2);
  const double c = std::sqrt(1.0 - 0.25);
  for (int t = 0; t < T; ++t) {
    const double z1 = rng.normal(), z2 = rng.normal();
    u(t, 0) = z1;
    u(t, 1) = 0.5 * z1 + c * z2;
  }
  const Eigen::MatrixXd s = residual_covariance(u);
  EXPECT_NEAR(s(0, 0), 1.0, 0.05);
  EXPECT_NEAR(s(1, 1), 1.0, 0.05);
  EXPECT_NEAR(s(0, 1), 0.5, 0.05);
  EXPECT_EQ(s(0, 1), s(1, 0));
}

TEST(GaussianLoglik, Examples) {
  EXPECT_NEAR(gaussian_loglik(Eigen::MatrixXd::Identity(1, 1), 1.0), -1.418939, 1e-6);
  for (int k = 1; k <= 5; ++k) {
    const double T = 17.0;
    EXPECT_NEAR(gaussian_loglik(Eigen::MatrixXd::Identity(k, k), T),
                -(T * k / 2.0) * (1.0 + std::log(2.0 * std::numbers::pi)), 1e-10);
  }
  Rng rng(6);
  Eigen::MatrixXd a = random_matrix(rng, 3, 3);
  const Eigen::MatrixXd sigma = a * a.transpose() + Eigen::MatrixXd::Identity(3, 3);
  const double c = 2.7, T = 23.0;
  EXPECT_NEAR(gaussian_loglik(sigma, T) - gaussian_loglik(c * sigma, T), (T * 3 / 2.0) * std::log(c), 1e-9);
}

TEST(GaussianLoglik, DecreasingInDeterminant) {
  Rng rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::MatrixXd a = random_matrix(rng, 3, 3);
    const Eigen::MatrixXd s1 = a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(3, 3);
    Eigen::MatrixXd b = random_matrix(rng, 3, 3);
    const Eigen::MatrixXd s2 = b * b.transpose() + 0.1 * Eigen::MatrixXd::Identity(3, 3);
    const bool det_smaller = s1.determinant() < s2.determinant();
    EXPECT_EQ(gaussian_loglik(s1, 30) > gaussian_loglik(s2, 30), det_smaller);
  }
}

TEST(Distributions, ChiSquareSurvival) {
  // p-values printed next to chi-square statistics in a published normality table
  EXPECT_NEAR(chi_square_sf(2.255247, 1), 0.1332, 5e-5);
  EXPECT_NEAR(chi_square_sf(0.020877, 1), 0.8851, 5e-5);
  EXPECT_NEAR(chi_square_sf(3.578783, 4), 0.4660, 5e-5);
  EXPECT_NEAR(chi_square_sf(2.265879, 2), 0.3221, 5e-5);
  EXPECT_NEAR(chi_square_sf(5.131234, 8), 0.7435, 5e-5);
  // df = 2 closed form
  for (double x : {0.1, 1.0, 4.0, 12.0}) EXPECT_NEAR(chi_square_sf(x, 2), std::exp(-x / 2.0), 1e-14);
  EXPECT_EQ(chi_square_sf(0.0, 3), 1.0);
  EXPECT_EQ(chi_square_sf(-1.0, 3), 1.0);
  EXPECT_EQ(chi_square_sf(std::numeric_limits<double>::infinity(), 3), 0.0);
}

TEST(Distributions, StudentT) {
  EXPECT_NEAR(student_t_critical(0.05, 1e9), 1.959964, 1e-6);
  EXPECT_NEAR(student_t_critical(0.05, 10), 2.228139, 1e-6);
  EXPECT_NEAR(student_t_two_sided_p(2.228139, 10), 0.05, 1e-7);
  EXPECT_NEAR(normal_cdf(0.0), 0.5, 1e-15);
}
