#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cointkit/diagnostics.hpp"
#include "cointkit/distributions.hpp"
#include "cointkit/random.hpp"
#include "oracles.hpp"

using namespace cointkit;

namespace {

Eigen::MatrixXd gaussian(Rng& rng, Eigen::Index T, Eigen::Index k) {
  Eigen::MatrixXd m(T, k);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.normal();
  return m;
}

Eigen::MatrixXd skewed(Rng& rng, Eigen::Index T, Eigen::Index k) {
  Eigen::MatrixXd m(T, k);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = std::exp(rng.normal());
  return m;
}

}  // namespace

TEST(Normality, SkewnessAnchor) {
  // a component skewness of -0.767024 over 23 observations
  EXPECT_NEAR(23.0 * std::pow(-0.767024, 2) / 6.0, 2.255247, 1e-3);
}

TEST(Normality, ComponentFormulas) {
  Rng rng(61);
  for (int rep = 0; rep < 50; ++rep) {
    const Eigen::Index T = 20 + rep, k = 1 + rep % 4;
    const NormalityResult r = multivariate_jb(rep % 2 ? skewed(rng, T, k) : gaussian(rng, T, k));
    ASSERT_EQ(r.components.size(), static_cast<std::size_t>(k));
    double joint = 0.0;
    for (const auto& c : r.components) {
      const double n = static_cast<double>(T);
      EXPECT_NEAR(c.skewness.chi_sq, n * c.skewness.value * c.skewness.value / 6.0, 1e-8);
      EXPECT_NEAR(c.kurtosis.chi_sq, n * std::pow(c.kurtosis.value - 3.0, 2) / 24.0, 1e-8);
      EXPECT_NEAR(c.jarque_bera.chi_sq, c.skewness.chi_sq + c.kurtosis.chi_sq, 1e-12);
      EXPECT_EQ(c.jarque_bera.df, 2u);
      joint += c.jarque_bera.chi_sq;
    }
    EXPECT_NEAR(r.joint_jarque_bera.chi_sq, joint, 1e-10);
    EXPECT_EQ(r.joint_skewness.df, static_cast<std::size_t>(k));
    EXPECT_EQ(r.joint_kurtosis.df, static_cast<std::size_t>(k));
    EXPECT_EQ(r.joint_jarque_bera.df, static_cast<std::size_t>(2 * k));
    for (const MomentTest* t : {&r.joint_skewness, &r.joint_kurtosis, &r.joint_jarque_bera}) {
      EXPECT_NEAR(t->p_value, chi_square_sf(t->chi_sq, static_cast<double>(t->df)), 1e-12);
      EXPECT_GE(t->p_value, 0.0);
      EXPECT_LE(t->p_value, 1.0);
    }
  }
}

TEST(Normality, UnivariateMatchesOracle) {
  Rng rng(62);
  for (int rep = 0; rep < 50; ++rep) {
    const Eigen::MatrixXd u = rep % 2 ? skewed(rng, 30 + rep, 1) : gaussian(rng, 30 + rep, 1);
    const oracle::Vec v(u.data(), u.data() + u.size());
    const double expected = oracle::jarque_bera(v);
    EXPECT_NEAR(multivariate_jb(u).joint_jarque_bera.chi_sq, expected, 1e-10 * std::max(1.0, expected));
  }
}

TEST(Normality, OrthogonalizedCovarianceIsIdentity) {
  Rng rng(63);
  Eigen::MatrixXd mix(3, 3);
  mix << 2, 0, 0, 1, 0.5, 0, -1, 3, 0.1;
  const Eigen::MatrixXd u = gaussian(rng, 100, 3) * mix.transpose();
  const NormalityResult r = multivariate_jb(u);
  const Eigen::MatrixXd w = r.orthogonalized;
  const Eigen::MatrixXd centered = w.rowwise() - w.colwise().mean();
  const Eigen::MatrixXd cov = centered.transpose() * centered / 100.0;
  EXPECT_LT((cov - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Normality, SymmetricSampleHasZeroSkewness) {
  Rng rng(64);
  const Eigen::MatrixXd half = gaussian(rng, 20, 1);
  Eigen::MatrixXd u(40, 1);
  u << half, -half;
  const NormalityResult r = multivariate_jb(u);
  EXPECT_NEAR(r.components[0].skewness.value, 0.0, 1e-12);
  EXPECT_NEAR(r.components[0].skewness.chi_sq, 0.0, 1e-12);
}

TEST(Normality, Errors) {
  Rng rng(65);
  EXPECT_THROW(multivariate_jb(gaussian(rng, 7, 2)), Error);
  Eigen::MatrixXd u = gaussian(rng, 30, 2);
  u.col(1) = 2.0 * u.col(0);
  try {
    multivariate_jb(u);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularCovariance);
  }
}

TEST(Normality, LargeGaussianSample) {
  Rng rng(66);
  const NormalityResult r = multivariate_jb(gaussian(rng, 5000, 4));
  for (const auto& c : r.components) EXPECT_NEAR(c.kurtosis.value, 3.0, 0.15);
}

TEST(Normality, JointSize) {
  int rejections = 0;
  for (std::uint64_t j = 0; j < 500; ++j) {
    Rng rng(derive_seed(67, j));
    rejections += multivariate_jb(gaussian(rng, 300, 4)).joint_jarque_bera.p_value <= 0.05;
  }
  EXPECT_GE(rejections, 10);
  EXPECT_LE(rejections, 45);
}

TEST(White, SingleProductIsTRSquared) {
  Rng rng(68);
  for (int rep = 0; rep < 20; ++rep) {
    const Eigen::Index T = 40 + rep;
    const Eigen::MatrixXd x = gaussian(rng, T, 2);
    Eigen::MatrixXd u = gaussian(rng, T, 1);
    u.array() *= 1.0 + 0.5 * x.col(0).array().abs();
    const HeteroskedasticityResult r = white_system_test(u, x);
    oracle::Mat z;
    oracle::Vec y;
    for (Eigen::Index t = 0; t < T; ++t) {
      z.push_back({1.0, x(t, 0), x(t, 1), x(t, 0) * x(t, 0), x(t, 1) * x(t, 1)});
      y.push_back(u(t, 0) * u(t, 0));
    }
    const double expected = static_cast<double>(T) * oracle::normal_equations(z, y).r_squared;
    EXPECT_NEAR(r.chi_sq, expected, 1e-9 * expected);
    EXPECT_EQ(r.df, 4u);
    EXPECT_NEAR(r.auxiliary_r_squared[0] * static_cast<double>(T), expected, 1e-9 * expected);
  }
}

TEST(White, ResultConsistency) {
  Rng rng(69);
  const Eigen::MatrixXd u = gaussian(rng, 80, 3);
  Eigen::MatrixXd x(80, 4);
  x << Eigen::VectorXd::Ones(80), gaussian(rng, 80, 3);
  const HeteroskedasticityResult r = white_system_test(u, x, 0.05);
  // the constant column is dropped; q = 3 regressors, m = 6 products
  EXPECT_EQ(r.df, 36u);
  EXPECT_EQ(r.auxiliary_r_squared.size(), 6u);
  EXPECT_GE(r.chi_sq, 0.0);
  EXPECT_NEAR(r.p_value, chi_square_sf(r.chi_sq, 36.0), 1e-8);
  EXPECT_EQ(r.verdict == Verdict::heteroscedastic, r.p_value <= 0.05);
}

TEST(White, DetectsVarianceDrivenByRegressor) {
  int rejections = 0;
  for (std::uint64_t j = 0; j < 100; ++j) {
    Rng rng(derive_seed(70, j));
    const Eigen::MatrixXd x = gaussian(rng, 300, 2);
    Eigen::MatrixXd u = gaussian(rng, 300, 2);
    u.col(0).array() *= 0.2 + x.col(0).array().abs();
    rejections += white_system_test(u, x).verdict == Verdict::heteroscedastic;
  }
  EXPECT_GE(rejections, 90);
}

TEST(White, SizeOnHomoscedasticResiduals) {
  int rejections = 0;
  for (std::uint64_t j = 0; j < 500; ++j) {
    Rng rng(derive_seed(71, j));
    rejections += white_system_test(gaussian(rng, 300, 3), gaussian(rng, 300, 4)).p_value <= 0.05;
  }
  EXPECT_GE(rejections, 10);
  EXPECT_LE(rejections, 45);
}

TEST(White, Errors) {
  Rng rng(72);
  const Eigen::MatrixXd x = gaussian(rng, 30, 2);
  try {
    white_system_test(Eigen::MatrixXd::Zero(30, 2), x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
  }
  EXPECT_THROW(white_system_test(gaussian(rng, 29, 2), x), Error);
  EXPECT_THROW(white_system_test(gaussian(rng, 30, 2), Eigen::MatrixXd::Ones(30, 1)), Error);
  EXPECT_THROW(white_system_test(gaussian(rng, 5, 2), gaussian(rng, 5, 3)), Error);
}

TEST(ChiSquare, PValueDecreasesWithStatistic) {
  for (double df : {1.0, 2.0, 8.0, 100.0}) {
    double prev = 1.0;
    for (double x = 0.0; x < 300.0; x += 0.5) {
      const double p = chi_square_sf(x, df);
      EXPECT_LE(p, prev);
      EXPECT_GE(p, 0.0);
      prev = p;
    }
  }
}
