#pragma once

// Ordinary least squares via column-pivoted Householder QR, residual
// covariance, and the Gaussian log-likelihood of a residual system.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cointkit/errors.hpp"

namespace cointkit {

struct RegressionFit {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd standard_errors;
  Eigen::VectorXd t_statistics;
  Eigen::VectorXd residuals;
  Eigen::VectorXd fitted;
  double ssr = 0.0;
  double sigma2 = 0.0;  // ssr / (n - k)
  double r_squared = 0.0;
  double adjusted_r_squared = 0.0;
  double f_statistic = 0.0;
  Eigen::Index n_obs = 0;
  Eigen::Index n_regressors = 0;
  bool has_intercept = false;
};

/// Relative tolerance on |R_ii| below which a design is treated as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

namespace detail {

inline bool has_constant_column(const Eigen::MatrixXd& X) {
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    const double first = X(0, j);
    if (first != 0.0 && (X.col(j).array() == first).all()) return true;
  }
  return false;
}

}  // namespace detail

/// Fits y = X b + u. Whether the model carries an intercept is detected from
/// a constant nonzero column in X; it decides the centering of R^2 and which
/// coefficients the F-statistic tests.
inline RegressionFit ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const Eigen::Index n = X.rows();
  const Eigen::Index k = X.cols();
  if (n != y.size()) throw Error(ErrorCode::ShapeMismatch, "design rows differ from response length");
  if (k == 0) throw Error(ErrorCode::ShapeMismatch, "design has no columns");
  if (n <= k)
    throw Error(ErrorCode::ShapeMismatch,
                "need more observations (" + std::to_string(n) + ") than regressors (" +
                    std::to_string(k) + ")");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  const Eigen::MatrixXd& qr_r = qr.matrixQR();
  const double r_max = std::fabs(qr_r(0, 0));
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(std::fabs(qr_r(i, i)) > kRankTolerance * r_max))
      throw Error(ErrorCode::RankDeficient, "design matrix has collinear columns");
  }

  RegressionFit fit;
  fit.n_obs = n;
  fit.n_regressors = k;
  fit.has_intercept = detail::has_constant_column(X);
  fit.coefficients = qr.solve(y);
  fit.fitted = X * fit.coefficients;
  fit.residuals = y - fit.fitted;
  fit.ssr = fit.residuals.squaredNorm();
  const double dof = static_cast<double>(n - k);
  fit.sigma2 = fit.ssr / dof;

  // (X'X)^{-1} = P R^{-1} R^{-T} P'
  const Eigen::MatrixXd r_upper = qr_r.topLeftCorner(k, k).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd r_inv =
      r_upper.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  const Eigen::MatrixXd xtx_inv_perm = r_inv * r_inv.transpose();
  const auto& perm = qr.colsPermutation();
  const Eigen::MatrixXd xtx_inv = perm * xtx_inv_perm * perm.transpose();
  fit.standard_errors = (fit.sigma2 * xtx_inv.diagonal().array()).sqrt().matrix();
  fit.t_statistics = fit.coefficients.array() / fit.standard_errors.array();

  const double tss = fit.has_intercept ? (y.array() - y.mean()).matrix().squaredNorm() : y.squaredNorm();
  const double dn = static_cast<double>(n);
  fit.r_squared = tss > 0.0 ? 1.0 - fit.ssr / tss : 0.0;
  const double tested = static_cast<double>(fit.has_intercept ? k - 1 : k);
  fit.adjusted_r_squared =
      1.0 - (1.0 - fit.r_squared) * (fit.has_intercept ? dn - 1.0 : dn) / dof;
  if (tested > 0) {
    const double explained = tss - fit.ssr;
    fit.f_statistic = fit.ssr > 0.0 ? (explained / tested) / fit.sigma2
                                    : std::numeric_limits<double>::infinity();
  }
  return fit;
}

/// Sigma = U'U / T, or U'U / (T - m) when dof_adjust is set. Rows of U are
/// observations, columns are equations.
inline Eigen::MatrixXd residual_covariance(const Eigen::MatrixXd& residuals, bool dof_adjust = false,
                                           Eigen::Index regressors_per_equation = 0) {
  const Eigen::Index T = residuals.rows();
  if (T < 2 || residuals.cols() == 0)
    throw Error(ErrorCode::ShapeMismatch, "residual covariance needs at least two rows");
  const double divisor = dof_adjust ? static_cast<double>(T - regressors_per_equation)
                                    : static_cast<double>(T);
  if (!(divisor > 0.0)) throw Error(ErrorCode::ShapeMismatch, "non-positive covariance divisor");
  Eigen::MatrixXd sigma = residuals.transpose() * residuals / divisor;
  return (sigma + sigma.transpose()) / 2.0;
}

inline Eigen::MatrixXd residual_covariance(const std::vector<Eigen::VectorXd>& equations,
                                           bool dof_adjust = false,
                                           Eigen::Index regressors_per_equation = 0) {
  if (equations.empty()) throw Error(ErrorCode::ShapeMismatch, "no residual series");
  Eigen::MatrixXd u(equations.front().size(), static_cast<Eigen::Index>(equations.size()));
  for (std::size_t j = 0; j < equations.size(); ++j) {
    if (equations[j].size() != u.rows())
      throw Error(ErrorCode::ShapeMismatch, "residual series have different lengths");
    u.col(static_cast<Eigen::Index>(j)) = equations[j];
  }
  return residual_covariance(u, dof_adjust, regressors_per_equation);
}

/// ln det of a symmetric positive definite matrix; throws SingularCovariance.
inline double log_det_spd(const Eigen::MatrixXd& sigma) {
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::SingularCovariance, "covariance is not positive definite");
  const Eigen::VectorXd diag = llt.matrixL().toDenseMatrix().diagonal();
  if ((diag.array() <= 0.0).any())
    throw Error(ErrorCode::SingularCovariance, "covariance is not positive definite");
  return 2.0 * diag.array().log().sum();
}

/// l = -(T k / 2)(1 + ln 2 pi) - (T / 2) ln det Sigma
inline double gaussian_loglik(const Eigen::MatrixXd& sigma, double T) {
  const double k = static_cast<double>(sigma.rows());
  return -(T * k / 2.0) * (1.0 + std::log(2.0 * std::numbers::pi)) - (T / 2.0) * log_det_spd(sigma);
}

}  // namespace cointkit
