#pragma once

// Residual diagnostics for a fitted system: a White-type heteroskedasticity
// test over all residual cross-products, and the Cholesky-orthogonalized
// multivariate Jarque-Bera test.

#include <cmath>
#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cointkit/distributions.hpp"
#include "cointkit/errors.hpp"
#include "cointkit/linreg.hpp"

namespace cointkit {

enum class Verdict { homoscedastic, heteroscedastic };

constexpr std::string_view to_string(Verdict v) {
  return v == Verdict::homoscedastic ? "homoscedastic" : "heteroscedastic";
}

struct HeteroskedasticityResult {
  double chi_sq = 0.0;
  std::size_t df = 0;
  double p_value = 1.0;
  Verdict verdict = Verdict::homoscedastic;
  std::vector<double> auxiliary_r_squared;  // one per cross-product, vech order
};

/// System White test without cross terms. Each of the k(k+1)/2 products
/// u_i u_j is regressed on a constant plus the levels and squares of the
/// (non-constant) regressors. The statistic is the multivariate LM form
///   T * (m - tr(Omega_1 Omega_0^{-1})),
/// Omega_0 the covariance of the demeaned products and Omega_1 that of the
/// auxiliary residuals; with one product it equals T R^2. df = 2q m.
inline HeteroskedasticityResult white_system_test(const Eigen::MatrixXd& residuals,
                                                  const Eigen::MatrixXd& regressors, double alpha = 0.05) {
  const Eigen::Index T = residuals.rows();
  const Eigen::Index k = residuals.cols();
  if (regressors.rows() != T) throw Error(ErrorCode::ShapeMismatch, "residual and regressor rows differ");

  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < regressors.cols(); ++j) {
    const double first = regressors(0, j);
    if (!(regressors.col(j).array() == first).all()) keep.push_back(j);
  }
  const auto q = static_cast<Eigen::Index>(keep.size());
  if (q == 0) throw Error(ErrorCode::ShapeMismatch, "no non-constant regressors for the auxiliary regressions");
  const Eigen::Index s = 1 + 2 * q;
  const Eigen::Index m = k * (k + 1) / 2;
  if (T <= s + 1) throw Error(ErrorCode::SeriesTooShort, "too few rows for the auxiliary regressions");

  Eigen::MatrixXd z(T, s);
  z.col(0).setOnes();
  for (Eigen::Index j = 0; j < q; ++j) {
    z.col(1 + j) = regressors.col(keep[static_cast<std::size_t>(j)]);
    z.col(1 + q + j) = regressors.col(keep[static_cast<std::size_t>(j)]).array().square().matrix();
  }

  Eigen::MatrixXd products(T, m);
  Eigen::Index c = 0;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) products.col(c++) = residuals.col(i).cwiseProduct(residuals.col(j));

  HeteroskedasticityResult out;
  Eigen::MatrixXd aux_resid(T, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const RegressionFit fit = ols_fit(z, products.col(j));
    aux_resid.col(j) = fit.residuals;
    out.auxiliary_r_squared.push_back(fit.r_squared);
  }
  const Eigen::MatrixXd centered = products.rowwise() - products.colwise().mean();
  const Eigen::MatrixXd omega0 = centered.transpose() * centered / static_cast<double>(T);
  const Eigen::MatrixXd omega1 = aux_resid.transpose() * aux_resid / static_cast<double>(T);
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(omega0);
  const double scale = omega0.diagonal().maxCoeff();
  if (!(scale > 0.0) || ldlt.info() != Eigen::Success || !(ldlt.vectorD().minCoeff() > 1e-12 * scale))
    throw Error(ErrorCode::RankDeficient, "residual cross-products are degenerate");
  const double tr = ldlt.solve(omega1).trace();
  out.chi_sq = static_cast<double>(T) * (static_cast<double>(m) - tr);
  out.df = static_cast<std::size_t>(2 * q * m);
  out.p_value = chi_square_sf(out.chi_sq, static_cast<double>(out.df));
  out.verdict = out.p_value <= alpha ? Verdict::heteroscedastic : Verdict::homoscedastic;
  return out;
}

struct MomentTest {
  double value = 0.0;  // skewness, kurtosis, or JB statistic
  double chi_sq = 0.0;
  std::size_t df = 0;
  double p_value = 1.0;
};

struct NormalityComponent {
  MomentTest skewness;
  MomentTest kurtosis;
  MomentTest jarque_bera;  // value == chi_sq
};

struct NormalityResult {
  std::vector<NormalityComponent> components;
  MomentTest joint_skewness;
  MomentTest joint_kurtosis;
  MomentTest joint_jarque_bera;
  Eigen::MatrixXd orthogonalized;  // T x k
};

enum class Orthogonalization { cholesky };

/// Standardizes residuals by the inverse Cholesky factor of their
/// covariance (component order = column order) and tests each component.
inline NormalityResult multivariate_jb(const Eigen::MatrixXd& residuals,
                                       Orthogonalization = Orthogonalization::cholesky) {
  const Eigen::Index T = residuals.rows();
  const Eigen::Index k = residuals.cols();
  if (k < 1) throw Error(ErrorCode::ShapeMismatch, "no residual columns");
  if (T < 8) throw Error(ErrorCode::SeriesTooShort, "normality test needs at least 8 observations");
  const Eigen::MatrixXd centered = residuals.rowwise() - residuals.colwise().mean();
  const Eigen::MatrixXd sigma = residual_covariance(centered);
  const Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::SingularCovariance, "residual covariance is singular");
  const Eigen::MatrixXd l = llt.matrixL();
  if (!(l.diagonal().minCoeff() > 1e-12 * std::sqrt(sigma.diagonal().maxCoeff())))
    throw Error(ErrorCode::SingularCovariance, "residual covariance is singular");

  NormalityResult out;
  // w_t = L^{-1} u_t, rows of W are w_t'
  out.orthogonalized = l.triangularView<Eigen::Lower>().solve(centered.transpose()).transpose();
  const double n = static_cast<double>(T);
  for (Eigen::Index j = 0; j < k; ++j) {
    const Eigen::ArrayXd w = out.orthogonalized.col(j).array();
    NormalityComponent comp;
    comp.skewness.value = w.cube().mean();
    comp.kurtosis.value = w.square().square().mean();
    comp.skewness.chi_sq = n * comp.skewness.value * comp.skewness.value / 6.0;
    comp.kurtosis.chi_sq = n * (comp.kurtosis.value - 3.0) * (comp.kurtosis.value - 3.0) / 24.0;
    comp.jarque_bera.chi_sq = comp.skewness.chi_sq + comp.kurtosis.chi_sq;
    comp.jarque_bera.value = comp.jarque_bera.chi_sq;
    comp.skewness.df = comp.kurtosis.df = 1;
    comp.jarque_bera.df = 2;
    for (MomentTest* t : {&comp.skewness, &comp.kurtosis, &comp.jarque_bera})
      t->p_value = chi_square_sf(t->chi_sq, static_cast<double>(t->df));
    out.joint_skewness.chi_sq += comp.skewness.chi_sq;
    out.joint_kurtosis.chi_sq += comp.kurtosis.chi_sq;
    out.joint_jarque_bera.chi_sq += comp.jarque_bera.chi_sq;
    out.components.push_back(comp);
  }
  const auto ku = static_cast<std::size_t>(k);
  out.joint_skewness.df = ku;
  out.joint_kurtosis.df = ku;
  out.joint_jarque_bera.df = 2 * ku;
  for (MomentTest* t : {&out.joint_skewness, &out.joint_kurtosis, &out.joint_jarque_bera}) {
    t->value = t->chi_sq;
    t->p_value = chi_square_sf(t->chi_sq, static_cast<double>(t->df));
  }
  return out;
}

}  // namespace cointkit
