#pragma once

// Rank-restricted vector error-correction model estimated equation by
// equation with beta fixed at its Johansen estimate.

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cointkit/distributions.hpp"
#include "cointkit/errors.hpp"
#include "cointkit/johansen.hpp"
#include "cointkit/linreg.hpp"
#include "cointkit/series.hpp"

namespace cointkit {

/// How several error-correction regressors are formed.
///   distinct_relations: EC^(1)_{t-1} .. EC^(r)_{t-1}, one per cointegrating vector
///   time_lags:          EC^(1)_{t-1} .. EC^(1)_{t-r}, lags of the first vector
enum class EcReading { distinct_relations, time_lags };

constexpr std::string_view to_string(EcReading r) {
  return r == EcReading::distinct_relations ? "distinct_relations" : "time_lags";
}

inline EcReading parse_ec_reading(std::string_view s) {
  if (s == "distinct_relations") return EcReading::distinct_relations;
  if (s == "time_lags") return EcReading::time_lags;
  throw Error(ErrorCode::InvalidConfig, "unknown EC reading '" + std::string(s) + "'");
}

struct EcSeries {
  Eigen::MatrixXd values;  // T x r
  std::vector<int> years;
};

/// ec^(j)_t = beta_j' y_t, plus the restricted constant or trend term for
/// cases 2 and 4 (trend value = 0-based observation index).
inline EcSeries ec_series(const Dataset& d, const Eigen::MatrixXd& beta, JohansenCase det_case) {
  const auto k = static_cast<Eigen::Index>(d.k());
  const auto expected_rows = k + static_cast<Eigen::Index>(restricted_terms(det_case));
  if (beta.cols() < 1 || beta.rows() != expected_rows)
    throw Error(ErrorCode::ShapeMismatch, "beta must be " + std::to_string(expected_rows) +
                                              " x r with r >= 1");
  const Eigen::MatrixXd y = d.matrix();
  EcSeries out;
  out.values = y * beta.topRows(k);
  if (restricted_terms(det_case) > 0) {
    for (Eigen::Index t = 0; t < out.values.rows(); ++t) {
      const double term = det_case == JohansenCase::restricted_trend ? static_cast<double>(t) : 1.0;
      out.values.row(t) += term * beta.row(k);
    }
  }
  out.years = d.years();
  return out;
}

struct VecmEquation {
  std::string variable;
  RegressionFit fit;
  std::vector<double> p_values;
  std::vector<bool> significant;
};

struct VecmModel {
  std::size_t rank = 0;
  std::size_t p = 1;
  JohansenCase det_case = JohansenCase::unrestricted_constant;
  EcReading reading = EcReading::distinct_relations;
  double alpha = 0.05;
  double t_critical = 0.0;
  Eigen::MatrixXd beta;                     // (k + restricted) x rank
  std::vector<std::string> regressor_names;
  std::vector<std::size_t> ec_columns;      // positions of EC regressors
  Eigen::MatrixXd regressors;               // rows x regressor count
  Eigen::MatrixXd residuals;                // rows x k
  std::vector<int> years;
  std::vector<VecmEquation> equations;

  /// k x (number of EC regressors) matrix of loadings.
  Eigen::MatrixXd loadings() const {
    Eigen::MatrixXd a(static_cast<Eigen::Index>(equations.size()), static_cast<Eigen::Index>(ec_columns.size()));
    for (std::size_t e = 0; e < equations.size(); ++e)
      for (std::size_t j = 0; j < ec_columns.size(); ++j)
        a(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(j)) =
            equations[e].fit.coefficients(static_cast<Eigen::Index>(ec_columns[j]));
    return a;
  }

  /// Regressors without the intercept column, for residual diagnostics.
  Eigen::MatrixXd stochastic_regressors() const {
    std::vector<Eigen::Index> keep;
    for (std::size_t j = 0; j < regressor_names.size(); ++j)
      if (regressor_names[j] != "const") keep.push_back(static_cast<Eigen::Index>(j));
    Eigen::MatrixXd out(regressors.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = regressors.col(keep[j]);
    return out;
  }
};

/// Fits the VECM for a given beta (columns = cointegrating vectors; zero
/// columns gives a VAR in differences).
inline VecmModel vecm_fit_with_beta(const Dataset& d, std::size_t p, const Eigen::MatrixXd& beta,
                                    JohansenCase det_case, double alpha = 0.05,
                                    EcReading reading = EcReading::distinct_relations) {
  const LagDesign design = lag_design(d, p);
  const auto k = static_cast<Eigen::Index>(d.k());
  const std::size_t r = static_cast<std::size_t>(beta.cols());
  const auto names = d.names();

  VecmModel model;
  model.rank = r;
  model.p = p;
  model.det_case = det_case;
  model.reading = reading;
  model.alpha = alpha;
  model.beta = beta;

  Eigen::MatrixXd ec_full;
  if (r > 0) ec_full = ec_series(d, beta, det_case).values;

  const std::size_t ec_count = r;
  const std::size_t ec_lags = reading == EcReading::time_lags ? r : (r > 0 ? 1 : 0);
  // time_lags needs t - r >= 0, so rows before index r are dropped
  const std::size_t skip = ec_lags > p ? ec_lags - p : 0;
  const Eigen::Index rows = design.diff.rows() - static_cast<Eigen::Index>(skip);
  if (rows <= 0) throw Error(ErrorCode::SeriesTooShort, "no rows left for the VECM");

  const bool has_const = unrestricted_terms(det_case) >= 1;
  const bool has_trend = unrestricted_terms(det_case) >= 2;
  if (has_const) model.regressor_names.emplace_back("const");
  if (has_trend) model.regressor_names.emplace_back("trend");
  for (std::size_t j = 1; j < p; ++j)
    for (const auto& n : names) model.regressor_names.push_back("d_" + n + "(" + std::to_string(j) + ")");
  for (std::size_t j = 0; j < ec_count; ++j) {
    model.ec_columns.push_back(model.regressor_names.size());
    model.regressor_names.push_back(reading == EcReading::time_lags
                                        ? "EC(-" + std::to_string(j + 1) + ")"
                                        : "EC" + std::to_string(j + 1) + "(-1)");
  }

  const auto m = static_cast<Eigen::Index>(model.regressor_names.size());
  if (m == 0) throw Error(ErrorCode::ShapeMismatch, "VECM has no regressors");
  model.regressors.resize(rows, m);
  Eigen::MatrixXd response(rows, k);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index src = i + static_cast<Eigen::Index>(skip);
    const Eigen::Index t = static_cast<Eigen::Index>(design.first_index) + src;
    response.row(i) = design.diff.row(src);
    Eigen::Index c = 0;
    if (has_const) model.regressors(i, c++) = 1.0;
    if (has_trend) model.regressors(i, c++) = static_cast<double>(t);
    const Eigen::Index nl = design.lagged_diffs.cols();
    model.regressors.block(i, c, 1, nl) = design.lagged_diffs.row(src);
    c += nl;
    for (std::size_t j = 0; j < ec_count; ++j) {
      model.regressors(i, c++) = reading == EcReading::time_lags
                                     ? ec_full(t - 1 - static_cast<Eigen::Index>(j), 0)
                                     : ec_full(t - 1, static_cast<Eigen::Index>(j));
    }
    model.years.push_back(design.years[static_cast<std::size_t>(src)]);
  }

  const double dof = static_cast<double>(rows - m);
  if (!(dof > 0)) throw Error(ErrorCode::SeriesTooShort, "VECM has no residual degrees of freedom");
  model.t_critical = student_t_critical(alpha, dof);
  model.residuals.resize(rows, k);
  for (Eigen::Index e = 0; e < k; ++e) {
    VecmEquation eq;
    eq.variable = names[static_cast<std::size_t>(e)];
    eq.fit = ols_fit(model.regressors, response.col(e));
    for (Eigen::Index j = 0; j < m; ++j) {
      const double t = eq.fit.t_statistics(j);
      eq.p_values.push_back(student_t_two_sided_p(t, dof));
      eq.significant.push_back(std::fabs(t) > model.t_critical);
    }
    model.residuals.col(e) = eq.fit.residuals;
    model.equations.push_back(std::move(eq));
  }
  return model;
}

/// VECM of rank r with beta from the Johansen estimate at the same (p, case).
/// Each beta column is scaled to a unit coefficient on variable
/// `normalize_on` (left as is when that coefficient is zero), so loadings
/// read as adjustment per unit deviation from the normalized relation.
inline VecmModel vecm_fit(const Dataset& d, std::size_t p, std::size_t r,
                          JohansenCase det_case = JohansenCase::unrestricted_constant, double alpha = 0.05,
                          EcReading reading = EcReading::distinct_relations, std::size_t normalize_on = 0) {
  if (normalize_on >= d.k()) throw Error(ErrorCode::UnknownVariable, "normalization index out of range");
  if (r > d.k()) throw Error(ErrorCode::RankOutOfRange, "rank exceeds the number of variables");
  Eigen::MatrixXd beta;
  if (r == 0) {
    beta.resize(static_cast<Eigen::Index>(d.k() + restricted_terms(det_case)), 0);
  } else {
    const JohansenResult jo = reduced_rank_regression(d, p, det_case);
    beta = reading == EcReading::time_lags ? Eigen::MatrixXd(jo.beta.leftCols(1).replicate(1, static_cast<Eigen::Index>(r)))
                                           : Eigen::MatrixXd(jo.beta.leftCols(static_cast<Eigen::Index>(r)));
    const auto on = static_cast<Eigen::Index>(normalize_on);
    for (Eigen::Index j = 0; j < beta.cols(); ++j)
      if (std::fabs(beta(on, j)) > 1e-10 * beta.col(j).norm()) beta.col(j) /= beta(on, j);
  }
  return vecm_fit_with_beta(d, p, beta, det_case, alpha, reading);
}

struct DisequilibriumCorrection {
  std::string term;
  double loading = 0.0;
  double percent = 0.0;  // |loading| * 100
  bool significant = false;
};

/// Share of last period's disequilibrium removed per period, per EC term,
/// for equation `equation` (default: the first variable).
inline std::vector<DisequilibriumCorrection> disequilibrium_correction(const VecmModel& model,
                                                                       std::size_t equation = 0) {
  if (model.ec_columns.empty()) throw Error(ErrorCode::RankOutOfRange, "model has no error-correction terms");
  if (equation >= model.equations.size()) throw Error(ErrorCode::RankOutOfRange, "no such equation");
  const auto& eq = model.equations[equation];
  std::vector<DisequilibriumCorrection> out;
  for (std::size_t c : model.ec_columns) {
    const double loading = eq.fit.coefficients(static_cast<Eigen::Index>(c));
    out.push_back({model.regressor_names[c], loading, std::fabs(loading) * 100.0, eq.significant[c]});
  }
  return out;
}

}  // namespace cointkit
