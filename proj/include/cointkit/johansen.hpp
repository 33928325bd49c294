#pragma once

// Johansen reduced-rank regression: eigenvalues, trace and maximum-eigenvalue
// tests with p-values from the embedded asymptotic tables, sequential rank
// choice, and the normalized long-run relation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cointkit/errors.hpp"
#include "cointkit/johansen_tables.hpp"
#include "cointkit/series.hpp"

namespace cointkit {

/// Placement of deterministic terms, numbered as in Johansen (1995).
enum class JohansenCase {
  none = 1,                   // no deterministic terms
  restricted_constant = 2,    // constant inside the cointegrating relation
  unrestricted_constant = 3,  // constant in the short-run dynamics
  restricted_trend = 4,       // unrestricted constant, trend inside the relation
  unrestricted_trend = 5,     // unrestricted constant and trend
};

constexpr std::string_view to_string(JohansenCase c) {
  switch (c) {
    case JohansenCase::none: return "none";
    case JohansenCase::restricted_constant: return "restricted_constant";
    case JohansenCase::unrestricted_constant: return "unrestricted_constant";
    case JohansenCase::restricted_trend: return "restricted_trend";
    case JohansenCase::unrestricted_trend: return "unrestricted_trend";
  }
  return "?";
}

inline JohansenCase parse_johansen_case(std::string_view s) {
  if (s == "none" || s == "1") return JohansenCase::none;
  if (s == "restricted_constant" || s == "2") return JohansenCase::restricted_constant;
  if (s == "unrestricted_constant" || s == "3") return JohansenCase::unrestricted_constant;
  if (s == "restricted_trend" || s == "4") return JohansenCase::restricted_trend;
  if (s == "unrestricted_trend" || s == "5") return JohansenCase::unrestricted_trend;
  throw Error(ErrorCode::InvalidConfig, "unknown Johansen case '" + std::string(s) + "'");
}

/// Number of deterministic rows appended to the lagged levels (0 or 1).
constexpr std::size_t restricted_terms(JohansenCase c) {
  return (c == JohansenCase::restricted_constant || c == JohansenCase::restricted_trend) ? 1 : 0;
}

/// Unrestricted deterministic regressors in the short-run block.
constexpr std::size_t unrestricted_terms(JohansenCase c) {
  switch (c) {
    case JohansenCase::unrestricted_constant:
    case JohansenCase::restricted_trend: return 1;
    case JohansenCase::unrestricted_trend: return 2;
    default: return 0;
  }
}

constexpr std::string_view restricted_term_name(JohansenCase c) {
  return c == JohansenCase::restricted_trend ? "trend" : "const";
}

enum class JohansenTest { trace = 0, max_eigen = 1 };

struct RankTestRow {
  double statistic = 0.0;
  double p_value = 1.0;
};

struct JohansenResult {
  Eigen::VectorXd eigenvalues;   // descending, each in [0, 1)
  Eigen::MatrixXd beta;          // (k + restricted) x k, beta' S11 beta = I
  Eigen::MatrixXd alpha;         // k x k, S01 beta
  Eigen::MatrixXd s00, s01, s11;
  std::vector<RankTestRow> trace_rows;      // indexed by hypothesized rank r
  std::vector<RankTestRow> max_eigen_rows;
  std::size_t selected_rank = 0;
  JohansenCase det_case = JohansenCase::unrestricted_constant;
  std::size_t p = 1;
  std::size_t T_effective = 0;
  std::vector<std::string> names;  // variables, then the restricted term if any

  std::size_t k() const { return static_cast<std::size_t>(eigenvalues.size()); }
};

// ---- statistics -----------------------------------------------------------

inline double trace_statistic(std::span<const double> eigenvalues, double T, std::size_t r) {
  if (r >= eigenvalues.size())
    throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(r) + " out of range");
  double s = 0.0;
  for (std::size_t i = r; i < eigenvalues.size(); ++i) s -= std::log1p(-eigenvalues[i]);
  return T * s;
}

inline double max_eigen_statistic(std::span<const double> eigenvalues, double T, std::size_t r) {
  if (r >= eigenvalues.size())
    throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(r) + " out of range");
  return -T * std::log1p(-eigenvalues[r]);
}

inline double trace_statistic(const JohansenResult& res, std::size_t r) {
  return trace_statistic(std::span<const double>(res.eigenvalues.data(), res.k()),
                         static_cast<double>(res.T_effective), r);
}

inline double max_eigen_statistic(const JohansenResult& res, std::size_t r) {
  return max_eigen_statistic(std::span<const double>(res.eigenvalues.data(), res.k()),
                             static_cast<double>(res.T_effective), r);
}

// ---- p-values -------------------------------------------------------------

namespace detail {

inline double logit(double p) { return std::log(p / (1.0 - p)); }
inline double inv_logit(double z) { return 1.0 / (1.0 + std::exp(-z)); }

inline const double* johansen_quantiles(std::size_t dim, JohansenCase c, JohansenTest which) {
  return kJohansenQuantiles[static_cast<int>(c) - 1][static_cast<int>(which)][dim - 1];
}

}  // namespace detail

/// Quantile of the tabulated null distribution at upper-tail probability
/// `tail` (must be one of the tabulated levels, e.g. 0.05).
inline double johansen_critical_value(std::size_t dim, JohansenCase c, JohansenTest which, double tail) {
  if (dim < 1 || dim > static_cast<std::size_t>(detail::kJohansenMaxDim))
    throw Error(ErrorCode::DimensionUnsupported, "k - r = " + std::to_string(dim) + " not tabulated");
  const auto& probs = detail::kJohansenTailProbs;
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (std::fabs(probs[i] - tail) < 1e-12) return detail::johansen_quantiles(dim, c, which)[i];
  throw Error(ErrorCode::InvalidConfig, "tail probability not tabulated");
}

/// Asymptotic p-value of a trace or max-eigen statistic with `dim` = k - r
/// non-cointegrated directions. Interpolates linearly in logit(p) between
/// tabulated quantiles; beyond the last quantile the logit is extrapolated
/// from the last two points, below the first it runs linearly to p = 1 at 0.
inline double johansen_pvalue(double statistic, std::size_t dim, JohansenCase c, JohansenTest which) {
  if (dim < 1 || dim > static_cast<std::size_t>(detail::kJohansenMaxDim))
    throw Error(ErrorCode::DimensionUnsupported, "k - r = " + std::to_string(dim) + " not tabulated");
  if (std::isnan(statistic)) return statistic;
  const auto& probs = detail::kJohansenTailProbs;
  const double* q = detail::johansen_quantiles(dim, c, which);
  const std::size_t n = probs.size();
  if (statistic <= 0.0) return 1.0;
  if (statistic < q[0]) return 1.0 - (1.0 - probs[0]) * statistic / q[0];
  if (statistic >= q[n - 1]) {
    const double slope = (detail::logit(probs[n - 1]) - detail::logit(probs[n - 2])) / (q[n - 1] - q[n - 2]);
    return detail::inv_logit(detail::logit(probs[n - 1]) + slope * (statistic - q[n - 1]));
  }
  std::size_t i = 1;
  while (q[i] <= statistic) ++i;
  const double w = (statistic - q[i - 1]) / (q[i] - q[i - 1]);
  return detail::inv_logit((1.0 - w) * detail::logit(probs[i - 1]) + w * detail::logit(probs[i]));
}

// ---- estimation -----------------------------------------------------------

namespace detail {

// Residuals of Z on W (columns of W may be empty).
inline Eigen::MatrixXd partial_out(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& W) {
  if (W.cols() == 0) return Z;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(W);
  qr.setThreshold(1e-10);
  if (qr.rank() < W.cols())
    throw Error(ErrorCode::SingularMomentMatrix, "short-run regressors are collinear");
  return Z - W * qr.solve(Z);
}

inline void require_nonsingular(const Eigen::MatrixXd& s, const char* what) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
  const double hi = es.eigenvalues().maxCoeff();
  const double lo = es.eigenvalues().minCoeff();
  if (!(hi > 0.0) || !(lo > 1e-12 * hi))
    throw Error(ErrorCode::SingularMomentMatrix, std::string(what) + " is singular");
}

}  // namespace detail

/// Solves |lambda S11 - S10 S00^{-1} S01| = 0 for a VAR(p) written in
/// error-correction form. T in all statistics is T - p.
inline JohansenResult reduced_rank_regression(const Dataset& d, std::size_t p,
                                              JohansenCase det_case = JohansenCase::unrestricted_constant) {
  const std::size_t k = d.k();
  const std::size_t T = d.T();
  const std::size_t n_det = restricted_terms(det_case) + unrestricted_terms(det_case);
  if (p == 0) throw Error(ErrorCode::InvalidConfig, "lag order must be at least 1");
  if (T < p || T - p < k + n_det + k * (p - 1) + 2)
    throw Error(ErrorCode::SeriesTooShort,
                "T=" + std::to_string(T) + " is too short for Johansen with k=" + std::to_string(k) +
                    ", p=" + std::to_string(p));
  const LagDesign design = lag_design(d, p);
  const auto rows = design.diff.rows();
  const auto ki = static_cast<Eigen::Index>(k);

  const Eigen::Index k1 = ki + static_cast<Eigen::Index>(restricted_terms(det_case));
  Eigen::MatrixXd z1(rows, k1);
  z1.leftCols(ki) = design.lagged_level;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double index_of_lag = static_cast<double>(design.first_index) + static_cast<double>(i) - 1.0;
    if (det_case == JohansenCase::restricted_constant) z1(i, ki) = 1.0;
    if (det_case == JohansenCase::restricted_trend) z1(i, ki) = index_of_lag;
  }
  const Eigen::Index n_unres = static_cast<Eigen::Index>(unrestricted_terms(det_case));
  Eigen::MatrixXd z2(rows, design.lagged_diffs.cols() + n_unres);
  z2.leftCols(design.lagged_diffs.cols()) = design.lagged_diffs;
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (n_unres >= 1) z2(i, design.lagged_diffs.cols()) = 1.0;
    if (n_unres >= 2)
      z2(i, design.lagged_diffs.cols() + 1) = static_cast<double>(design.first_index) + static_cast<double>(i);
  }

  const Eigen::MatrixXd r0 = detail::partial_out(design.diff, z2);
  const Eigen::MatrixXd r1 = detail::partial_out(z1, z2);
  const double Te = static_cast<double>(rows);

  JohansenResult res;
  res.det_case = det_case;
  res.p = p;
  res.T_effective = static_cast<std::size_t>(rows);
  res.names = d.names();
  if (restricted_terms(det_case) > 0) res.names.emplace_back(restricted_term_name(det_case));
  res.s00 = r0.transpose() * r0 / Te;
  res.s11 = r1.transpose() * r1 / Te;
  res.s01 = r0.transpose() * r1 / Te;
  detail::require_nonsingular(res.s00, "S00");
  detail::require_nonsingular(res.s11, "S11");

  const Eigen::LLT<Eigen::MatrixXd> chol(res.s11);
  const Eigen::MatrixXd l = chol.matrixL();
  const Eigen::MatrixXd s00_inv_s01 = res.s00.ldlt().solve(res.s01);
  const Eigen::MatrixXd m = res.s01.transpose() * s00_inv_s01;  // S10 S00^-1 S01
  // C = L^{-1} M L^{-T}
  const Eigen::MatrixXd left = l.triangularView<Eigen::Lower>().solve(m);
  Eigen::MatrixXd c = l.triangularView<Eigen::Lower>().solve(left.transpose()).transpose();
  c = (c + c.transpose()).eval() / 2.0;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(k1));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return es.eigenvalues()(a) > es.eigenvalues()(b);
  });

  res.eigenvalues.resize(ki);
  Eigen::MatrixXd v(k1, ki);
  for (Eigen::Index j = 0; j < ki; ++j) {
    double lambda = es.eigenvalues()(order[static_cast<std::size_t>(j)]);
    if (lambda < 0.0) lambda = 0.0;
    if (lambda >= 1.0)
      throw Error(ErrorCode::SingularMomentMatrix, "eigenvalue at or above one (perfect fit)");
    res.eigenvalues(j) = lambda;
    v.col(j) = es.eigenvectors().col(order[static_cast<std::size_t>(j)]);
  }
  res.beta = l.transpose().triangularView<Eigen::Upper>().solve(v);
  for (Eigen::Index j = 0; j < ki; ++j) {
    Eigen::Index pivot = 0;
    res.beta.col(j).head(ki).cwiseAbs().maxCoeff(&pivot);
    if (res.beta(pivot, j) < 0.0) res.beta.col(j) *= -1.0;
  }
  res.alpha = res.s01 * res.beta;
  return res;
}

/// Smallest r whose p-value exceeds alpha, testing r = 0, 1, ... in turn.
inline std::size_t sequential_rank(std::span<const double> p_values, double alpha) {
  for (std::size_t r = 0; r < p_values.size(); ++r)
    if (p_values[r] > alpha) return r;
  return p_values.size();
}

inline void fill_rank_tests(JohansenResult& res, double alpha) {
  const std::size_t k = res.k();
  res.trace_rows.assign(k, {});
  res.max_eigen_rows.assign(k, {});
  std::vector<double> trace_p(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t dim = k - r;
    res.trace_rows[r].statistic = trace_statistic(res, r);
    res.trace_rows[r].p_value = johansen_pvalue(res.trace_rows[r].statistic, dim, res.det_case, JohansenTest::trace);
    res.max_eigen_rows[r].statistic = max_eigen_statistic(res, r);
    res.max_eigen_rows[r].p_value =
        johansen_pvalue(res.max_eigen_rows[r].statistic, dim, res.det_case, JohansenTest::max_eigen);
    trace_p[r] = res.trace_rows[r].p_value;
  }
  res.selected_rank = sequential_rank(trace_p, alpha);
}

/// Reduced-rank regression plus both rank tests and the trace-based rank.
inline JohansenResult johansen_test(const Dataset& d, std::size_t p,
                                    JohansenCase det_case = JohansenCase::unrestricted_constant,
                                    double alpha = 0.05) {
  JohansenResult res = reduced_rank_regression(d, p, det_case);
  fill_rank_tests(res, alpha);
  return res;
}

struct RankDecision {
  std::size_t trace_rank = 0;
  std::size_t max_eigen_rank = 0;
  std::string table;
};

inline RankDecision rank_decision(const JohansenResult& res, double alpha = 0.05) {
  const std::size_t k = res.trace_rows.size();
  std::vector<double> trace_p(k), max_p(k);
  for (std::size_t r = 0; r < k; ++r) {
    trace_p[r] = res.trace_rows[r].p_value;
    max_p[r] = res.max_eigen_rows[r].p_value;
  }
  RankDecision out;
  out.trace_rank = sequential_rank(trace_p, alpha);
  out.max_eigen_rank = sequential_rank(max_p, alpha);

  std::string t;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-12s %12s %14s %10s %14s %10s\n", "Rank", "Eigenvalue",
                "Trace stat", "p-value", "Max-Eigen", "p-value");
  t += buf;
  for (std::size_t r = 0; r < k; ++r) {
    std::string label = r == 0 ? "None" : "At most " + std::to_string(r);
    if (res.trace_rows[r].p_value <= alpha) label += "*";
    std::snprintf(buf, sizeof buf, "%-12s %12.6f %14.6f %10.6f %14.6f %10.6f\n", label.c_str(),
                  res.eigenvalues(static_cast<Eigen::Index>(r)), res.trace_rows[r].statistic,
                  res.trace_rows[r].p_value, res.max_eigen_rows[r].statistic, res.max_eigen_rows[r].p_value);
    t += buf;
  }
  std::snprintf(buf, sizeof buf, "Trace test indicates %zu cointegrating equation(s) at the %.2f level\n",
                out.trace_rank, alpha);
  t += buf;
  std::snprintf(buf, sizeof buf, "Max-eigenvalue test indicates %zu cointegrating equation(s) at the %.2f level\n",
                out.max_eigen_rank, alpha);
  t += buf;
  out.table = std::move(t);
  return out;
}

// ---- long-run relation ----------------------------------------------------

struct LongRunEquation {
  std::string normalized_on;
  std::vector<std::string> regressors;
  std::vector<double> coefficients;  // right-hand side, signs already flipped

  /// "y = c1 * x1 + c2 * x2 - c3 * x3", six decimals.
  std::string render() const {
    std::string out = normalized_on + " =";
    char buf[64];
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      const double c = coefficients[i];
      if (i == 0) {
        std::snprintf(buf, sizeof buf, " %.6f * ", c);
      } else {
        std::snprintf(buf, sizeof buf, " %c %.6f * ", c < 0.0 ? '-' : '+', std::fabs(c));
      }
      out += buf;
      out += regressors[i];
    }
    return out;
  }
};

/// Normalizes one cointegrating column on `names[on]` and moves the other
/// terms to the right-hand side.
inline LongRunEquation normalize_long_run(const Eigen::VectorXd& beta_column,
                                          const std::vector<std::string>& names, std::size_t on) {
  if (static_cast<std::size_t>(beta_column.size()) != names.size() || on >= names.size())
    throw Error(ErrorCode::ShapeMismatch, "beta column and names disagree");
  const double pivot = beta_column(static_cast<Eigen::Index>(on));
  if (!(std::fabs(pivot) > 1e-10 * beta_column.norm()))
    throw Error(ErrorCode::ZeroNormalizationCoefficient,
                "coefficient on '" + names[on] + "' is zero");
  LongRunEquation eq;
  eq.normalized_on = names[on];
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i == on) continue;
    eq.regressors.push_back(names[i]);
    eq.coefficients.push_back(-beta_column(static_cast<Eigen::Index>(i)) / pivot);
  }
  return eq;
}

inline LongRunEquation normalize_long_run(const JohansenResult& res, std::size_t on, std::size_t column = 0) {
  if (column >= static_cast<std::size_t>(res.beta.cols()))
    throw Error(ErrorCode::RankOutOfRange, "no cointegrating column " + std::to_string(column));
  return normalize_long_run(Eigen::VectorXd(res.beta.col(static_cast<Eigen::Index>(column))), res.names, on);
}

}  // namespace cointkit
