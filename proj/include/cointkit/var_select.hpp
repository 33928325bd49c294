#pragma once

// Unrestricted VAR(p) in levels and lag-order selection by AIC / SC / HQ.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cointkit/errors.hpp"
#include "cointkit/linreg.hpp"
#include "cointkit/series.hpp"

namespace cointkit {

struct VarFit {
  std::size_t p = 0;
  std::vector<RegressionFit> equations;  // one per variable, regressors [1, y_{t-1}, ..., y_{t-p}]
  Eigen::MatrixXd residuals;             // T_eff x k
  Eigen::MatrixXd design;                // T_eff x (1 + k p)
  std::size_t T_effective = 0;
  std::size_t n_params = 0;              // total coefficients across equations
};

/// Regresses each variable on an intercept and p lags of all variables.
/// Rows start at index `first_index` (at least p), so several lag orders can
/// share one estimation sample.
inline VarFit var_fit(const Dataset& d, std::size_t p, std::size_t first_index) {
  const std::size_t T = d.T();
  const std::size_t k = d.k();
  if (p == 0) throw Error(ErrorCode::InvalidConfig, "VAR lag order must be at least 1");
  first_index = std::max(first_index, p);
  if (T <= first_index || T - first_index <= k * p + 1)
    throw Error(ErrorCode::SeriesTooShort, "T=" + std::to_string(T) + " is too short for VAR(" +
                                               std::to_string(p) + ") with k=" + std::to_string(k));
  const Eigen::MatrixXd y = d.matrix();
  const auto rows = static_cast<Eigen::Index>(T - first_index);
  const auto ki = static_cast<Eigen::Index>(k);
  VarFit out;
  out.p = p;
  out.T_effective = static_cast<std::size_t>(rows);
  out.design.resize(rows, 1 + ki * static_cast<Eigen::Index>(p));
  Eigen::MatrixXd response(rows, ki);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index t = static_cast<Eigen::Index>(first_index) + i;
    response.row(i) = y.row(t);
    out.design(i, 0) = 1.0;
    for (Eigen::Index j = 1; j <= static_cast<Eigen::Index>(p); ++j)
      out.design.block(i, 1 + (j - 1) * ki, 1, ki) = y.row(t - j);
  }
  out.residuals.resize(rows, ki);
  for (Eigen::Index e = 0; e < ki; ++e) {
    out.equations.push_back(ols_fit(out.design, response.col(e)));
    out.residuals.col(e) = out.equations.back().residuals;
  }
  out.n_params = k * static_cast<std::size_t>(out.design.cols());
  return out;
}

inline VarFit var_fit(const Dataset& d, std::size_t p) { return var_fit(d, p, p); }

struct InformationCriteria {
  double aic = 0.0;
  double sc = 0.0;
  double hq = 0.0;
};

/// Per-observation criteria: -2l/T plus a penalty of 2n, n ln T or 2n ln ln T over T.
inline InformationCriteria information_criteria(double loglik, double T_effective, double n_params) {
  const double base = -2.0 * loglik / T_effective;
  return {base + 2.0 * n_params / T_effective,
          base + n_params * std::log(T_effective) / T_effective,
          base + 2.0 * n_params * std::log(std::log(T_effective)) / T_effective};
}

enum class LagRule { majority, aic, sc, hq };

constexpr std::string_view to_string(LagRule r) {
  switch (r) {
    case LagRule::majority: return "majority";
    case LagRule::aic: return "aic";
    case LagRule::sc: return "sc";
    case LagRule::hq: return "hq";
  }
  return "?";
}

inline LagRule parse_lag_rule(std::string_view s) {
  if (s == "majority") return LagRule::majority;
  if (s == "aic") return LagRule::aic;
  if (s == "sc" || s == "bic") return LagRule::sc;
  if (s == "hq") return LagRule::hq;
  throw Error(ErrorCode::InvalidConfig, "unknown lag rule '" + std::string(s) + "'");
}

struct LagSelectionRow {
  std::size_t p = 0;
  double loglik = 0.0;
  InformationCriteria criteria;
};

struct LagSelectionTable {
  std::vector<LagSelectionRow> rows;
  std::size_t aic_lag = 0;
  std::size_t sc_lag = 0;
  std::size_t hq_lag = 0;
  std::size_t recommended = 0;
  LagRule rule = LagRule::majority;
  std::size_t T_effective = 0;
};

/// Most-voted lag among the three criteria; ties go to the smaller lag.
inline std::size_t majority_lag(std::size_t aic_lag, std::size_t sc_lag, std::size_t hq_lag) {
  std::map<std::size_t, int> votes;
  ++votes[aic_lag];
  ++votes[sc_lag];
  ++votes[hq_lag];
  std::size_t best = 0;
  int best_votes = 0;
  for (const auto& [lag, n] : votes) {  // ascending lag
    if (n > best_votes) {
      best = lag;
      best_votes = n;
    }
  }
  return best;
}

namespace detail {

template <typename Get>
std::size_t argmin_lag(const std::vector<LagSelectionRow>& rows, Get get) {
  std::size_t best = rows.front().p;
  double value = get(rows.front());
  for (const auto& r : rows) {
    if (get(r) < value) {
      value = get(r);
      best = r.p;
    }
  }
  return best;
}

}  // namespace detail

/// Finishes a table whose rows are already filled: stars and recommendation.
inline void rank_lag_rows(LagSelectionTable& table) {
  table.aic_lag = detail::argmin_lag(table.rows, [](const auto& r) { return r.criteria.aic; });
  table.sc_lag = detail::argmin_lag(table.rows, [](const auto& r) { return r.criteria.sc; });
  table.hq_lag = detail::argmin_lag(table.rows, [](const auto& r) { return r.criteria.hq; });
  switch (table.rule) {
    case LagRule::majority: table.recommended = majority_lag(table.aic_lag, table.sc_lag, table.hq_lag); break;
    case LagRule::aic: table.recommended = table.aic_lag; break;
    case LagRule::sc: table.recommended = table.sc_lag; break;
    case LagRule::hq: table.recommended = table.hq_lag; break;
  }
}

/// Fits VAR(1..p_max) on the common sample starting at index p_max.
inline LagSelectionTable select_lag(const Dataset& d, std::size_t p_max,
                                    LagRule rule = LagRule::majority) {
  if (p_max == 0) throw Error(ErrorCode::InvalidConfig, "p_max must be at least 1");
  LagSelectionTable table;
  table.rule = rule;
  for (std::size_t p = 1; p <= p_max; ++p) {
    const VarFit fit = var_fit(d, p, p_max);
    const double T = static_cast<double>(fit.T_effective);
    const double ll = gaussian_loglik(residual_covariance(fit.residuals), T);
    table.rows.push_back({p, ll, information_criteria(ll, T, static_cast<double>(fit.n_params))});
    table.T_effective = fit.T_effective;
  }
  rank_lag_rows(table);
  return table;
}

}  // namespace cointkit
