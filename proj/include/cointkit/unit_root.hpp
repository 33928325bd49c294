#pragma once

// Augmented Dickey-Fuller test with MacKinnon p-values, and the level /
// first-difference classification into I(0) / I(1).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "cointkit/distributions.hpp"
#include "cointkit/errors.hpp"
#include "cointkit/linreg.hpp"
#include "cointkit/series.hpp"

namespace cointkit {

enum class Deterministic { none = 0, constant = 1, constant_and_trend = 2 };

constexpr std::string_view to_string(Deterministic d) {
  switch (d) {
    case Deterministic::none: return "none";
    case Deterministic::constant: return "constant";
    case Deterministic::constant_and_trend: return "constant_and_trend";
  }
  return "?";
}

inline Deterministic parse_deterministic(std::string_view s) {
  if (s == "none" || s == "n" || s == "nc") return Deterministic::none;
  if (s == "constant" || s == "c") return Deterministic::constant;
  if (s == "constant_and_trend" || s == "ct") return Deterministic::constant_and_trend;
  throw Error(ErrorCode::InvalidConfig, "unknown ADF deterministic case '" + std::string(s) + "'");
}

constexpr std::size_t deterministic_terms(Deterministic d) { return static_cast<std::size_t>(d); }

namespace detail {

// MacKinnon (1994) response-surface approximation of the asymptotic
// Dickey-Fuller tau distribution, one stochastic regressor. p = Phi(poly(tau))
// with the small-p quadratic below tau_star and the large-p cubic above it.
// Coefficients are listed with their published scaling already applied.
struct TauSurface {
  double tau_min;
  double tau_star;
  double tau_max;
  std::array<double, 3> small_p;
  std::array<double, 4> large_p;
};

inline constexpr std::array<TauSurface, 3> kTauSurfaces = {{
    {-19.04, -1.04, std::numeric_limits<double>::infinity(),
     {0.6344, 1.2378, 3.2496e-2},
     {0.4797, 9.3557e-1, -0.6999e-1, 3.3066e-2}},
    {-18.83, -1.61, 2.74,
     {2.1659, 1.4412, 3.8269e-2},
     {1.7339, 9.3202e-1, -1.2745e-1, -1.0368e-2}},
    {-16.18, -2.89, 0.70,
     {3.2512, 1.6047, 4.9588e-2},
     {2.5261, 6.1654e-1, -3.7956e-1, -6.0285e-2}},
}};

// MacKinnon (2010) finite-sample critical values, one stochastic regressor:
// cv(T) = tau_inf + b1/T + b2/T^2 + b3/T^3 at the 1%, 5% and 10% levels.
inline constexpr std::array<std::array<std::array<double, 4>, 3>, 3> kTauCritical = {{
    {{{-2.56574, -2.2358, -3.627, 0.0},
      {-1.94100, -0.2686, -3.365, 31.223},
      {-1.61682, 0.2656, -2.714, 25.364}}},
    {{{-3.43035, -6.5393, -16.786, -79.433},
      {-2.86154, -2.8903, -4.234, -40.040},
      {-2.56677, -1.5384, -2.809, 0.0}}},
    {{{-3.95877, -9.0531, -28.428, -134.155},
      {-3.41049, -4.3904, -9.036, -45.374},
      {-3.12705, -2.5856, -3.925, -22.380}}},
}};

inline double asymptotic_tau_pvalue(double tau, Deterministic det) {
  const TauSurface& s = kTauSurfaces[static_cast<std::size_t>(det)];
  if (tau > s.tau_max) return 1.0;
  if (tau < s.tau_min) return 0.0;
  double z = 0.0;
  if (tau <= s.tau_star) {
    z = s.small_p[0] + tau * (s.small_p[1] + tau * s.small_p[2]);
  } else {
    z = s.large_p[0] + tau * (s.large_p[1] + tau * (s.large_p[2] + tau * s.large_p[3]));
  }
  return std::clamp(normal_cdf(z), 0.0, 1.0);
}

}  // namespace detail

/// Finite-sample critical values at the 1%, 5% and 10% levels. n_effective of
/// zero selects the asymptotic values.
inline std::array<double, 3> adf_critical_values(Deterministic det, std::size_t n_effective) {
  std::array<double, 3> out{};
  const auto& rows = detail::kTauCritical[static_cast<std::size_t>(det)];
  const double inv = n_effective == 0 ? 0.0 : 1.0 / static_cast<double>(n_effective);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = rows[i];
    out[i] = c[0] + inv * (c[1] + inv * (c[2] + inv * c[3]));
  }
  return out;
}

/// P-value of an ADF tau statistic. The asymptotic response surface is
/// evaluated at tau rescaled by cv5(inf) / cv5(n_effective), which makes the
/// finite-sample 5% critical value map to p = 0.05. n_effective = 0 gives the
/// purely asymptotic p-value.
inline double mackinnon_pvalue(double statistic, Deterministic det, std::size_t n_effective) {
  if (std::isnan(statistic)) return std::numeric_limits<double>::quiet_NaN();
  double tau = statistic;
  if (n_effective > 0) {
    const double asym = adf_critical_values(det, 0)[1];
    const double finite = adf_critical_values(det, n_effective)[1];
    tau *= asym / finite;
  }
  return detail::asymptotic_tau_pvalue(tau, det);
}

struct AdfResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t lags_used = 0;
  Deterministic deterministic = Deterministic::constant;
  std::size_t n_effective = 0;
  std::array<double, 3> critical_values{};  // 1%, 5%, 10%
};

namespace detail {

struct AdfRegression {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
};

// Rows t = first_t .. n-1 of  dy_t = [y_{t-1}, 1, t, dy_{t-1..t-lags}] b + u.
inline AdfRegression adf_regression(const std::vector<double>& v, Deterministic det,
                                    std::size_t lags, std::size_t first_t) {
  const std::size_t n = v.size();
  const auto rows = static_cast<Eigen::Index>(n - first_t);
  const std::size_t ndet = deterministic_terms(det);
  const auto cols = static_cast<Eigen::Index>(1 + ndet + lags);
  AdfRegression r{Eigen::MatrixXd(rows, cols), Eigen::VectorXd(rows)};
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::size_t t = first_t + static_cast<std::size_t>(i);
    r.y(i) = v[t] - v[t - 1];
    Eigen::Index c = 0;
    r.X(i, c++) = v[t - 1];
    if (ndet >= 1) r.X(i, c++) = 1.0;
    if (ndet >= 2) r.X(i, c++) = static_cast<double>(t);
    for (std::size_t j = 1; j <= lags; ++j) r.X(i, c++) = v[t - j] - v[t - j - 1];
  }
  return r;
}

inline bool adf_feasible(std::size_t n, Deterministic det, std::size_t lags) {
  // observations n - 1 - lags must exceed the 1 + ndet + lags regressors
  return n >= lags + 2 && n - 1 - lags > 1 + deterministic_terms(det) + lags;
}

inline void require_variation(const Series& s) {
  const auto& v = s.values();
  if (v.size() < 3) throw Error(ErrorCode::SeriesTooShort, "'" + s.name() + "' is too short for ADF");
  const double d0 = v[1] - v[0];
  bool varies = false;
  for (std::size_t i = 2; i < v.size() && !varies; ++i) varies = (v[i] - v[i - 1]) != d0;
  if (!varies) throw Error(ErrorCode::ZeroVariance, "'" + s.name() + "' has constant differences");
}

}  // namespace detail

/// Default maximum lag floor(12 (T/100)^{1/4}).
inline std::size_t default_max_lags(std::size_t T) {
  return static_cast<std::size_t>(std::floor(12.0 * std::pow(static_cast<double>(T) / 100.0, 0.25)));
}

/// Lag in 0..max_lags minimizing the Schwarz criterion of the ADF regression,
/// all candidates estimated on the sample implied by max_lags.
inline std::size_t auto_lag(const Series& s, Deterministic det, std::size_t max_lags) {
  const auto& v = s.values();
  if (!detail::adf_feasible(v.size(), det, max_lags))
    throw Error(ErrorCode::SeriesTooShort,
                "'" + s.name() + "' is too short for max_lags=" + std::to_string(max_lags));
  if (max_lags == 0) return 0;
  std::size_t best = 0;
  double best_sc = std::numeric_limits<double>::infinity();
  for (std::size_t lag = 0; lag <= max_lags; ++lag) {
    const auto reg = detail::adf_regression(v, det, lag, max_lags + 1);
    const RegressionFit fit = ols_fit(reg.X, reg.y);
    const double n = static_cast<double>(fit.n_obs);
    const double sc = std::log(fit.ssr / n) + static_cast<double>(fit.n_regressors) * std::log(n) / n;
    if (sc < best_sc) {
      best_sc = sc;
      best = lag;
    }
  }
  return best;
}

/// ADF t-test on the lagged level. `lags` empty selects the order by
/// auto_lag with `max_lags` (default rule when not given), capped to what
/// the sample supports.
inline AdfResult adf_test(const Series& s, Deterministic det, std::optional<std::size_t> lags = {},
                          std::optional<std::size_t> max_lags = {}) {
  const auto& v = s.values();
  detail::require_variation(s);
  std::size_t chosen = 0;
  if (lags) {
    chosen = *lags;
    if (!detail::adf_feasible(v.size(), det, chosen))
      throw Error(ErrorCode::SeriesTooShort,
                  "'" + s.name() + "' is too short for " + std::to_string(chosen) + " ADF lags");
  } else {
    std::size_t cap = max_lags.value_or(default_max_lags(v.size()));
    while (cap > 0 && !detail::adf_feasible(v.size(), det, cap)) --cap;
    if (!detail::adf_feasible(v.size(), det, cap))
      throw Error(ErrorCode::SeriesTooShort, "'" + s.name() + "' is too short for ADF");
    chosen = auto_lag(s, det, cap);
  }
  const auto reg = detail::adf_regression(v, det, chosen, chosen + 1);
  const RegressionFit fit = ols_fit(reg.X, reg.y);
  AdfResult out;
  out.statistic = fit.t_statistics(0);
  out.lags_used = chosen;
  out.deterministic = det;
  out.n_effective = static_cast<std::size_t>(fit.n_obs);
  out.p_value = mackinnon_pvalue(out.statistic, det, out.n_effective);
  out.critical_values = adf_critical_values(det, out.n_effective);
  return out;
}

enum class IntegrationOrder { I0, I1, inconclusive };

constexpr std::string_view to_string(IntegrationOrder o) {
  switch (o) {
    case IntegrationOrder::I0: return "I(0)";
    case IntegrationOrder::I1: return "I(1)";
    case IntegrationOrder::inconclusive: return "inconclusive";
  }
  return "?";
}

struct IntegrationDecision {
  std::string variable;
  AdfResult level;
  AdfResult first_difference;
  IntegrationOrder order = IntegrationOrder::inconclusive;
};

struct ClassifyOptions {
  Deterministic level_case = Deterministic::constant_and_trend;
  Deterministic difference_case = Deterministic::constant;
  std::optional<std::size_t> lags;
  std::optional<std::size_t> max_lags;
};

inline IntegrationDecision classify_integration(const Series& s, double alpha = 0.05,
                                                const ClassifyOptions& opt = {}) {
  IntegrationDecision out;
  out.variable = s.name();
  out.level = adf_test(s, opt.level_case, opt.lags, opt.max_lags);
  out.first_difference = adf_test(difference(s, 1), opt.difference_case, opt.lags, opt.max_lags);
  if (out.level.p_value <= alpha) {
    out.order = IntegrationOrder::I0;
  } else if (out.first_difference.p_value <= alpha) {
    out.order = IntegrationOrder::I1;
  } else {
    out.order = IntegrationOrder::inconclusive;
  }
  return out;
}

}  // namespace cointkit
