#pragma once

// Thin wrappers over Boost.Math for the reference distributions used by the
// tests in this library.

#include <cmath>
#include <limits>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace cointkit {

/// Upper tail P(X > x) for X ~ chi-square(df); regularized upper incomplete gamma.
inline double chi_square_sf(double x, double df) {
  if (!(x > 0.0)) return 1.0;
  if (std::isinf(x)) return 0.0;
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared(df), x));
}

inline double normal_cdf(double x) {
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  return boost::math::cdf(boost::math::normal(), x);
}

/// Two-sided critical value |t| > c at level alpha.
inline double student_t_critical(double alpha, double df) {
  return boost::math::quantile(boost::math::complement(boost::math::students_t(df), alpha / 2.0));
}

inline double student_t_two_sided_p(double t, double df) {
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  return 2.0 * boost::math::cdf(boost::math::complement(boost::math::students_t(df), std::fabs(t)));
}

}  // namespace cointkit
