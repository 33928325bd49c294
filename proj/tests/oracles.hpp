#pragma once

// Independent reference computations for the tests. Plain loops over
// std::vector, no Eigen, so they share no code path with the library.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // row-major

// Gaussian elimination with partial pivoting.
inline Vec solve(Mat a, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0) throw std::runtime_error("singular system");
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

inline Mat inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat inv(n, Vec(n));
  for (std::size_t c = 0; c < n; ++c) {
    Vec e(n, 0.0);
    e[c] = 1.0;
    const Vec col = solve(a, e);
    for (std::size_t r = 0; r < n; ++r) inv[r][c] = col[r];
  }
  return inv;
}

struct Ols {
  Vec beta;
  Vec se;
  double r_squared = 0.0;  // centered
  double ssr = 0.0;
  Vec residuals;
};

// (X'X)^{-1} X'y, SEs from SSR/(n-k) (X'X)^{-1}. X includes any intercept.
inline Ols normal_equations(const Mat& x, const Vec& y) {
  const std::size_t n = x.size(), k = x.front().size();
  Mat xtx(k, Vec(k, 0.0));
  Vec xty(k, 0.0);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t i = 0; i < k; ++i) {
      xty[i] += x[t][i] * y[t];
      for (std::size_t j = 0; j < k; ++j) xtx[i][j] += x[t][i] * x[t][j];
    }
  Ols out;
  out.beta = solve(xtx, xty);
  double ybar = 0.0;
  for (double v : y) ybar += v;
  ybar /= static_cast<double>(n);
  double sst = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    double fit = 0.0;
    for (std::size_t i = 0; i < k; ++i) fit += x[t][i] * out.beta[i];
    out.residuals.push_back(y[t] - fit);
    out.ssr += (y[t] - fit) * (y[t] - fit);
    sst += (y[t] - ybar) * (y[t] - ybar);
  }
  out.r_squared = 1.0 - out.ssr / sst;
  const Mat inv = inverse(xtx);
  const double s2 = out.ssr / static_cast<double>(n - k);
  for (std::size_t i = 0; i < k; ++i) out.se.push_back(std::sqrt(s2 * inv[i][i]));
  return out;
}

// Dickey-Fuller t-ratio with no augmentation: dy_t on [y_{t-1}, 1, (t)].
inline double df_tstat(const Vec& y, bool constant, bool trend) {
  Mat x;
  Vec dy;
  for (std::size_t t = 1; t < y.size(); ++t) {
    Vec row{y[t - 1]};
    if (constant) row.push_back(1.0);
    if (trend) row.push_back(static_cast<double>(t));
    x.push_back(row);
    dy.push_back(y[t] - y[t - 1]);
  }
  const Ols f = normal_equations(x, dy);
  return f.beta[0] / f.se[0];
}

// Univariate Jarque-Bera with population moments.
inline double jarque_bera(const Vec& u) {
  const double n = static_cast<double>(u.size());
  double mean = 0.0;
  for (double v : u) mean += v;
  mean /= n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : u) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  const double s = m3 / std::pow(m2, 1.5);
  const double k = m4 / (m2 * m2);
  return n * (s * s / 6.0 + (k - 3.0) * (k - 3.0) / 24.0);
}

}  // namespace oracle
