#pragma once

// Annual time-series containers and the transforms the estimators consume.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cointkit/errors.hpp"

namespace cointkit {

/// A named annual series on a contiguous year axis.
class Series {
 public:
  Series(std::string name, std::vector<int> years, std::vector<double> values)
      : name_(std::move(name)), years_(std::move(years)), values_(std::move(values)) {
    if (years_.empty()) throw Error(ErrorCode::InvalidSeries, "series '" + name_ + "' is empty");
    if (years_.size() != values_.size())
      throw Error(ErrorCode::InvalidSeries, "series '" + name_ + "' has mismatched years/values");
    for (std::size_t i = 1; i < years_.size(); ++i) {
      if (years_[i] != years_[i - 1] + 1)
        throw Error(ErrorCode::YearGap,
                    "series '" + name_ + "' is not contiguous after " + std::to_string(years_[i - 1]),
                    years_[i - 1] + 1);
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i]))
        throw Error(ErrorCode::InvalidSeries,
                    "series '" + name_ + "' has a non-finite value in " + std::to_string(years_[i]),
                    years_[i]);
    }
  }

  Series(std::string name, int first_year, const std::vector<double>& values)
      : Series(std::move(name), make_years(first_year, values.size()), values) {}

  const std::string& name() const noexcept { return name_; }
  const std::vector<int>& years() const noexcept { return years_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  int first_year() const noexcept { return years_.front(); }
  int last_year() const noexcept { return years_.back(); }

  Series renamed(std::string name) const { return Series(std::move(name), years_, values_); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  static std::vector<int> make_years(int first, std::size_t n) {
    std::vector<int> years(n);
    for (std::size_t i = 0; i < n; ++i) years[i] = first + static_cast<int>(i);
    return years;
  }

  std::string name_;
  std::vector<int> years_;
  std::vector<double> values_;
};

/// Ordered collection of series sharing one year axis.
class Dataset {
 public:
  explicit Dataset(std::vector<Series> variables) : variables_(std::move(variables)) {
    if (variables_.empty()) throw Error(ErrorCode::InvalidSeries, "dataset needs at least one series");
    std::set<std::string> names;
    for (const auto& s : variables_) {
      if (s.years() != variables_.front().years())
        throw Error(ErrorCode::ShapeMismatch, "series '" + s.name() + "' has a different year axis");
      if (!names.insert(s.name()).second)
        throw Error(ErrorCode::InvalidSeries, "duplicate variable name '" + s.name() + "'");
    }
  }

  /// Builds a dataset from a T x k matrix of levels.
  static Dataset from_matrix(const Eigen::MatrixXd& levels, const std::vector<std::string>& names,
                             int first_year) {
    if (static_cast<std::size_t>(levels.cols()) != names.size())
      throw Error(ErrorCode::ShapeMismatch, "name count does not match column count");
    std::vector<Series> vars;
    vars.reserve(names.size());
    for (Eigen::Index j = 0; j < levels.cols(); ++j) {
      std::vector<double> v(levels.col(j).data(), levels.col(j).data() + levels.rows());
      vars.emplace_back(names[static_cast<std::size_t>(j)], first_year, std::move(v));
    }
    return Dataset(std::move(vars));
  }

  const std::vector<Series>& variables() const noexcept { return variables_; }
  const Series& operator[](std::size_t i) const { return variables_.at(i); }
  const std::vector<int>& years() const noexcept { return variables_.front().years(); }
  std::size_t k() const noexcept { return variables_.size(); }
  std::size_t T() const noexcept { return variables_.front().size(); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& s : variables_) out.push_back(s.name());
    return out;
  }

  /// Index of the named variable; throws UnknownVariable.
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i].name() == name) return i;
    throw Error(ErrorCode::UnknownVariable, "no variable named '" + name + "'");
  }

  /// T x k matrix of values in variable order.
  Eigen::MatrixXd matrix() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(T()), static_cast<Eigen::Index>(k()));
    for (std::size_t j = 0; j < k(); ++j)
      for (std::size_t t = 0; t < T(); ++t)
        m(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j)) = variables_[j].values()[t];
    return m;
  }

  Dataset select(const std::vector<std::size_t>& order) const {
    std::vector<Series> vars;
    for (std::size_t i : order) vars.push_back(variables_.at(i));
    return Dataset(std::move(vars));
  }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<Series> variables_;
};

inline Series log_transform(const Series& s) {
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double v = s.values()[i];
    if (!(v > 0.0))
      throw Error(ErrorCode::NonPositiveValue,
                  "'" + s.name() + "' is not positive in " + std::to_string(s.years()[i]),
                  s.years()[i]);
    out[i] = std::log(v);
  }
  return Series("l_" + s.name(), s.years(), std::move(out));
}

/// Repeated first difference; the first `order` years are dropped.
inline Series difference(const Series& s, std::size_t order = 1) {
  if (order == 0) throw Error(ErrorCode::InvalidSeries, "difference order must be positive");
  if (s.size() <= order)
    throw Error(ErrorCode::SeriesTooShort, "'" + s.name() + "' is too short to difference");
  std::vector<double> v = s.values();
  for (std::size_t d = 0; d < order; ++d) {
    for (std::size_t i = v.size() - 1; i > 0; --i) v[i] -= v[i - 1];
    v.erase(v.begin());
  }
  std::vector<int> years(s.years().begin() + static_cast<std::ptrdiff_t>(order), s.years().end());
  return Series("d_" + s.name(), std::move(years), std::move(v));
}

/// Restricts every series to the years common to all of them.
inline Dataset align(std::span<const Series> series) {
  if (series.empty()) throw Error(ErrorCode::NoCommonYears, "no series to align");
  int first = series.front().first_year();
  int last = series.front().last_year();
  for (const auto& s : series) {
    first = std::max(first, s.first_year());
    last = std::min(last, s.last_year());
  }
  if (first > last) throw Error(ErrorCode::NoCommonYears, "year axes do not overlap");
  std::vector<Series> out;
  out.reserve(series.size());
  for (const auto& s : series) {
    const auto lo = static_cast<std::ptrdiff_t>(first - s.first_year());
    const auto hi = static_cast<std::ptrdiff_t>(last - s.first_year()) + 1;
    out.emplace_back(s.name(), std::vector<int>(s.years().begin() + lo, s.years().begin() + hi),
                     std::vector<double>(s.values().begin() + lo, s.values().begin() + hi));
  }
  return Dataset(std::move(out));
}

inline Dataset align(const Dataset& d) { return align(std::span<const Series>(d.variables())); }

/// Row-aligned regression blocks for a lag-p error-correction layout.
/// Row i refers to year index t = p + i of the dataset.
struct LagDesign {
  Eigen::MatrixXd diff;          // dy_t                      (T-p) x k
  Eigen::MatrixXd lagged_level;  // y_{t-1}                   (T-p) x k
  Eigen::MatrixXd lagged_diffs;  // dy_{t-1} .. dy_{t-p+1}    (T-p) x k(p-1), lag-major
  Eigen::MatrixXd intercept;     // ones                      (T-p) x 1
  std::vector<int> years;        // calendar year of each row
  std::size_t first_index = 0;   // t of row 0
};

inline LagDesign lag_design(const Dataset& d, std::size_t p) {
  const std::size_t T = d.T();
  if (p == 0) throw Error(ErrorCode::InvalidSeries, "lag order must be at least 1");
  if (T <= p + 1)
    throw Error(ErrorCode::SeriesTooShort,
                "T=" + std::to_string(T) + " is too short for lag order " + std::to_string(p));
  const Eigen::MatrixXd y = d.matrix();
  const auto k = static_cast<Eigen::Index>(d.k());
  const auto rows = static_cast<Eigen::Index>(T - p);
  LagDesign out;
  out.diff.resize(rows, k);
  out.lagged_level.resize(rows, k);
  out.lagged_diffs.resize(rows, k * static_cast<Eigen::Index>(p - 1));
  out.intercept = Eigen::MatrixXd::Ones(rows, 1);
  out.first_index = p;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index t = static_cast<Eigen::Index>(p) + i;
    out.diff.row(i) = y.row(t) - y.row(t - 1);
    out.lagged_level.row(i) = y.row(t - 1);
    for (Eigen::Index j = 1; j < static_cast<Eigen::Index>(p); ++j)
      out.lagged_diffs.block(i, (j - 1) * k, 1, k) = y.row(t - j) - y.row(t - j - 1);
    out.years.push_back(d.years()[static_cast<std::size_t>(t)]);
  }
  return out;
}

}  // namespace cointkit
