#pragma once

// Seeded data-generating processes and a Monte Carlo rejection-rate driver.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "cointkit/diagnostics.hpp"
#include "cointkit/errors.hpp"
#include "cointkit/johansen.hpp"
#include "cointkit/random.hpp"
#include "cointkit/series.hpp"
#include "cointkit/unit_root.hpp"
#include "cointkit/var_select.hpp"

namespace cointkit {

enum class DgpKind { random_walk, stationary_ar, cointegrated_system };

constexpr std::string_view to_string(DgpKind k) {
  switch (k) {
    case DgpKind::random_walk: return "random_walk";
    case DgpKind::stationary_ar: return "stationary_ar";
    case DgpKind::cointegrated_system: return "cointegrated_system";
  }
  return "?";
}

inline DgpKind parse_dgp_kind(std::string_view s) {
  if (s == "random_walk") return DgpKind::random_walk;
  if (s == "stationary_ar") return DgpKind::stationary_ar;
  if (s == "cointegrated_system") return DgpKind::cointegrated_system;
  throw Error(ErrorCode::InvalidConfig, "unknown DGP kind '" + std::string(s) + "'");
}

struct DgpSpec {
  DgpKind kind = DgpKind::random_walk;
  std::size_t k = 1;
  std::size_t T = 100;
  double phi = 0.5;                  // stationary_ar coefficient, applied to every variable
  Eigen::MatrixXd alpha;             // k x r loadings (cointegrated_system)
  Eigen::MatrixXd beta;              // k x r cointegrating vectors (cointegrated_system)
  Eigen::MatrixXd innovation_cov;    // k x k, empty means identity
  std::uint64_t seed = 1;
  std::size_t burn_in = 0;           // discarded leading draws
  int first_year = 1;
};

namespace detail {

inline Eigen::MatrixXd covariance_root(const DgpSpec& spec) {
  const auto k = static_cast<Eigen::Index>(spec.k);
  if (spec.innovation_cov.size() == 0) return Eigen::MatrixXd::Identity(k, k);
  if (spec.innovation_cov.rows() != k || spec.innovation_cov.cols() != k)
    throw Error(ErrorCode::UnstableSpec, "innovation covariance must be k x k");
  if ((spec.innovation_cov - spec.innovation_cov.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error(ErrorCode::UnstableSpec, "innovation covariance is not symmetric");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spec.innovation_cov);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (es.eigenvalues().minCoeff() < -1e-12 * scale)
    throw Error(ErrorCode::UnstableSpec, "innovation covariance is not positive semidefinite");
  return es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

inline void validate(const DgpSpec& spec) {
  if (spec.k == 0 || spec.T < 2) throw Error(ErrorCode::UnstableSpec, "need k >= 1 and T >= 2");
  if (spec.kind == DgpKind::stationary_ar && !(std::fabs(spec.phi) < 1.0))
    throw Error(ErrorCode::UnstableSpec, "|phi| must be below one");
  if (spec.kind == DgpKind::cointegrated_system) {
    const auto k = static_cast<Eigen::Index>(spec.k);
    const Eigen::Index r = spec.beta.cols();
    if (spec.beta.rows() != k || spec.alpha.rows() != k || spec.alpha.cols() != r || r < 1)
      throw Error(ErrorCode::UnstableSpec, "alpha and beta must both be k x r with r >= 1");
    if (r >= k) throw Error(ErrorCode::UnstableSpec, "cointegrating rank must be below k");
    Eigen::FullPivHouseholderQR<Eigen::MatrixXd> qr(spec.beta);
    if (qr.rank() < r) throw Error(ErrorCode::UnstableSpec, "beta does not have full column rank");
    // beta' y_t = (I + beta' alpha) beta' y_{t-1} + beta' e_t must be stable
    const Eigen::MatrixXd ec_dynamics =
        Eigen::MatrixXd::Identity(r, r) + spec.beta.transpose() * spec.alpha;
    const Eigen::EigenSolver<Eigen::MatrixXd> es(ec_dynamics, false);
    for (Eigen::Index i = 0; i < r; ++i)
      if (!(std::abs(es.eigenvalues()(i)) < 1.0))
        throw Error(ErrorCode::UnstableSpec, "error-correction dynamics are not stable");
  }
}

}  // namespace detail

/// Simulates T observations, y starting from zero before any burn-in.
///   random_walk:          y_t = y_{t-1} + e_t
///   stationary_ar:        y_t = phi y_{t-1} + e_t
///   cointegrated_system:  dy_t = alpha beta' y_{t-1} + e_t
inline Dataset generate(const DgpSpec& spec) {
  detail::validate(spec);
  const auto k = static_cast<Eigen::Index>(spec.k);
  const Eigen::MatrixXd root = detail::covariance_root(spec);
  Eigen::MatrixXd pi;
  if (spec.kind == DgpKind::cointegrated_system) pi = spec.alpha * spec.beta.transpose();

  Rng rng(spec.seed);
  Eigen::VectorXd state = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd z(k);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(spec.T), k);
  const std::size_t total = spec.burn_in + spec.T;
  for (std::size_t t = 0; t < total; ++t) {
    for (Eigen::Index j = 0; j < k; ++j) z(j) = rng.normal();
    const Eigen::VectorXd shock = root * z;
    switch (spec.kind) {
      case DgpKind::random_walk: state += shock; break;
      case DgpKind::stationary_ar: state = spec.phi * state + shock; break;
      case DgpKind::cointegrated_system: state += pi * state + shock; break;
    }
    if (t >= spec.burn_in) out.row(static_cast<Eigen::Index>(t - spec.burn_in)) = state.transpose();
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < spec.k; ++j) names.push_back("y" + std::to_string(j + 1));
  return Dataset::from_matrix(out, names, spec.first_year);
}

/// Returns true when the test rejects at `alpha`. Exceptions count as
/// failed replications.
using RejectionTest = std::function<bool(const Dataset&, double alpha)>;

struct RejectionSummary {
  double rate = 0.0;  // rejections / completed
  std::size_t rejections = 0;
  std::size_t completed = 0;
  std::size_t failures = 0;
};

/// Replication j simulates with seed derive_seed(spec.seed, j).
inline RejectionSummary rejection_rate(const RejectionTest& test, const DgpSpec& spec, std::size_t reps,
                                       double alpha = 0.05, unsigned threads = 0) {
  if (reps == 0) throw Error(ErrorCode::InvalidConfig, "reps must be at least 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, reps));
  std::atomic<std::size_t> next{0}, rejections{0}, failures{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < reps; j = next++) {
      DgpSpec local = spec;
      local.seed = derive_seed(spec.seed, j);
      try {
        if (test(generate(local), alpha)) ++rejections;
      } catch (const Error&) {
        ++failures;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  RejectionSummary out;
  out.rejections = rejections;
  out.failures = failures;
  out.completed = reps - out.failures;
  out.rate = out.completed ? static_cast<double>(out.rejections) / static_cast<double>(out.completed) : 0.0;
  return out;
}

/// Named tests for the command line `simulate` driver.
struct TestDescriptor {
  std::string name = "adf";  // adf | johansen_trace | white | jb
  Deterministic adf_case = Deterministic::constant;
  JohansenCase johansen_case = JohansenCase::unrestricted_constant;
  std::size_t lag = 1;
  std::size_t variable = 0;
};

inline RejectionTest make_test(const TestDescriptor& desc) {
  if (desc.name == "adf") {
    return [desc](const Dataset& d, double alpha) {
      return adf_test(d[desc.variable], desc.adf_case).p_value <= alpha;
    };
  }
  if (desc.name == "johansen_trace") {
    return [desc](const Dataset& d, double alpha) {
      return johansen_test(d, desc.lag, desc.johansen_case, alpha).trace_rows.front().p_value <= alpha;
    };
  }
  if (desc.name == "white") {
    return [desc](const Dataset& d, double alpha) {
      const VarFit fit = var_fit(d, desc.lag);
      return white_system_test(fit.residuals, fit.design, alpha).p_value <= alpha;
    };
  }
  if (desc.name == "jb") {
    return [desc](const Dataset& d, double alpha) {
      return multivariate_jb(var_fit(d, desc.lag).residuals).joint_jarque_bera.p_value <= alpha;
    };
  }
  throw Error(ErrorCode::InvalidConfig, "unknown test '" + desc.name + "'");
}

}  // namespace cointkit
