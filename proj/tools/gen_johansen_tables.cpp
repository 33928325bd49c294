// Generates include/cointkit/johansen_tables.hpp.
//
// Simulates the limiting null distributions of the Johansen trace and
// maximum-eigenvalue statistics for m = 1..12 non-cointegrated directions
// under each of the five deterministic cases. The limit is the eigenvalue
// problem of  (int dW F')(int F F')^{-1}(int F dW')  where F is:
//   case 1  W
//   case 2  (W, 1)
//   case 3  (W_1..W_{m-1}, u) corrected for a constant
//   case 4  (W, u) corrected for a constant
//   case 5  (W_1..W_{m-1}, u^2) corrected for (1, u)
// discretized on a grid of `steps` points. All cases and dimensions share one
// draw per replication: moments of the full 15-column regressor matrix are
// formed once and each (case, m) selects and partials its blocks.
//
// usage: gen_johansen_tables [reps] [steps] [seed] > johansen_tables.hpp

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <Eigen/Dense>

#include "cointkit/random.hpp"

namespace {

constexpr int kMaxDim = 12;
constexpr int kCases = 5;
constexpr int kOne = kMaxDim;
constexpr int kTrend = kMaxDim + 1;
constexpr int kTrendSq = kMaxDim + 2;
constexpr int kCols = kMaxDim + 3;

constexpr std::array<double, 25> kTailProbs = {
    0.999, 0.995, 0.99, 0.975, 0.95, 0.9, 0.85, 0.8, 0.75, 0.7, 0.6, 0.5, 0.4,
    0.3,   0.25,  0.2,  0.15,  0.1,  0.075, 0.05, 0.025, 0.01, 0.005, 0.0025, 0.001};

struct Blocks {
  std::vector<int> f;
  std::vector<int> d;
};

Blocks blocks_for(int det_case, int m) {
  Blocks b;
  const int stochastic = (det_case == 3 || det_case == 5) ? m - 1 : m;
  for (int i = 0; i < stochastic; ++i) b.f.push_back(i);
  switch (det_case) {
    case 2: b.f.push_back(kOne); break;
    case 3: b.f.push_back(kTrend); b.d = {kOne}; break;
    case 4: b.f.push_back(kTrend); b.d = {kOne}; break;
    case 5: b.f.push_back(kTrendSq); b.d = {kOne, kTrend}; break;
    default: break;
  }
  return b;
}

Eigen::MatrixXd select(const Eigen::MatrixXd& a, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

double quantile(const std::vector<float>& sorted, double level) {
  const double pos = level * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double w = pos - static_cast<double>(lo);
  return (1.0 - w) * sorted[lo] + w * sorted[hi];
}

}  // namespace

int main(int argc, char** argv) {
  const long reps = argc > 1 ? std::atol(argv[1]) : 100000;
  const int steps = argc > 2 ? std::atoi(argv[2]) : 1000;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 20240611ULL;

  // stats[case][test][m] -> samples
  std::vector<float> stats[kCases][2][kMaxDim];
  for (auto& c : stats)
    for (auto& t : c)
      for (auto& v : t) v.reserve(static_cast<std::size_t>(reps));

  std::vector<Blocks> layout;
  for (int c = 1; c <= kCases; ++c)
    for (int m = 1; m <= kMaxDim; ++m) layout.push_back(blocks_for(c, m));

  Eigen::MatrixXd eps(steps, kMaxDim);
  Eigen::MatrixXd g(steps, kCols);
  for (long rep = 0; rep < reps; ++rep) {
    cointkit::Rng rng(cointkit::derive_seed(seed, static_cast<std::uint64_t>(rep)));
    Eigen::RowVectorXd level = Eigen::RowVectorXd::Zero(kMaxDim);
    for (int t = 0; t < steps; ++t) {
      const double u = static_cast<double>(t) / steps;
      g.row(t).head(kMaxDim) = level;
      g(t, kOne) = 1.0;
      g(t, kTrend) = u;
      g(t, kTrendSq) = u * u;
      for (int j = 0; j < kMaxDim; ++j) eps(t, j) = rng.normal();
      level += eps.row(t);
    }
    const Eigen::MatrixXd gg = g.transpose() * g;
    const Eigen::MatrixXd eg = eps.transpose() * g;

    std::size_t slot = 0;
    for (int c = 0; c < kCases; ++c) {
      for (int m = 1; m <= kMaxDim; ++m, ++slot) {
        const Blocks& b = layout[slot];
        std::vector<int> e_rows(m);
        for (int i = 0; i < m; ++i) e_rows[i] = i;
        Eigen::MatrixXd sff = select(gg, b.f, b.f);
        Eigen::MatrixXd sef = select(eg, e_rows, b.f);
        if (!b.d.empty()) {
          const Eigen::MatrixXd sdd = select(gg, b.d, b.d);
          const Eigen::MatrixXd sdf = select(gg, b.d, b.f);
          const Eigen::MatrixXd sed = select(eg, e_rows, b.d);
          const Eigen::MatrixXd proj = sdd.ldlt().solve(sdf);
          sff -= sdf.transpose() * proj;
          sef -= sed * proj;
        }
        const Eigen::MatrixXd stat = sef * sff.ldlt().solve(sef.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(stat, Eigen::EigenvaluesOnly);
        stats[c][0][m - 1].push_back(static_cast<float>(stat.trace()));
        stats[c][1][m - 1].push_back(static_cast<float>(es.eigenvalues().maxCoeff()));
      }
    }
  }

  std::printf("#pragma once\n\n");
  std::printf("// Generated by tools/gen_johansen_tables (reps=%ld, steps=%d, seed=%llu).\n", reps,
              steps, static_cast<unsigned long long>(seed));
  std::printf("// Quantiles of the simulated limiting null distributions of the Johansen\n");
  std::printf("// trace and maximum-eigenvalue statistics. Do not edit by hand.\n\n");
  std::printf("#include <array>\n\nnamespace cointkit::detail {\n\n");
  std::printf("inline constexpr int kJohansenMaxDim = %d;\n\n", kMaxDim);
  std::printf("// Upper-tail probabilities P(stat > q) of each tabulated quantile.\n");
  std::printf("inline constexpr std::array<double, %zu> kJohansenTailProbs = {\n   ",
              kTailProbs.size());
  for (double p : kTailProbs) std::printf(" %.4f,", p);
  std::printf("};\n\n");
  std::printf("// [case - 1][0 = trace, 1 = max-eigen][m - 1][tail prob index]\n");
  std::printf("inline constexpr double kJohansenQuantiles[5][2][%d][%zu] = {\n", kMaxDim,
              kTailProbs.size());
  for (int c = 0; c < kCases; ++c) {
    std::printf("  {  // case %d\n", c + 1);
    for (int t = 0; t < 2; ++t) {
      std::printf("    {  // %s\n", t == 0 ? "trace" : "max-eigen");
      for (int m = 0; m < kMaxDim; ++m) {
        auto& v = stats[c][t][m];
        std::sort(v.begin(), v.end());
        std::printf("      {");
        for (std::size_t q = 0; q < kTailProbs.size(); ++q)
          std::printf("%s%.4f", q ? ", " : "", quantile(v, 1.0 - kTailProbs[q]));
        std::printf("},\n");
      }
      std::printf("    },\n");
    }
    std::printf("  },\n");
  }
  std::printf("};\n\n}  // namespace cointkit::detail\n");
  return 0;
}
