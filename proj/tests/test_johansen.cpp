#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cointkit/distributions.hpp"
#include "cointkit/johansen.hpp"
#include "cointkit/random.hpp"
#include "cointkit/simulate.hpp"

using namespace cointkit;

namespace {

// Deterministic test panel: cumulated trigonometric noise, second column
// loaded on the first.
Dataset trig_panel() {
  const int T = 40, k = 3;
  Eigen::MatrixXd y(T, k);
  Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(k);
  for (int t = 0; t < T; ++t) {
    for (int j = 0; j < k; ++j) acc(j) += std::sin(1.7 * t + 2.3 * j + 0.5 * t * j) + 0.5 * std::cos(0.3 * t * t + j);
    y.row(t) = acc;
  }
  y.col(1) += 0.8 * y.col(0);
  return Dataset::from_matrix(y, {"a", "b", "c"}, 1980);
}

Dataset random_walks(std::uint64_t seed, std::size_t k, std::size_t T) {
  DgpSpec spec;
  spec.kind = DgpKind::random_walk;
  spec.k = k;
  spec.T = T;
  spec.seed = seed;
  return generate(spec);
}

}  // namespace

struct EigenRef {
  JohansenCase c;
  std::size_t p;
  double eig[3];
  double trace0;
};

void expect_matches(const std::vector<EigenRef>& refs) {
  const Dataset d = trig_panel();
  for (const auto& r : refs) {
    const JohansenResult res = johansen_test(d, r.p, r.c);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(res.eigenvalues(i), r.eig[i], 1e-9) << to_string(r.c) << " p=" << r.p;
    EXPECT_NEAR(res.trace_rows[0].statistic, r.trace0, 1e-7);
  }
}

TEST(Johansen, EigenvaluesMatchStatsmodels) {
  // statsmodels coint_johansen, det_order -1 / 0, k_ar_diff 1 / 2. Its k_ar_diff = 0 branch
  // pairs the difference with the contemporaneous level, so p = 1 is checked separately.
  expect_matches({
      {JohansenCase::none, 2, {0.91150905717096, 0.100771882651102, 0.0132179352333169}, 96.6864276042},
      {JohansenCase::none, 3, {0.197852840744834, 0.136677166389071, 0.0581005344339277}, 15.8096007601},
      {JohansenCase::unrestricted_constant, 2, {0.980373719382066, 0.106219730328755, 0.0258921641712419}, 154.637745204},
      {JohansenCase::unrestricted_constant, 3, {0.69185617941359, 0.0680622176156402, 4.28314297663022e-05}, 46.1656663074},
  });
}

TEST(Johansen, EigenvaluesMatchGeneralizedEigenOracle) {
  // scipy generalized symmetric eigensolver on the partialled moment matrices,
  // built from an explicit row-by-row design (agrees with statsmodels at p = 2, 3)
  expect_matches({
      {JohansenCase::none, 1, {0.730991857077386, 0.287623161337474, 0.000602477785839975}, 64.4578165880},
      {JohansenCase::restricted_constant, 1, {0.754989345030638, 0.287654097889419, 0.0849614304381516}, 71.5429380803},
      {JohansenCase::restricted_constant, 2, {0.980380697627697, 0.106742124578546, 0.061825838314281}, 156.1017588262},
      {JohansenCase::unrestricted_constant, 1, {0.754656304627733, 0.28756758006869, 0.066864067778584}, 70.7214233250},
      {JohansenCase::restricted_trend, 1, {0.784967696818384, 0.420623808987734, 0.284668804530537}, 94.2934174593},
      {JohansenCase::restricted_trend, 2, {0.981937839045801, 0.394538422309109, 0.0852431130368454}, 174.9822937450},
      {JohansenCase::unrestricted_trend, 1, {0.784733059277775, 0.420591976760277, 0.284261607195063}, 94.2265480431},
      {JohansenCase::unrestricted_trend, 2, {0.981843699409831, 0.394453900248794, 0.0852280941616632}, 174.7788245170},
  });
}

TEST(Johansen, SolvesTheEigenproblem) {
  const Dataset d = trig_panel();
  for (auto c : {JohansenCase::none, JohansenCase::restricted_constant, JohansenCase::unrestricted_constant,
                 JohansenCase::restricted_trend, JohansenCase::unrestricted_trend}) {
    const JohansenResult res = reduced_rank_regression(d, 2, c);
    const Eigen::MatrixXd m = res.s01.transpose() * res.s00.inverse() * res.s01;
    const Eigen::MatrixXd lhs = m * res.beta;
    const Eigen::MatrixXd rhs = res.s11 * res.beta * res.eigenvalues.asDiagonal();
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9) << to_string(c);
    const Eigen::MatrixXd normal = res.beta.transpose() * res.s11 * res.beta;
    EXPECT_LT((normal - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((res.alpha - res.s01 * res.beta).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(res.beta.rows(), static_cast<Eigen::Index>(3 + restricted_terms(c)));
    for (Eigen::Index i = 0; i < 3; ++i) {
      EXPECT_GE(res.eigenvalues(i), 0.0);
      EXPECT_LT(res.eigenvalues(i), 1.0);
      if (i > 0) EXPECT_GE(res.eigenvalues(i - 1), res.eigenvalues(i));
    }
    EXPECT_EQ(res.T_effective, 38u);
  }
}

TEST(Johansen, StationaryUnivariateEigenvalueAwayFromZero) {
  int ok = 0;
  for (std::uint64_t j = 0; j < 200; ++j) {
    DgpSpec spec;
    spec.kind = DgpKind::stationary_ar;
    spec.phi = 0.5;
    spec.T = 500;
    spec.seed = derive_seed(41, j);
    ok += reduced_rank_regression(generate(spec), 1).eigenvalues(0) > 0.2;
  }
  EXPECT_GE(ok, 190);
}

TEST(Johansen, DuplicatedVariableIsSingular) {
  const Dataset base = random_walks(42, 2, 60);
  const Dataset d({base[0], base[1], base[0].renamed("copy")});
  try {
    reduced_rank_regression(d, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMomentMatrix);
  }
}

TEST(Johansen, TooShort) {
  EXPECT_THROW(reduced_rank_regression(random_walks(43, 4, 10), 3), Error);
}

TEST(RankStatistics, Examples) {
  const std::vector<double> zeros(4, 0.0);
  for (std::size_t r = 0; r < 4; ++r) {
    EXPECT_EQ(trace_statistic(zeros, 25.0, r), 0.0);
    EXPECT_EQ(max_eigen_statistic(zeros, 25.0, r), 0.0);
  }
  const std::vector<double> half{0.5};
  EXPECT_NEAR(trace_statistic(half, 100.0, 0), 69.314718, 1e-6);
  EXPECT_NEAR(max_eigen_statistic(half, 100.0, 0), 69.314718, 1e-6);
  EXPECT_THROW(trace_statistic(half, 100.0, 1), Error);
  EXPECT_THROW(max_eigen_statistic(half, 100.0, 1), Error);
}

TEST(RankStatistics, TelescopingIdentity) {
  Rng rng(44);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform() * 8);
    std::vector<double> lambda(k);
    for (double& l : lambda) l = rng.uniform() * 0.999;
    std::sort(lambda.rbegin(), lambda.rend());
    const double T = 10.0 + 200.0 * rng.uniform();
    for (std::size_t r = 0; r < k; ++r) {
      const double next = r + 1 < k ? trace_statistic(lambda, T, r + 1) : 0.0;
      EXPECT_NEAR(trace_statistic(lambda, T, r) - next, max_eigen_statistic(lambda, T, r), 1e-9);
      EXPECT_GE(trace_statistic(lambda, T, r), max_eigen_statistic(lambda, T, r));
      EXPECT_GE(max_eigen_statistic(lambda, T, r), 0.0);
      if (r + 1 < k) EXPECT_GE(trace_statistic(lambda, T, r), next);
    }
  }
}

TEST(RankDecision, ExtremePValues) {
  EXPECT_EQ(sequential_rank(std::vector<double>(4, 0.0001), 0.05), 4u);
  EXPECT_EQ(sequential_rank(std::vector<double>(4, 0.99), 0.05), 0u);
  EXPECT_EQ(sequential_rank(std::vector<double>{0.001, 0.01, 0.3, 0.001}, 0.05), 2u);
}

TEST(RankDecision, TableAndBothDecisions) {
  const JohansenResult res = johansen_test(trig_panel(), 2);
  const RankDecision dec = rank_decision(res, 0.05);
  EXPECT_EQ(dec.trace_rank, res.selected_rank);
  EXPECT_NE(dec.table.find("Trace stat"), std::string::npos);
  EXPECT_NE(dec.table.find("Max-Eigen"), std::string::npos);
  EXPECT_NE(dec.table.find("At most 2"), std::string::npos);
}

TEST(RankDecision, IndependentRandomWalksRarelyCointegrate) {
  int zero = 0;
  for (std::uint64_t j = 0; j < 1000; ++j) {
    zero += johansen_test(random_walks(derive_seed(45, j), 2, 200), 1, JohansenCase::restricted_constant)
                .selected_rank == 0;
  }
  EXPECT_GE(zero, 880);
}

TEST(JohansenPValue, TableConsistency) {
  for (int c = 1; c <= 5; ++c) {
    for (std::size_t dim = 1; dim <= 12; ++dim) {
      for (auto which : {JohansenTest::trace, JohansenTest::max_eigen}) {
        const auto jc = static_cast<JohansenCase>(c);
        EXPECT_GE(johansen_pvalue(0.0, dim, jc, which), 0.99);
        const double cv5 = johansen_critical_value(dim, jc, which, 0.05);
        EXPECT_NEAR(johansen_pvalue(cv5, dim, jc, which), 0.05, 0.005);
        const double cv1 = johansen_critical_value(dim, jc, which, 0.01);
        EXPECT_LT(johansen_pvalue(3.0 * cv1, dim, jc, which), 0.001);
        double prev = 1.0;
        for (double s = 0.0; s < 4.0 * cv1; s += cv1 / 50.0) {
          const double p = johansen_pvalue(s, dim, jc, which);
          EXPECT_LE(p, prev);
          EXPECT_GE(p, 0.0);
          prev = p;
        }
      }
    }
  }
  EXPECT_THROW(johansen_pvalue(1.0, 0, JohansenCase::none, JohansenTest::trace), Error);
  EXPECT_THROW(johansen_pvalue(1.0, 13, JohansenCase::none, JohansenTest::trace), Error);
}

TEST(JohansenPValue, OneDimensionalConstantCaseIsChiSquareOne) {
  // with an unrestricted constant and one stochastic trend the limit is chi-square(1)
  for (auto c : {JohansenCase::unrestricted_constant, JohansenCase::unrestricted_trend}) {
    for (double s = 0.5; s < 25.0; s += 0.25) {
      const double p = johansen_pvalue(s, 1, c, JohansenTest::trace);
      const double ref = chi_square_sf(s, 1.0);
      EXPECT_NEAR(p, ref, std::max(0.004, 0.15 * ref)) << "s=" << s;
    }
  }
}

TEST(JohansenPValue, SimulatedNullTailNoDeterministics) {
  // one random walk, no deterministic terms: trace = -T ln(1 - lambda)
  std::vector<double> stats;
  for (std::uint64_t j = 0; j < 20000; ++j) {
    Rng rng(derive_seed(46, j));
    double y = 0.0, s11 = 0.0, s01 = 0.0, s00 = 0.0;
    const int T = 400;
    for (int t = 0; t < T; ++t) {
      const double e = rng.normal();
      s11 += y * y;
      s01 += e * y;
      s00 += e * e;
      y += e;
    }
    const double lambda = s01 * s01 / (s00 * s11);
    stats.push_back(-T * std::log1p(-lambda));
  }
  std::sort(stats.begin(), stats.end());
  const double q95 = stats[static_cast<std::size_t>(0.95 * stats.size())];
  const double q99 = stats[static_cast<std::size_t>(0.99 * stats.size())];
  EXPECT_NEAR(johansen_pvalue(q95, 1, JohansenCase::none, JohansenTest::trace), 0.05, 0.006);
  EXPECT_NEAR(johansen_pvalue(q99, 1, JohansenCase::none, JohansenTest::trace), 0.01, 0.003);
}

TEST(JohansenCriticalValues, AgreeWithPublishedAsymptoticTables) {
  // 5% critical values from the MacKinnon-Haug-Michelis (1999) response surfaces
  struct Row {
    JohansenCase c;
    JohansenTest which;
    double cv[4];
  };
  const Row rows[] = {
      {JohansenCase::none, JohansenTest::trace, {4.129906, 12.32090, 24.27596, 40.17493}},
      {JohansenCase::restricted_constant, JohansenTest::trace, {9.164546, 20.26184, 35.19275, 54.07904}},
      {JohansenCase::unrestricted_constant, JohansenTest::trace, {3.841466, 15.49471, 29.79707, 47.85613}},
      {JohansenCase::unrestricted_constant, JohansenTest::max_eigen, {3.841466, 14.26460, 21.13162, 27.58434}},
      {JohansenCase::restricted_trend, JohansenTest::trace, {12.51798, 25.87211, 42.91525, 63.87610}},
      {JohansenCase::unrestricted_trend, JohansenTest::trace, {3.841466, 18.39771, 35.01090, 55.24578}},
  };
  for (const auto& r : rows)
    for (std::size_t dim = 1; dim <= 4; ++dim)
      EXPECT_NEAR(johansen_critical_value(dim, r.c, r.which, 0.05), r.cv[dim - 1], 0.015 * r.cv[dim - 1])
          << to_string(r.c) << " dim=" << dim;
}

TEST(LongRun, NormalizationExample) {
  Eigen::Vector4d beta(2, -0.2222, -1.1256, 0.2522);
  const LongRunEquation eq = normalize_long_run(Eigen::VectorXd(beta), {"l_gdp", "l_ac", "l_gcf", "l_inf"}, 0);
  EXPECT_EQ(eq.normalized_on, "l_gdp");
  ASSERT_EQ(eq.coefficients.size(), 3u);
  EXPECT_NEAR(eq.coefficients[0], 0.1111, 1e-12);
  EXPECT_NEAR(eq.coefficients[1], 0.5628, 1e-12);
  EXPECT_NEAR(eq.coefficients[2], -0.1261, 1e-12);
  for (double c : {-3.0, 0.01, 7.5}) {
    const LongRunEquation scaled = normalize_long_run(Eigen::VectorXd(c * beta), {"l_gdp", "l_ac", "l_gcf", "l_inf"}, 0);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(scaled.coefficients[i], eq.coefficients[i], 1e-12);
  }
}

TEST(LongRun, RenderForm) {
  const Eigen::Vector4d beta(1.0, -0.111100, -0.562799, 0.126099);
  const LongRunEquation eq = normalize_long_run(beta, {"l_gdp", "l_ac", "l_gcf", "l_inf"}, 0);
  EXPECT_EQ(eq.render(), "l_gdp = 0.111100 * l_ac + 0.562799 * l_gcf - 0.126099 * l_inf");
  const LongRunEquation neg = normalize_long_run(Eigen::Vector2d(1.0, 0.5), {"y", "x"}, 0);
  EXPECT_EQ(neg.render(), "y = -0.500000 * x");
}

TEST(LongRun, ZeroPivot) {
  try {
    normalize_long_run(Eigen::Vector3d(0.0, 1.0, 2.0), {"a", "b", "c"}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroNormalizationCoefficient);
  }
}

TEST(LongRun, RecoversUnitCoefficient) {
  std::vector<double> coefs;
  for (std::uint64_t j = 0; j < 200; ++j) {
    Rng rng(derive_seed(47, j));
    Eigen::MatrixXd y(500, 2);
    double x = 0.0;
    for (int t = 0; t < 500; ++t) {
      x += rng.normal();
      y(t, 0) = x;
      y(t, 1) = x + rng.normal();
    }
    const JohansenResult res = reduced_rank_regression(Dataset::from_matrix(y, {"y1", "y2"}, 1), 1);
    coefs.push_back(normalize_long_run(res, 1).coefficients[0]);
  }
  std::nth_element(coefs.begin(), coefs.begin() + 100, coefs.end());
  EXPECT_NEAR(coefs[100], 1.0, 0.15);
}

TEST(Johansen, ScaleInvariance) {
  const Dataset d = trig_panel();
  Eigen::MatrixXd y = d.matrix();
  const Eigen::Vector3d scale(100.0, 0.01, -3.0);
  const Eigen::MatrixXd scaled = y * scale.asDiagonal();
  for (auto c : {JohansenCase::none, JohansenCase::restricted_constant, JohansenCase::unrestricted_constant}) {
    const JohansenResult a = reduced_rank_regression(d, 2, c);
    const JohansenResult b = reduced_rank_regression(Dataset::from_matrix(scaled, d.names(), 1980), 2, c);
    for (Eigen::Index i = 0; i < 3; ++i) EXPECT_NEAR(a.eigenvalues(i), b.eigenvalues(i), 1e-8);
    // normalized coefficients pick up the ratio of unit changes
    const LongRunEquation ea = normalize_long_run(a, 0), eb = normalize_long_run(b, 0);
    EXPECT_NEAR(eb.coefficients[0], ea.coefficients[0] * scale(0) / scale(1), 1e-6 * std::fabs(eb.coefficients[0]));
    EXPECT_NEAR(eb.coefficients[1], ea.coefficients[1] * scale(0) / scale(2), 1e-6 * std::fabs(eb.coefficients[1]));
  }
}

TEST(JohansenCase, Parse) {
  EXPECT_EQ(parse_johansen_case("2"), JohansenCase::restricted_constant);
  EXPECT_EQ(parse_johansen_case("unrestricted_trend"), JohansenCase::unrestricted_trend);
  EXPECT_THROW(parse_johansen_case("6"), Error);
}
