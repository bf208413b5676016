#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "subvar/data/io.hpp"
#include "subvar/data/regression.hpp"
#include "subvar/engine/evidence.hpp"
#include "subvar/errors.hpp"
#include "subvar/forecast/backtest.hpp"
#include "subvar/forecast/baselines.hpp"
#include "subvar/forecast/moments.hpp"
#include "subvar/forecast/predictive.hpp"
#include "subvar/linalg.hpp"

using namespace subvar;
using namespace subvar::forecast;
using engine::ParamDraw;

namespace {

ParamDraw random_stable_draw(Index M, int p, std::uint64_t seed) {
  ParamDraw d;
  d.A = 0.15 * fixture::noise(M * p + 1, M, seed);
  for (Index j = 0; j < M; ++j) d.A(j, j) += 0.4;
  const Matrix G = fixture::noise(M, M, seed + 1);
  d.Sigma = G * G.transpose() / M + 0.5 * Matrix::Identity(M, M);
  return d;
}

double log_normal(double y, double m, double v) {
  return -0.5 * (std::log(2.0 * std::numbers::pi * v) + (y - m) * (y - m) / v);
}

}  // namespace

TEST(Companion, BlocksAndIdentity) {
  const auto d = random_stable_draw(3, 2, 1);
  const auto cf = companion_form(d.A);
  EXPECT_EQ(cf.comp_matrix.rows(), 6);
  EXPECT_EQ(cf.comp_matrix.topRows(3), d.A.topRows(6).transpose());
  EXPECT_EQ(cf.comp_matrix.bottomLeftCorner(3, 3), Matrix::Identity(3, 3));
  EXPECT_EQ(cf.comp_matrix.bottomRightCorner(3, 3), Matrix::Zero(3, 3));
  EXPECT_EQ(cf.comp_intercept.head(3), d.A.row(6).transpose());
  EXPECT_THROW(companion_form(Matrix::Zero(5, 3)), ArgumentError);
}

TEST(Moments, OneStepAndZeroCoefficients) {
  const auto d = random_stable_draw(3, 2, 2);
  const Vector x = fixture::noise(7, 1, 3).col(0);
  Vector xs = x;
  xs[6] = 1.0;
  const auto m1 = iterated_forecast_moments(d, xs, 1);
  EXPECT_LE(max_abs(m1.mean - d.A.transpose() * xs), 1e-14);
  EXPECT_EQ(m1.cov, d.Sigma);

  ParamDraw zero = d;
  zero.A.setZero();
  zero.A.row(6) << 1.0, 2.0, 3.0;
  const auto m4 = iterated_forecast_moments(zero, xs, 4);
  EXPECT_EQ(m4.mean, zero.A.row(6).transpose());
  EXPECT_LE(max_abs(m4.cov - d.Sigma), 1e-15);
}

TEST(Moments, ScalarAr1ClosedForm) {
  ParamDraw d;
  d.A.resize(2, 1);
  d.A << 0.5, 0.3;
  d.Sigma = Matrix::Identity(1, 1);
  Vector x(2);
  x << 2.0, 1.0;
  const auto m = iterated_forecast_moments(d, x, 4);
  EXPECT_EQ(m.cov(0, 0), 1.328125);
  EXPECT_NEAR(m.mean[0], 0.0625 * 2.0 + 0.3 * (1 + 0.5 + 0.25 + 0.125), 1e-15);
}

TEST(Moments, AgreeWithPathSimulation) {
  const auto d = random_stable_draw(3, 2, 4);
  Vector x = fixture::noise(7, 1, 5).col(0);
  x[6] = 1.0;
  for (int h : {1, 4}) {
    const auto exact = iterated_forecast_moments(d, x, h);
    const auto mc = oracle::simulate_paths(d, x, h, 100000, 40 + h);
    for (Index i = 0; i < 3; ++i) {
      EXPECT_LE(std::abs(mc.mean[i] - exact.mean[i]), 3.0 * mc.mean_se[i]);
      for (Index j = 0; j < 3; ++j)
        EXPECT_LE(std::abs(mc.cov(i, j) - exact.cov(i, j)), 3.0 * mc.cov_se(i, j));
    }
  }
}

TEST(Predictive, SingleDrawAndDuplicates) {
  const auto d = random_stable_draw(3, 1, 6);
  Vector x(4);
  x << 0.3, -0.2, 0.9, 1.0;
  const std::size_t focus[] = {0, 1, 2};
  Vector y(3);
  y << 0.1, 0.5, -0.4;
  const auto one = predictive_density({d}, x, 1, focus, y);
  const Vector m = d.A.transpose() * x;
  for (Index k = 0; k < 3; ++k) EXPECT_NEAR(one.lpl[k], log_normal(y[k], m[k], d.Sigma(k, k)), 1e-13);
  const auto two = predictive_density({d, d}, x, 1, focus, y);
  EXPECT_LE(max_abs(two.lpl - one.lpl), 1e-14);
  EXPECT_LE(max_abs(two.point - one.point), 1e-15);

  const auto e = random_stable_draw(3, 1, 7);
  const auto de = predictive_density({d, e}, x, 2, focus, y);
  const auto ed = predictive_density({e, d}, x, 2, focus, y);
  EXPECT_LE(max_abs(de.lpl - ed.lpl), 1e-14);

  ParamDraw bad = d;
  bad.Sigma(1, 1) = 0.0;
  EXPECT_THROW(predictive_density({bad}, x, 1, focus, y), NumericalError);
}

TEST(Predictive, ScalarMixtureMatchesStudentT) {
  // AR(1) with a conjugate prior: the one-step predictive is Student-t.
  const auto series = fixture::stable_var(1, 40, 1, 8);
  const auto rd = data::build_lag_matrix(series, 1);
  prior::ConjugatePrior p;
  p.mean = Matrix::Zero(2, 1);
  p.precision = 0.5 * Matrix::Identity(2, 2);
  p.dof = 4.0;
  p.scale = Matrix::Constant(1, 1, 2.0);
  const auto post = engine::posterior_moments(p, rd);
  const Vector x = data::forecast_state(series, 1);
  Vector y(1);
  y << 1.9;

  const double nu = post.dof;
  const double xvx = x.dot(cholesky_solve(post.precision_chol, x).col(0));
  const double scale2 = post.scale(0, 0) * (1.0 + xvx) / nu;
  const double e = y[0] - post.mean.col(0).dot(x);
  const double exact = std::lgamma(0.5 * (nu + 1)) - std::lgamma(0.5 * nu) -
                       0.5 * std::log(nu * std::numbers::pi * scale2) -
                       0.5 * (nu + 1) * std::log1p(e * e / (nu * scale2));

  const int n = 50000;
  const auto draws = engine::sample_posterior(post, n, 77);
  const std::size_t focus[] = {0};
  const auto r = predictive_density(draws, x, 1, focus, y);
  Vector dens(n);
  for (int i = 0; i < n; ++i) {
    const auto& d = draws[static_cast<std::size_t>(i)];
    dens[i] = std::exp(log_normal(y[0], d.A.col(0).dot(x), d.Sigma(0, 0)));
  }
  const double mean = dens.mean();
  const double se = std::sqrt((dens.array() - mean).square().sum() / (double(n - 1) * n));
  EXPECT_NEAR(r.lpl[0], std::log(mean), 1e-12);
  EXPECT_LE(std::abs(r.lpl[0] - exact), 3.0 * se / mean);
}

TEST(Bvar, MatchesSubspaceModelAtOmegaZero) {
  const auto rd = data::build_lag_matrix(fixture::stable_var(4, 90, 2, 30), 2);
  const MinnesotaBvar bvar(rd);
  const hyper::SubspaceVar sub(rd, prior::PriorVariant::Minnesota, {}, 3);
  for (double theta : {0.01, 0.2, 3.0}) {
    const hyper::HyperPoint pt{1, 0.0, theta};
    const auto a = bvar.posterior_at(pt);
    const auto b = sub.posterior_at(pt);
    EXPECT_LE(max_abs(a.mean - b.mean), 1e-10);
    EXPECT_LE(max_abs(a.covariance() - b.covariance()), 1e-10);
    EXPECT_LE(max_abs(a.scale - b.scale), 1e-10);
    EXPECT_EQ(a.dof, b.dof);
    EXPECT_NEAR(bvar.log_evidence(pt), sub.log_evidence(pt), 1e-8);
  }
}

TEST(HyperUncertainty, DegenerateGridEqualsPointPredictive) {
  const auto series = fixture::stable_var(3, 80, 1, 31);
  const auto rd = data::build_lag_matrix(series, 1);
  const hyper::SubspaceVar model(rd, prior::PriorVariant::Minnesota, {}, 2);
  std::vector<hyper::HyperPoint> grid{{1, 0.3, 0.2}, {2, 0.6, 0.2}};
  grid[0].weight = 0.0;
  grid[1].weight = 1.0;
  const Vector x = data::forecast_state(series, 1);
  const int hs[] = {1, 4};
  Vector y(3);
  y << 0.2, 0.1, 0.0;
  DrawBudget budget{5, 4, 1};
  const auto res = forecast_with_hyper_uncertainty(model, grid, x, hs, {y, y}, budget, 11);

  std::vector<ParamDraw> pooled;
  const auto post = model.posterior_at(grid[1]);
  for (int i = 0; i < 5; ++i) {
    const auto d = engine::sample_posterior(post, 4, derive_seed(11, "param-draws", static_cast<std::uint64_t>(i)));
    pooled.insert(pooled.end(), d.begin(), d.end());
  }
  const auto focus = model.focus();
  const auto ref = predictive_density(pooled, x, 4, focus, y);
  EXPECT_LE(max_abs(res[1].lpl - ref.lpl), 1e-12);
  EXPECT_LE(max_abs(res[1].point - ref.point), 1e-12);

  const auto again = forecast_with_hyper_uncertainty(model, grid, x, hs, {y, y}, budget, 11);
  EXPECT_EQ(again[0].lpl, res[0].lpl);
  EXPECT_EQ(again[1].point, res[1].point);
}

TEST(HyperUncertainty, TwoPointMixtureBracket) {
  const auto series = fixture::stable_var(3, 80, 1, 32);
  const auto rd = data::build_lag_matrix(series, 1);
  const hyper::SubspaceVar model(rd, prior::PriorVariant::Minnesota, {}, 2);
  const Vector x = data::forecast_state(series, 1);
  const int hs[] = {1};
  Vector y(3);
  y << 1.5, -1.0, 0.3;
  DrawBudget budget{400, 5, 1};
  auto only = [&](double w0) {
    std::vector<hyper::HyperPoint> g{{1, 0.1, 0.01}, {2, 0.9, 3.0}};
    g[0].weight = w0;
    g[1].weight = 1.0 - w0;
    return forecast_with_hyper_uncertainty(model, g, x, hs, {y}, budget, 12)[0];
  };
  const auto a = only(1.0), b = only(0.0), mix = only(0.3);
  for (Index k = 0; k < 3; ++k) {
    const double lo = std::min(a.lpl[k], b.lpl[k]);
    const double hi = std::max(a.lpl[k], b.lpl[k]);
    EXPECT_GE(mix.lpl[k], lo - 0.05);
    EXPECT_LE(mix.lpl[k], hi + 0.05);
  }
}

TEST(Dfm, IidBlockMatchesMarchenkoPastur) {
  const Index T = 2000, N = 400;
  Matrix data(T, N + 3);
  data << fixture::noise(T, 3, 40), fixture::noise(T, N, 41);
  const auto panel = data::panel_from_matrix(data);
  const auto spec = dfm_baseline_spec(panel, {0, 1, 2}, 2);
  const double gamma = static_cast<double>(N) / T;
  const double f = oracle::marchenko_pastur_tail(gamma, 1.0);
  const double expect = N * f;
  const double tol = 4.0 * std::sqrt(N * f * (1.0 - f));
  EXPECT_NEAR(spec.n_factors, expect, tol);
  EXPECT_EQ(spec.panel.data.leftCols(3), data.leftCols(3));
}

TEST(Dfm, ExactRankTwoBlock) {
  const Index T = 200;
  const Matrix f = fixture::noise(T, 2, 42, 5.0);
  const Matrix load = fixture::noise(2, 10, 43);
  Matrix data(T, 13);
  data << fixture::noise(T, 3, 44), f * load;
  const auto spec = dfm_baseline_spec(data::panel_from_matrix(data), {0, 1, 2}, 2);
  EXPECT_EQ(spec.n_factors, 2);
  EXPECT_FALSE(spec.floored);
  EXPECT_THROW(dfm_baseline_spec(data::panel_from_matrix(fixture::noise(50, 3, 1)), {0, 1, 2}, 2),
               ArgumentError);
}

namespace {

class PerfectForesight final : public ForecastModel {
 public:
  std::string name() const override { return "oracle"; }
  OriginForecast forecast(const data::PanelData&, const Targets& targets,
                          std::uint64_t) const override {
    OriginForecast out;
    for (std::size_t i = 0; i < targets.horizons.size(); ++i) {
      ForecastResult r;
      r.horizon = targets.horizons[i];
      r.point = targets.realized[i];
      r.lpl = Vector::Zero(3);
      out.results.push_back(r);
    }
    return out;
  }
};

}  // namespace

TEST(Backtest, BenchmarkIdentityAndPerfectForesight) {
  auto panel = data::panel_from_matrix(fixture::stable_var(4, 70, 2, 50));
  panel.dates = data::quarterly_dates(1990, 70);
  DrawBudget budget{20, 2, 1};
  std::vector<std::shared_ptr<const ForecastModel>> models{
      std::make_shared<BvarForecastModel>("BVAR", hyper::HyperPriorConfig{},
                                          std::vector<double>{0.1, 0.5}, budget),
      std::make_shared<PerfectForesight>()};
  BacktestOptions opt;
  opt.start = 60;
  opt.end = 65;
  const auto res = recursive_backtest(panel, models, opt);
  EXPECT_EQ(res.forecasts.size(), 2u * 3u * 2u * 6u);
  for (const auto& row : res.scores) {
    if (row.model == "BVAR") {
      EXPECT_EQ(row.rmsfe_ratio, 1.0);
      EXPECT_EQ(row.lpl_diff, 0.0);
    } else {
      EXPECT_EQ(row.rmsfe_ratio, 0.0);
    }
  }
  EXPECT_EQ(res.hyper_paths.size(), 6u);
  EXPECT_EQ(res.forecasts.front().origin_date, panel.dates[59]);

  opt.start = 30;
  EXPECT_THROW(recursive_backtest(panel, models, opt), ConfigError);
  opt.start = 60;
  opt.end = 67;
  EXPECT_THROW(recursive_backtest(panel, models, opt), ConfigError);
  opt.end = 65;
  opt.benchmark = "missing";
  EXPECT_THROW(recursive_backtest(panel, models, opt), ConfigError);
}
