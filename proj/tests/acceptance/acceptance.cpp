// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "subvar/data/io.hpp"
#include "subvar/data/regression.hpp"
#include "subvar/engine/convex_check.hpp"
#include "subvar/engine/evidence.hpp"
#include "subvar/forecast/backtest.hpp"
#include "subvar/forecast/baselines.hpp"
#include "subvar/forecast/moments.hpp"
#include "subvar/hyper/grid.hpp"
#include "subvar/hyper/model.hpp"
#include "subvar/hyper/weights.hpp"
#include "subvar/linalg.hpp"
#include "subvar/sim/approx_error.hpp"
#include "subvar/sim/dgp.hpp"
#include "subvar/sim/replication.hpp"
#include "subvar/sim/synthetic_macro.hpp"

using namespace subvar;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.pass) ++failures;
  std::printf("%s  [%d] %s: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", id, title,
              out.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Smoke backtest shared by criteria 3 and 8.
struct Smoke {
  forecast::BacktestResult first;
  std::string first_csv;
  std::string second_csv;
};

std::string serialize(const forecast::BacktestResult& r) {
  std::ostringstream os;
  forecast::write_forecasts_csv(os, r.forecasts, "S");
  forecast::write_scores_csv(os, r.scores, "S");
  forecast::write_hyper_paths_csv(os, r.hyper_paths);
  return os.str();
}

forecast::BacktestResult run_smoke() {
  const auto manifest = data::read_manifest(SUBVAR_MANIFEST_PATH);
  const auto table = sim::synthetic_macro(manifest, data::SizeClass::XL, 140, 2024);
  const auto panel = data::build_panel(data::join_manifest(table, manifest), data::SizeClass::S,
                                       {"GDPC1", "CPIAUCSL", "FEDFUNDS"}, table.dates);
  forecast::DrawBudget budget;  // 200 hyper draws x 10 parameter draws
  auto models = forecast::standard_models(budget);
  forecast::GridModelConfig forced;
  forced.name = "subVAR-Minn-omega0";
  forced.variant = prior::PriorVariant::Minnesota;
  forced.omega_grid = std::vector<double>{0.0};
  forced.budget = budget;
  models.push_back(std::make_shared<forecast::SubspaceForecastModel>(forced));
  forecast::BacktestOptions opt;
  opt.end = panel.T() - 5;
  opt.start = opt.end - 7;
  opt.seed = 8;
  return forecast::recursive_backtest(panel, models, opt);
}

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  report(1, "convex-combination identity (M=5, T=200, p=1, all omega, q in {1,2,3})", [] {
    const auto rd = data::build_lag_matrix(fixture::stable_var(5, 201, 1, 101), 1);
    double worst = 0.0;
    for (double omega : hyper::default_omega_grid())
      for (int q : {1, 2, 3})
        worst = std::max(worst, engine::convex_combination_check(rd, omega, q));
    return Outcome{worst <= 1e-8, fmt("max discrepancy %.3g <= 1e-08", worst)};
  });

  report(2, "scalar marginal likelihood vs quadrature and predictive decomposition", [] {
    double worst_quad = 0.0, worst_seq = 0.0;
    for (int T : {4, 8, 12}) {
      oracle::ScalarModel m;
      const Matrix noise = fixture::noise(T, 2, 200 + T);
      for (int t = 0; t < T; ++t) {
        m.x.push_back(1.0 + 0.5 * noise(t, 0));
        m.y.push_back(0.6 * m.x.back() + noise(t, 1));
      }
      m.prec0 = 1.0;
      m.nu0 = 3.0;
      m.scale0 = 1.0;
      prior::ConjugatePrior p;
      p.mean = Matrix::Zero(1, 1);
      p.precision = Matrix::Constant(1, 1, m.prec0);
      p.dof = m.nu0;
      p.scale = Matrix::Constant(1, 1, m.scale0);
      data::RegressionData rd;
      rd.Y.resize(T, 1);
      rd.X.resize(T, 1);
      for (int t = 0; t < T; ++t) {
        rd.Y(t, 0) = m.y[static_cast<std::size_t>(t)];
        rd.X(t, 0) = m.x[static_cast<std::size_t>(t)];
      }
      const double ml = engine::log_marginal_likelihood(p, rd);
      worst_quad = std::max(worst_quad, std::abs(ml - oracle::scalar_evidence_quadrature(m)));
      worst_seq = std::max(worst_seq, std::abs(ml - oracle::scalar_evidence_sequential(m)));
    }
    return Outcome{worst_quad <= 1e-6 && worst_seq <= 1e-8,
                   fmt("quadrature gap %.3g <= 1e-06, predictive gap %.3g <= 1e-08", worst_quad,
                       worst_seq)};
  });

  Smoke smoke;
  bool smoke_ok = true;
  std::string smoke_error;
  const auto s0 = std::chrono::steady_clock::now();
  try {
    smoke.first = run_smoke();
    smoke.first_csv = serialize(smoke.first);
    smoke.second_csv = serialize(run_smoke());
  } catch (const std::exception& e) {
    smoke_ok = false;
    smoke_error = e.what();
  }
  const double smoke_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();

  report(3, "Minnesota equivalence at omega = 0 (posterior moments and ScoreTable)", [&] {
    const auto rd = data::build_lag_matrix(fixture::stable_var(6, 150, 2, 301), 2);
    const forecast::MinnesotaBvar bvar(rd);
    const hyper::SubspaceVar sub(rd, prior::PriorVariant::Minnesota, {}, 3);
    double moments = 0.0;
    for (double theta : hyper::default_theta_grid()) {
      const hyper::HyperPoint pt{1, 0.0, theta};
      const auto a = bvar.posterior_at(pt);
      const auto b = sub.posterior_at(pt);
      moments = std::max({moments, max_abs(a.mean - b.mean),
                          max_abs(a.covariance() - b.covariance()), max_abs(a.scale - b.scale),
                          std::abs(a.dof - b.dof)});
    }
    if (!smoke_ok) return Outcome{false, "smoke backtest failed: " + smoke_error};
    double table = 0.0;
    int matched = 0;
    for (const auto& row : smoke.first.scores)
      if (row.model == "subVAR-Minn-omega0") {
        table = std::max({table, std::abs(row.rmsfe_ratio - 1.0), std::abs(row.lpl_diff)});
        ++matched;
      }
    return Outcome{moments <= 1e-10 && table <= 1e-10 && matched == 6,
                   fmt("moments gap %.3g <= 1e-10, ScoreTable gap %.3g <= 1e-10", moments, table)};
  });

  report(4, "factor recovery (M=10, T=500, 20 replications, four variants)", [] {
    sim::ReplicationConfig cfg;
    cfg.M_list = {10};
    cfg.q_list = {1, 3};
    cfg.n_reps = 20;
    cfg.T = 500;
    cfg.p = 1;
    cfg.seed = 404;
    const auto cells = sim::replication_study(cfg);
    bool ok = true;
    std::string detail;
    for (const auto& c : cells) {
      const double lo = c.q_true == 1 ? 1.0 : 2.6;
      const double hi = c.q_true == 1 ? 1.4 : 3.4;
      ok &= c.mean_median_q >= lo && c.mean_median_q <= hi;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s%s q=%d %.2f in [%.1f, %.1f]", detail.empty() ? "" : "; ",
                    c.variant.c_str(), c.q_true, c.mean_median_q, lo, hi);
      detail += buf;
    }
    return Outcome{ok, detail};
  });

  report(5, "approximation error (M=30, T=250, q=3)", [] {
    sim::DgpSpec spec;
    spec.M = 30;
    spec.q_true = 3;
    spec.T = 251;
    spec.seed = 505;
    const auto rd = data::build_lag_matrix(sim::simulate_dgp(spec).data, 1);
    const std::vector<double> thetas{0.2, 0.3, 0.4, 0.5, 2.0, 3.0, 4.0, 5.0};
    const auto omegas = hyper::default_omega_grid();
    const auto surf = sim::approx_error_surface(rd, thetas, omegas, 3);
    const double worst_log = surf.log_xi.maxCoeff();
    const double worst_small = std::exp(surf.log_xi.col(0).maxCoeff());
    const auto tight = sim::approx_error_surface(rd, {0.001, 0.01, 0.025, 0.05, 0.1}, {0.01}, 3);
    std::string info = "; unasserted omega=0.01 Xi for theta 0.001..0.1:";
    for (Index r = 0; r < tight.log_xi.rows(); ++r) info += fmt(" %.2g", std::exp(tight.log_xi(r, 0)));
    return Outcome{worst_log < -8.0 && worst_small < 1e-6,
                   fmt("max log Xi %.3f < -8, max Xi at omega=0.01 %.3g < 1e-06", worst_log,
                       worst_small) +
                       info};
  });

  report(6, "forecast moments vs 1e5-path Monte Carlo (M=3, p=2, h in {1,4})", [] {
    engine::ParamDraw d;
    d.A = 0.15 * fixture::noise(7, 3, 601);
    for (Index j = 0; j < 3; ++j) d.A(j, j) += 0.4;
    const Matrix G = fixture::noise(3, 3, 602);
    d.Sigma = G * G.transpose() / 3.0 + 0.5 * Matrix::Identity(3, 3);
    Vector x = fixture::noise(7, 1, 603).col(0);
    x[6] = 1.0;
    double worst = 0.0;  // in standard errors
    for (int h : {1, 4}) {
      const auto exact = forecast::iterated_forecast_moments(d, x, h);
      const auto mc = oracle::simulate_paths(d, x, h, 100000, 610 + h);
      for (Index i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(mc.mean[i] - exact.mean[i]) / mc.mean_se[i]);
        for (Index j = 0; j < 3; ++j)
          worst = std::max(worst, std::abs(mc.cov(i, j) - exact.cov(i, j)) / mc.cov_se(i, j));
      }
    }
    engine::ParamDraw ar;
    ar.A.resize(2, 1);
    ar.A << 0.5, 0.0;
    ar.Sigma = Matrix::Identity(1, 1);
    Vector x1(2);
    x1 << 1.0, 1.0;
    const double v = forecast::iterated_forecast_moments(ar, x1, 4).cov(0, 0);
    return Outcome{worst <= 3.0 && v == 1.328125,
                   fmt("worst gap %.2f SE <= 3, AR(1) h=4 variance %.17g == 1.328125", worst, v)};
  });

  report(7, "hyper-machinery oracles", [] {
    bool ledermann = true;
    for (int M = 1; M <= 500; ++M) ledermann &= hyper::ledermann_bound(M) == oracle::ledermann_enumerated(M);
    const auto g = hyper::gamma_from_mode_sd(0.2, 0.4);
    const double round_trip =
        std::max(std::abs((g.shape - 1.0) / g.rate - 0.2), std::abs(std::sqrt(g.shape) / g.rate - 0.4));
    hyper::HyperPriorConfig inf;
    inf.omega_prior = hyper::OmegaPrior::Informative;
    double beta_gap = 0.0;
    for (int M = 1; M <= 500; ++M) {
      const auto b = hyper::omega_beta(inf, M);
      beta_gap = std::max(beta_gap, std::abs(b.a / (b.a + b.b) - 8.0 / 14.0));
    }
    std::vector<hyper::HyperPoint> grid(40);
    std::vector<double> scores(40), shifted(40);
    for (std::size_t i = 0; i < 40; ++i) {
      grid[i].q = static_cast<int>(i % 6) + 1;
      // dyadic values keep the shifted scores exact in double precision
      const double raw = -0.37 * static_cast<double>(i) + std::sin(static_cast<double>(i));
      scores[i] = std::ldexp(std::round(std::ldexp(raw, 30)), -30);
      shifted[i] = scores[i] - 5432.125;
    }
    const auto w0 = hyper::hyper_posterior_weights(grid, scores);
    const auto w1 = hyper::hyper_posterior_weights(grid, shifted);
    double shift_gap = 0.0;
    for (std::size_t i = 0; i < 40; ++i) shift_gap = std::max(shift_gap, std::abs(w0[i].weight - w1[i].weight));
    const bool ok = ledermann && round_trip <= 1e-10 && beta_gap <= 1e-15 && shift_gap <= 1e-14;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "Ledermann M=1..500 %s, gamma round trip %.3g <= 1e-10, Beta mean gap %.3g, "
                  "softmax shift gap %.3g <= 1e-14",
                  ledermann ? "matches" : "MISMATCH", round_trip, beta_gap, shift_gap);
    return Outcome{ok, buf};
  });

  report(8, "smoke backtest (size S, 8 origins, h in {1,4}, six models)", [&] {
    if (!smoke_ok) return Outcome{false, "exception: " + smoke_error};
    std::set<std::string> models;
    std::size_t origins = 0;
    for (const auto& r : smoke.first.forecasts) {
      models.insert(r.model);
      if (r.model == "BVAR" && r.horizon == 1 && r.variable == "GDPC1") ++origins;
    }
    bool finite = true;
    for (const auto& r : smoke.first.forecasts) finite &= std::isfinite(r.lpl) && std::isfinite(r.point);
    double bench = 0.0;
    for (const auto& row : smoke.first.scores)
      if (row.model == "BVAR") bench = std::max({bench, std::abs(row.rmsfe_ratio - 1.0), std::abs(row.lpl_diff)});
    const bool identical = smoke.first_csv == smoke.second_csv;
    const bool ok = identical && finite && origins == 8 && models.size() == 7 && bench == 0.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%zu model runs (six plus the omega=0 run), %zu origins, rerun %s, "
                  "benchmark self-gap %.3g; two runs took %.1f s",
                  models.size(), origins, identical ? "bit-identical" : "DIFFERS", bench,
                  smoke_secs);
    return Outcome{ok, buf};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
