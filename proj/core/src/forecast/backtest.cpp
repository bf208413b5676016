#include "subvar/forecast/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "subvar/csv.hpp"
#include "subvar/data/regression.hpp"
#include "subvar/errors.hpp"
#include "subvar/forecast/baselines.hpp"
#include "subvar/hyper/grid.hpp"
#include "subvar/parallel.hpp"
#include "subvar/random.hpp"

namespace subvar::forecast {

namespace {

Vector to_vector(const std::vector<double>& v) {
  Vector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Index>(i)] = v[i];
  return out;
}

OriginForecast run_grid(const hyper::ScoredModel& model, std::vector<hyper::HyperPoint> grid,
                        const hyper::HyperPriorConfig& hyper, const hyper::ScoringOptions& scoring,
                        const DrawBudget& budget, const Matrix& series, int p,
                        const Targets& targets, std::uint64_t seed) {
  const auto scored = model.score_grid(std::move(grid), hyper, scoring);
  const Vector x_T = data::forecast_state(series, p);
  OriginForecast out;
  out.results = forecast_with_hyper_uncertainty(model, scored, x_T, targets.horizons,
                                                targets.realized, budget, seed);
  for (auto& r : out.results) r.origin = series.rows();
  out.hyper = hyper::posterior_summary_q(scored);
  return out;
}

}  // namespace

SubspaceForecastModel::SubspaceForecastModel(GridModelConfig config) : config_(std::move(config)) {
  if (config_.p < 1) throw ConfigError("lag order must be at least 1");
}

OriginForecast SubspaceForecastModel::forecast(const data::PanelData& estimation,
                                               const Targets& targets, std::uint64_t seed) const {
  auto rd = data::build_lag_matrix(estimation, config_.p);
  const int M = static_cast<int>(rd.M());
  auto axes = hyper::default_axes(config_.hyper, M);
  if (config_.omega_grid) axes.omega = *config_.omega_grid;
  if (config_.theta_grid) axes.theta = *config_.theta_grid;
  if (config_.q_grid) axes.q = *config_.q_grid;
  // With every ω at zero the prior does not depend on q.
  if (std::all_of(axes.omega.begin(), axes.omega.end(), [](double w) { return w == 0.0; }))
    axes.q = {1};
  const int max_q = *std::max_element(axes.q.begin(), axes.q.end());

  prior::MinnesotaSettings settings{config_.kappa, to_vector(estimation.prior_means)};
  const hyper::SubspaceVar model(std::move(rd), config_.variant, std::move(settings), max_q,
                                 estimation.focus);
  return run_grid(model, hyper::build_grid(axes, config_.variant), config_.hyper, config_.scoring,
                  config_.budget, estimation.data, config_.p, targets, seed);
}

BvarForecastModel::BvarForecastModel(std::string name, hyper::HyperPriorConfig hyper,
                                     std::vector<double> theta_grid, DrawBudget budget, int p,
                                     double kappa, hyper::ScoringOptions scoring)
    : name_(std::move(name)),
      hyper_(hyper),
      thetas_(std::move(theta_grid)),
      budget_(budget),
      p_(p),
      kappa_(kappa),
      scoring_(scoring) {}

OriginForecast BvarForecastModel::forecast(const data::PanelData& estimation,
                                           const Targets& targets, std::uint64_t seed) const {
  const MinnesotaBvar model(data::build_lag_matrix(estimation, p_),
                            to_vector(estimation.prior_means), kappa_, estimation.focus);
  return run_grid(model, bvar_grid(thetas_), hyper_, scoring_, budget_, estimation.data, p_,
                  targets, seed);
}

DfmForecastModel::DfmForecastModel(std::string name, DrawBudget budget, int p, double kappa)
    : name_(std::move(name)), budget_(budget), p_(p), kappa_(kappa) {}

OriginForecast DfmForecastModel::forecast(const data::PanelData& estimation,
                                          const Targets& targets, std::uint64_t seed) const {
  const DfmSpec spec = dfm_baseline_spec(estimation, estimation.focus, p_);
  const MinnesotaBvar model(data::build_lag_matrix(spec.panel, p_), {}, kappa_, {0, 1, 2});
  auto out = run_grid(model, bvar_grid({kDfmTheta}), hyper::HyperPriorConfig{},
                      hyper::ScoringOptions{}, budget_, spec.panel.data, p_, targets, seed);
  out.hyper.reset();
  return out;
}

std::vector<std::shared_ptr<const ForecastModel>> standard_models(const DrawBudget& budget,
                                                                  hyper::SelectionMode mode,
                                                                  int p) {
  std::vector<std::shared_ptr<const ForecastModel>> models;
  hyper::ScoringOptions scoring;
  scoring.mode = mode;
  scoring.threads = budget.threads;
  const std::pair<const char*, prior::PriorVariant> variants[] = {
      {"subVAR-Minn", prior::PriorVariant::Minnesota}, {"subVAR-Flat", prior::PriorVariant::Flat}};
  for (const auto& [label, variant] : variants)
    for (auto omega_prior : {hyper::OmegaPrior::Flat, hyper::OmegaPrior::Informative}) {
      GridModelConfig cfg;
      cfg.name = std::string(label) + (omega_prior == hyper::OmegaPrior::Flat ? "0" : "1");
      cfg.variant = variant;
      cfg.hyper.omega_prior = omega_prior;
      cfg.scoring = scoring;
      cfg.budget = budget;
      cfg.p = p;
      models.push_back(std::make_shared<SubspaceForecastModel>(cfg));
    }
  models.push_back(std::make_shared<BvarForecastModel>(
      "BVAR", hyper::HyperPriorConfig{}, hyper::default_theta_grid(), budget, p, 0.001, scoring));
  models.push_back(std::make_shared<DfmForecastModel>("DFM", budget, p));
  return models;
}

BacktestResult recursive_backtest(const data::PanelData& panel,
                                  const std::vector<std::shared_ptr<const ForecastModel>>& models,
                                  const BacktestOptions& options) {
  if (models.empty()) throw ConfigError("backtest needs at least one model");
  if (options.horizons.empty()) throw ConfigError("backtest needs at least one horizon");
  const int h_max = *std::max_element(options.horizons.begin(), options.horizons.end());
  if (*std::min_element(options.horizons.begin(), options.horizons.end()) < 1)
    throw ConfigError("forecast horizons must be positive");
  if (options.start < options.min_window)
    throw ConfigError("first estimation window has " + std::to_string(options.start) +
                      " observations, need at least " + std::to_string(options.min_window));
  if (options.end < options.start) throw ConfigError("backtest end precedes start");
  if (options.end + h_max > panel.T())
    throw ConfigError("last origin plus horizon " + std::to_string(h_max) +
                      " runs past the sample (" + std::to_string(panel.T()) + " rows)");
  bool has_benchmark = false;
  for (const auto& m : models) has_benchmark |= m->name() == options.benchmark;
  if (!has_benchmark) throw ConfigError("benchmark model '" + options.benchmark + "' not found");

  const std::size_t n_origins = static_cast<std::size_t>(options.end - options.start + 1);
  const std::size_t n_tasks = n_origins * models.size();
  std::vector<OriginForecast> slots(n_tasks);
  parallel_for(n_tasks, options.threads, [&](std::size_t task) {
    const std::size_t mi = task / n_origins;
    const Index origin = options.start + static_cast<Index>(task % n_origins);
    Targets targets;
    targets.horizons = options.horizons;
    for (int h : options.horizons) {
      Vector y(3);
      for (int k = 0; k < 3; ++k)
        y[k] = panel.data(origin + h - 1, static_cast<Index>(panel.focus[static_cast<std::size_t>(k)]));
      targets.realized.push_back(y);
    }
    const std::uint64_t seed =
        derive_seed(options.seed, "backtest-origin", static_cast<std::uint64_t>(origin));
    slots[task] = models[mi]->forecast(panel.head(origin), targets, seed);
  });

  auto date_of = [&](Index origin) {
    const auto row = static_cast<std::size_t>(origin - 1);
    return row < panel.dates.size() ? panel.dates[row] : std::to_string(origin);
  };

  BacktestResult result;
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const std::string name = models[mi]->name();
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t hi = 0; hi < options.horizons.size(); ++hi)
        for (std::size_t oi = 0; oi < n_origins; ++oi) {
          const auto& fr = slots[mi * n_origins + oi].results.at(hi);
          const Index origin = options.start + static_cast<Index>(oi);
          ForecastRecord rec;
          rec.model = name;
          rec.variable = panel.names[panel.focus[k]];
          rec.horizon = options.horizons[hi];
          rec.origin = origin;
          rec.origin_date = date_of(origin);
          rec.point = fr.point[static_cast<Index>(k)];
          rec.realized = panel.data(origin + rec.horizon - 1, static_cast<Index>(panel.focus[k]));
          rec.lpl = fr.lpl[static_cast<Index>(k)];
          result.forecasts.push_back(rec);
        }
    for (std::size_t oi = 0; oi < n_origins; ++oi) {
      const auto& slot = slots[mi * n_origins + oi];
      if (slot.hyper)
        result.hyper_paths.push_back(
            {name, date_of(options.start + static_cast<Index>(oi)), *slot.hyper});
    }
  }
  result.scores = score_table(result.forecasts, options.benchmark);
  return result;
}

std::vector<ScoreRow> score_table(const std::vector<ForecastRecord>& forecasts,
                                  const std::string& benchmark) {
  struct Acc {
    double sq = 0.0;
    double lpl = 0.0;
    int n = 0;
  };
  using Key = std::tuple<std::string, std::string, int>;
  std::map<Key, Acc> acc;
  std::vector<Key> order;
  for (const auto& r : forecasts) {
    const Key key{r.model, r.variable, r.horizon};
    auto [it, fresh] = acc.try_emplace(key);
    if (fresh) order.push_back(key);
    const double e = r.point - r.realized;
    it->second.sq += e * e;
    it->second.lpl += r.lpl;
    ++it->second.n;
  }
  std::vector<ScoreRow> rows;
  for (const auto& key : order) {
    const auto& [model, variable, horizon] = key;
    const auto bench = acc.find(Key{benchmark, variable, horizon});
    if (bench == acc.end()) throw ConfigError("benchmark '" + benchmark + "' has no forecasts");
    const auto& a = acc.at(key);
    ScoreRow row;
    row.model = model;
    row.variable = variable;
    row.horizon = horizon;
    row.rmsfe = std::sqrt(a.sq / a.n);
    row.mean_lpl = a.lpl / a.n;
    row.benchmark_rmsfe = std::sqrt(bench->second.sq / bench->second.n);
    row.benchmark_lpl = bench->second.lpl / bench->second.n;
    row.rmsfe_ratio = row.rmsfe / row.benchmark_rmsfe;
    row.lpl_diff = row.mean_lpl - row.benchmark_lpl;
    rows.push_back(row);
  }
  return rows;
}

void write_forecasts_csv(std::ostream& out, const std::vector<ForecastRecord>& rows,
                         const std::string& size) {
  write_csv_row(out, {"model", "size", "variable", "horizon", "origin_date", "point", "realized",
                      "lpl"});
  for (const auto& r : rows)
    write_csv_row(out, {r.model, size, r.variable, std::to_string(r.horizon), r.origin_date,
                        format_double(r.point), format_double(r.realized), format_double(r.lpl)});
}

void write_scores_csv(std::ostream& out, const std::vector<ScoreRow>& rows,
                      const std::string& size) {
  write_csv_row(out, {"model", "size", "variable", "horizon", "rmsfe_ratio", "lpl_diff", "rmsfe",
                      "mean_lpl", "benchmark_rmsfe", "benchmark_lpl"});
  for (const auto& r : rows)
    write_csv_row(out, {r.model, size, r.variable, std::to_string(r.horizon),
                        format_double(r.rmsfe_ratio), format_double(r.lpl_diff),
                        format_double(r.rmsfe), format_double(r.mean_lpl),
                        format_double(r.benchmark_rmsfe), format_double(r.benchmark_lpl)});
}

void write_hyper_paths_csv(std::ostream& out, const std::vector<HyperPathRecord>& rows) {
  write_csv_row(out, {"model", "origin_date", "mean_q", "median_q", "mean_omega", "mean_theta"});
  for (const auto& r : rows)
    write_csv_row(out, {r.model, r.origin_date, format_double(r.summary.mean_q),
                        std::to_string(r.summary.median_q), format_double(r.summary.mean_omega),
                        r.summary.mean_theta ? format_double(*r.summary.mean_theta) : ""});
}

}  // namespace subvar::forecast
