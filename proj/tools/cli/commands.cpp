#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "subvar/data/io.hpp"
#include "subvar/data/regression.hpp"
#include "subvar/errors.hpp"
#include "subvar/forecast/backtest.hpp"
#include "subvar/hyper/model.hpp"
#include "subvar/hyper/weights.hpp"
#include "subvar/sim/approx_error.hpp"
#include "subvar/sim/dgp.hpp"
#include "subvar/sim/replication.hpp"
#include "subvar/sim/synthetic_macro.hpp"

#ifndef SUBVAR_DEFAULT_MANIFEST
#define SUBVAR_DEFAULT_MANIFEST ""
#endif

namespace subvar::cli {
namespace {

using Strings = std::vector<std::string>;

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

data::FocusCodes focus_codes(const RunConfig& cfg, const Strings& fallback) {
  auto codes = cfg.get<Strings>("focus");
  if (codes.empty()) codes = fallback;
  if (codes.size() != 3) throw ConfigError("exactly three focus codes are required");
  return {codes[0], codes[1], codes[2]};
}

void add_data_options(RunConfig& cfg, const std::string& manifest_default) {
  cfg.add<std::string>("data", "", "data CSV (codes row, tcode row, dated rows)");
  cfg.add<std::string>("manifest", manifest_default, "manifest JSON with tcodes and size classes");
  cfg.add<std::string>("size", "S", "size class S|M|L|XL");
  cfg.add<Strings>("focus", {}, "three focus codes");
}

struct LoadedData {
  data::RawTable table;
  std::vector<data::RawSeries> series;
  bool synthetic = false;
};

LoadedData load_raw(const RunConfig& cfg, int synthetic_T = 0) {
  LoadedData out;
  const auto path = cfg.get<std::string>("data");
  const auto manifest_path = cfg.get<std::string>("manifest");
  std::vector<data::ManifestEntry> manifest;
  if (!manifest_path.empty()) manifest = data::read_manifest(manifest_path);
  if (path.empty()) {
    if (synthetic_T == 0) throw ConfigError("--data is required");
    if (manifest.empty()) throw ConfigError("a manifest is needed to synthesize data");
    out.table = sim::synthetic_macro(manifest, data::SizeClass::XL, synthetic_T,
                                     cfg.get<std::uint64_t>("seed"));
    out.synthetic = true;
  } else {
    out.table = data::read_data_csv(std::filesystem::path(path));
  }
  out.series = manifest.empty() ? data::series_from_table(out.table)
                                : data::join_manifest(out.table, manifest);
  return out;
}

data::PanelData load_panel(const RunConfig& cfg, int synthetic_T = 0) {
  const auto raw = load_raw(cfg, synthetic_T);
  const auto size = data::parse_size_class(cfg.get<std::string>("size"));
  Strings fallback;
  if (!cfg.get<std::string>("manifest").empty()) {
    fallback = {"GDPC1", "CPIAUCSL", "FEDFUNDS"};
  } else {
    for (const auto& s : raw.series)
      if (fallback.size() < 3) fallback.push_back(s.code);
  }
  return data::build_panel(raw.series, size, focus_codes(cfg, fallback), raw.table.dates);
}

void add_grid_options(RunConfig& cfg) {
  cfg.add<std::string>("omega-prior", "flat", "omega hyper-prior flat|informative");
  cfg.add<std::vector<double>>("omega-grid", {}, "omega grid (default 0.01..0.96 by 0.05, 0.99)");
  cfg.add<std::vector<double>>("theta-grid", {}, "Minnesota tightness grid");
  cfg.add<std::vector<int>>("q-grid", {}, "factor counts (default 1..min(10, Ledermann bound))");
  cfg.add<double>("theta-mode", 0.2, "Gamma prior mode for theta");
  cfg.add<double>("theta-sd", 0.4, "Gamma prior sd for theta");
  cfg.add<double>("kappa", 0.001, "intercept tightness");
  cfg.add<std::string>("selection", "ML", "grid scoring ML|BIC");
}

hyper::HyperPriorConfig hyper_config(const RunConfig& cfg) {
  hyper::HyperPriorConfig h;
  h.omega_prior = hyper::parse_omega_prior(cfg.get<std::string>("omega-prior"));
  h.theta_mode = cfg.get<double>("theta-mode");
  h.theta_sd = cfg.get<double>("theta-sd");
  return h;
}

bool all_zero(const std::vector<double>& v) {
  return !v.empty() && std::all_of(v.begin(), v.end(), [](double w) { return w == 0.0; });
}

Index parse_origin(const std::string& text, const data::PanelData& panel, Index fallback) {
  if (text.empty()) return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(text.c_str(), &end, 10);
  if (end != text.c_str() && *end == '\0') return static_cast<Index>(v);
  // A date names the last observation of the estimation window.
  const auto it = std::find(panel.dates.begin(), panel.dates.end(), text);
  if (it == panel.dates.end()) throw ConfigError("origin date '" + text + "' not in panel");
  return static_cast<Index>(it - panel.dates.begin()) + 1;
}

template <typename Writer>
void write_csv(const RunConfig& cfg, const std::string& name, const Metadata& extra,
               Writer&& writer) {
  auto out = open_output(cfg.output_dir(), name);
  write_metadata_header(out, cfg.metadata(extra));
  writer(out);
  if (!out) throw IoError("write failed for " + name);
}

Command finish(CLI::App* app, std::unique_ptr<RunConfig> cfg,
               std::function<void(const RunConfig&)> run) {
  Command c;
  c.app = app;
  c.config = std::move(cfg);
  c.run = std::move(run);
  return c;
}

}  // namespace

Command make_simulate(CLI::App& root) {
  auto* app = root.add_subcommand("simulate", "synthetic factor-driven VAR panel plus ground truth");
  auto cfg = std::make_unique<RunConfig>(app, "simulate");
  cfg->add<int>("M", 10, "number of series");
  cfg->add<int>("q", 3, "true number of factors");
  cfg->add<int>("T", 500, "number of periods");
  return finish(app, std::move(cfg), [](const RunConfig& c) {
    sim::DgpSpec spec;
    spec.M = c.get<int>("M");
    spec.q_true = c.get<int>("q");
    spec.T = c.get<int>("T");
    spec.seed = c.get<std::uint64_t>("seed");
    const auto panel = sim::simulate_dgp(spec);

    Strings codes;
    for (int i = 1; i <= spec.M; ++i) codes.push_back("y" + std::to_string(i));
    write_csv(c, "panel.csv", {}, [&](std::ostream& out) {
      data::write_data_csv(out, codes, std::vector<int>(codes.size(), 1),
                           data::quarterly_dates(1960, static_cast<std::size_t>(spec.T)),
                           panel.data);
    });
    json truth = {{"metadata", c.metadata_json()},
                  {"M", spec.M},
                  {"T", spec.T},
                  {"q_true", spec.q_true},
                  {"seed", spec.seed},
                  {"loadings", matrix_json(panel.loadings)},
                  {"A0_inv", matrix_json(panel.A0_inv)},
                  {"factor_innovation_cov", matrix_json(panel.omega)}};
    write_json(c.output_dir(), "truth.json", truth);
  });
}

Command make_fit(CLI::App& root) {
  auto* app = root.add_subcommand("fit", "score the (q, omega, theta) grid on one panel");
  auto cfg = std::make_unique<RunConfig>(app, "fit");
  add_data_options(*cfg, "");
  cfg->add<int>("p", 2, "lag length");
  cfg->add<std::string>("variant", "minn", "prior variant minn|flat");
  add_grid_options(*cfg);
  cfg->add_flag("point-select", "put all weight on the best grid point");
  return finish(app, std::move(cfg), [](const RunConfig& c) {
    const auto panel = load_panel(c);
    const int p = c.get<int>("p");
    if (p < 1) throw ArgumentError("p must be at least 1");
    const auto variant = prior::parse_variant(c.get<std::string>("variant"));
    const auto hyper_cfg = hyper_config(c);
    const int M = static_cast<int>(panel.M());

    auto axes = hyper::default_axes(hyper_cfg, M);
    if (c.has_value("omega-grid")) axes.omega = c.get<std::vector<double>>("omega-grid");
    if (c.has_value("theta-grid")) axes.theta = c.get<std::vector<double>>("theta-grid");
    if (c.has_value("q-grid")) axes.q = c.get<std::vector<int>>("q-grid");
    const bool omega_zero = all_zero(axes.omega);
    if (omega_zero) axes.q = {1};
    if (axes.q.empty() || axes.omega.empty()) throw ConfigError("empty hyperparameter grid");

    prior::MinnesotaSettings settings;
    settings.kappa = c.get<double>("kappa");
    settings.prior_mean = Eigen::Map<const Vector>(panel.prior_means.data(),
                                                   static_cast<Index>(panel.prior_means.size()));
    const hyper::SubspaceVar model(data::build_lag_matrix(panel, p), variant, settings,
                                   *std::max_element(axes.q.begin(), axes.q.end()), panel.focus);
    hyper::ScoringOptions scoring;
    scoring.mode = hyper::parse_selection(c.get<std::string>("selection"));
    scoring.point_select = c.get<bool>("point-select");
    scoring.threads = c.threads();
    const auto grid = model.score_grid(hyper::build_grid(axes, variant), hyper_cfg, scoring);
    const auto summary = hyper::posterior_summary_q(grid);

    Metadata extra{{"selection", hyper::to_string(scoring.mode)}};
    if (scoring.mode == hyper::SelectionMode::BIC) extra.emplace_back("bic_k_eff", kBicConvention);
    write_csv(c, "grid.csv", extra, [&](std::ostream& out) { hyper::write_grid_csv(out, grid); });

    json s = {{"metadata", c.metadata_json(extra)},
              {"variant", prior::to_string(variant)},
              {"selection", hyper::to_string(scoring.mode)},
              {"grid_points", grid.size()},
              {"median_q", summary.median_q},
              {"mean_q", summary.mean_q},
              {"mean_omega", summary.mean_omega},
              {"mean_theta", summary.mean_theta ? json(*summary.mean_theta) : json(nullptr)},
              {"benchmark_equivalent", omega_zero && variant == prior::PriorVariant::Minnesota},
              {"T", panel.T()},
              {"M", panel.M()},
              {"p", p}};
    if (scoring.mode == hyper::SelectionMode::BIC) s["bic_k_eff"] = kBicConvention;
    write_json(c.output_dir(), "summary.json", s);
  });
}

Command make_backtest(CLI::App& root) {
  auto* app = root.add_subcommand("backtest", "recursive pseudo out-of-sample evaluation");
  auto cfg = std::make_unique<RunConfig>(app, "backtest");
  add_data_options(*cfg, SUBVAR_DEFAULT_MANIFEST);
  cfg->add<int>("p", 2, "lag length");
  cfg->add<std::string>("start", "", "first origin: row index or date of its last observation");
  cfg->add<std::string>("end", "", "last origin (inclusive), index or date");
  cfg->add<std::vector<int>>("horizons", {1, 4}, "forecast horizons");
  cfg->add<Strings>("models", {}, "subset of subVAR-Minn0,subVAR-Minn1,subVAR-Flat0,subVAR-Flat1,BVAR,DFM");
  cfg->add<std::string>("benchmark", "BVAR", "benchmark model for ratios");
  cfg->add_flag("omega-zero", "add a subVAR-Minn run with the omega grid forced to {0}");
  cfg->add<int>("n-hyper", 200, "hyperparameter draws per origin");
  cfg->add<int>("n-param", 10, "parameter draws per hyperparameter draw");
  cfg->add<std::string>("selection", "ML", "grid scoring ML|BIC");
  cfg->add<int>("min-window", 40, "shortest admissible estimation window");
  cfg->add<int>("synthetic-T", 140, "raw periods to synthesize when no --data is given");
  return finish(app, std::move(cfg), [](const RunConfig& c) {
    const auto panel = load_panel(c, c.get<int>("synthetic-T"));
    const int p = c.get<int>("p");
    if (p < 1) throw ArgumentError("p must be at least 1");
    forecast::DrawBudget budget;
    budget.n_hyper = c.get<int>("n-hyper");
    budget.n_param = c.get<int>("n-param");
    if (budget.n_hyper < 1 || budget.n_param < 1) throw ArgumentError("draw budgets must be >= 1");
    const auto mode = hyper::parse_selection(c.get<std::string>("selection"));

    auto all = forecast::standard_models(budget, mode, p);
    std::vector<std::shared_ptr<const forecast::ForecastModel>> models;
    const auto wanted = c.get<Strings>("models");
    if (wanted.empty()) {
      models = all;
    } else {
      for (const auto& name : wanted) {
        const auto it = std::find_if(all.begin(), all.end(),
                                     [&](const auto& m) { return m->name() == name; });
        if (it == all.end()) throw ConfigError("unknown model '" + name + "'");
        models.push_back(*it);
      }
    }
    if (c.get<bool>("omega-zero")) {
      forecast::GridModelConfig forced;
      forced.name = "subVAR-Minn-omega0";
      forced.variant = prior::PriorVariant::Minnesota;
      forced.omega_grid = std::vector<double>{0.0};
      forced.budget = budget;
      forced.scoring.mode = mode;
      forced.p = p;
      models.push_back(std::make_shared<forecast::SubspaceForecastModel>(forced));
    }

    forecast::BacktestOptions opt;
    opt.horizons = c.get<std::vector<int>>("horizons");
    if (opt.horizons.empty()) throw ConfigError("at least one horizon is required");
    const int h_max = *std::max_element(opt.horizons.begin(), opt.horizons.end());
    opt.end = parse_origin(c.get<std::string>("end"), panel, panel.T() - h_max);
    opt.start = parse_origin(c.get<std::string>("start"), panel, opt.end - 7);
    opt.seed = c.get<std::uint64_t>("seed");
    opt.benchmark = c.get<std::string>("benchmark");
    opt.threads = c.threads();
    opt.min_window = c.get<int>("min-window");
    const auto result = forecast::recursive_backtest(panel, models, opt);

    const std::string size = c.get<std::string>("size");
    const bool benchmark_only = models.size() == 1 && models[0]->name() == opt.benchmark;
    Metadata extra{{"selection", hyper::to_string(mode)},
                   {"data", c.get<std::string>("data").empty() ? "synthetic" : "file"}};
    if (mode == hyper::SelectionMode::BIC) extra.emplace_back("bic_k_eff", kBicConvention);
    write_csv(c, "forecasts.csv", extra, [&](std::ostream& out) {
      forecast::write_forecasts_csv(out, result.forecasts, size);
    });
    write_csv(c, "scores.csv", extra,
              [&](std::ostream& out) { forecast::write_scores_csv(out, result.scores, size); });
    write_csv(c, "hyper_paths.csv", extra,
              [&](std::ostream& out) { forecast::write_hyper_paths_csv(out, result.hyper_paths); });

    json names = json::array();
    for (const auto& m : models) names.push_back(m->name());
    json s = {{"metadata", c.metadata_json(extra)},
              {"models", names},
              {"benchmark", opt.benchmark},
              {"benchmark_only", benchmark_only},
              {"benchmark_equivalent_models",
               c.get<bool>("omega-zero") ? json::array({"subVAR-Minn-omega0"}) : json::array()},
              {"first_origin", opt.start},
              {"last_origin", opt.end},
              {"origins", opt.end - opt.start + 1},
              {"T", panel.T()},
              {"M", panel.M()}};
    if (!panel.dates.empty()) {
      s["first_origin_date"] = panel.dates[static_cast<std::size_t>(opt.start - 1)];
      s["last_origin_date"] = panel.dates[static_cast<std::size_t>(opt.end - 1)];
    }
    write_json(c.output_dir(), "summary.json", s);
  });
}

Command make_approx_error(CLI::App& root) {
  auto* app = root.add_subcommand("approx-error", "log approximation error surface over (theta, omega)");
  auto cfg = std::make_unique<RunConfig>(app, "approx-error");
  add_data_options(*cfg, "");
  cfg->add<int>("p", 1, "lag length");
  cfg->add<int>("q", 3, "number of factors in the subspace prior");
  cfg->add<std::vector<double>>("omega-grid", {}, "omega grid (default 0.01..0.96 by 0.05, 0.99)");
  cfg->add<std::vector<double>>("theta-grid", {}, "theta grid (default 13-point grid)");
  cfg->add<double>("kappa", 0.001, "intercept tightness");
  cfg->add<int>("M", 30, "series in the synthetic panel (no --data)");
  cfg->add<int>("q-dgp", 3, "true factors in the synthetic panel");
  cfg->add<int>("T", 250, "effective observations of the synthetic panel");
  return finish(app, std::move(cfg), [](const RunConfig& c) {
    const int p = c.get<int>("p");
    if (p < 1) throw ArgumentError("p must be at least 1");
    data::RegressionData rd;
    Vector prior_mean;
    if (c.get<std::string>("data").empty()) {
      sim::DgpSpec spec;
      spec.M = c.get<int>("M");
      spec.q_true = c.get<int>("q-dgp");
      spec.T = c.get<int>("T") + p;
      spec.seed = c.get<std::uint64_t>("seed");
      rd = data::build_lag_matrix(sim::simulate_dgp(spec).data, p);
    } else {
      const auto panel = load_panel(c);
      prior_mean = Eigen::Map<const Vector>(panel.prior_means.data(),
                                            static_cast<Index>(panel.prior_means.size()));
      rd = data::build_lag_matrix(panel, p);
    }
    auto thetas = c.get<std::vector<double>>("theta-grid");
    if (thetas.empty()) thetas = hyper::default_theta_grid();
    auto omegas = c.get<std::vector<double>>("omega-grid");
    if (omegas.empty()) omegas = hyper::default_omega_grid();
    const auto surface = sim::approx_error_surface(rd, thetas, omegas, c.get<int>("q"),
                                                   c.get<double>("kappa"), prior_mean, c.threads());
    write_csv(c, "approx_error.csv", {{"xi", "mean squared gap per observation and equation"}},
              [&](std::ostream& out) { sim::write_surface_csv(out, surface); });
  });
}

Command make_replicate_table1(CLI::App& root) {
  auto* app = root.add_subcommand("replicate-table1", "factor-recovery study on synthetic panels");
  auto cfg = std::make_unique<RunConfig>(app, "replicate-table1");
  cfg->add<std::vector<int>>("M-list", {10}, "panel widths");
  cfg->add<std::vector<int>>("q-list", {1, 3}, "true factor counts");
  cfg->add<int>("reps", 20, "replications per cell");
  cfg->add<int>("T", 500, "periods per panel");
  cfg->add<int>("p", 1, "lag length");
  cfg->add<Strings>("variants", {}, "subset of subVAR-Minn0,subVAR-Minn1,subVAR-Flat0,subVAR-Flat1");
  cfg->add<std::string>("selection", "ML", "grid scoring ML|BIC");
  return finish(app, std::move(cfg), [](const RunConfig& c) {
    sim::ReplicationConfig rc;
    rc.M_list = c.get<std::vector<int>>("M-list");
    rc.q_list = c.get<std::vector<int>>("q-list");
    rc.n_reps = c.get<int>("reps");
    rc.T = c.get<int>("T");
    rc.p = c.get<int>("p");
    rc.seed = c.get<std::uint64_t>("seed");
    rc.mode = hyper::parse_selection(c.get<std::string>("selection"));
    rc.threads = c.threads();
    if (rc.n_reps < 1) throw ArgumentError("reps must be at least 1");
    if (rc.M_list.empty() || rc.q_list.empty()) throw ConfigError("empty M or q list");
    const auto wanted = c.get<Strings>("variants");
    if (!wanted.empty()) {
      std::vector<sim::ReplicationVariant> chosen;
      for (const auto& name : wanted) {
        const auto it = std::find_if(rc.variants.begin(), rc.variants.end(),
                                     [&](const auto& v) { return v.name == name; });
        if (it == rc.variants.end()) throw ConfigError("unknown variant '" + name + "'");
        chosen.push_back(*it);
      }
      rc.variants = std::move(chosen);
    }
    const auto cells = sim::replication_study(rc);
    Metadata extra{{"selection", hyper::to_string(rc.mode)}};
    write_csv(c, "table1.csv", extra, [&](std::ostream& out) { sim::write_table1_csv(out, cells); });
    write_csv(c, "table1_long.csv", extra,
              [&](std::ostream& out) { sim::write_replication_long_csv(out, cells); });
  });
}

Command make_transform(CLI::App& root) {
  auto* app = root.add_subcommand("transform", "apply transform codes and write the balanced panel");
  auto cfg = std::make_unique<RunConfig>(app, "transform");
  add_data_options(*cfg, "");
  return finish(app, std::move(cfg), [](const RunConfig& c) {
    const auto raw = load_raw(c);
    const auto size = data::parse_size_class(c.get<std::string>("size"));
    Strings fallback;
    for (const auto& s : raw.series)
      if (s.in(size) && fallback.size() < 3) fallback.push_back(s.code);
    const auto panel = data::build_panel(raw.series, size, focus_codes(c, fallback), raw.table.dates);
    write_csv(c, "panel.csv", {{"transformed", "true"}}, [&](std::ostream& out) {
      data::write_data_csv(out, panel.names, std::vector<int>(panel.names.size(), 1), panel.dates,
                           panel.data);
    });
  });
}

}  // namespace subvar::cli
