#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subvar/data/panel.hpp"
#include "subvar/forecast/predictive.hpp"
#include "subvar/hyper/model.hpp"

namespace subvar::forecast {

/// What a model is asked to produce at one origin.
struct Targets {
  std::vector<int> horizons;
  std::vector<Vector> realized;  // focus values at each horizon
};

struct OriginForecast {
  std::vector<ForecastResult> results;  // one per horizon
  std::optional<hyper::HyperSummary> hyper;
};

class ForecastModel {
 public:
  virtual ~ForecastModel() = default;
  virtual std::string name() const = 0;
  /// Fit on `estimation` (rows before the origin) and forecast every target.
  virtual OriginForecast forecast(const data::PanelData& estimation, const Targets& targets,
                                  std::uint64_t seed) const = 0;
};

struct GridModelConfig {
  std::string name;
  prior::PriorVariant variant = prior::PriorVariant::Minnesota;
  hyper::HyperPriorConfig hyper;
  std::optional<std::vector<double>> omega_grid;
  std::optional<std::vector<double>> theta_grid;
  std::optional<std::vector<int>> q_grid;
  hyper::ScoringOptions scoring;
  DrawBudget budget;
  int p = 2;
  double kappa = 0.001;
};

/// subVAR: re-scores the (q, ω, ϑ) grid at every origin.
class SubspaceForecastModel final : public ForecastModel {
 public:
  explicit SubspaceForecastModel(GridModelConfig config);
  std::string name() const override { return config_.name; }
  OriginForecast forecast(const data::PanelData& estimation, const Targets& targets,
                          std::uint64_t seed) const override;
  const GridModelConfig& config() const { return config_; }

 private:
  GridModelConfig config_;
};

/// Dummy-observation Minnesota BVAR over the ϑ grid.
class BvarForecastModel final : public ForecastModel {
 public:
  BvarForecastModel(std::string name, hyper::HyperPriorConfig hyper,
                    std::vector<double> theta_grid, DrawBudget budget, int p = 2,
                    double kappa = 0.001, hyper::ScoringOptions scoring = {});
  std::string name() const override { return name_; }
  OriginForecast forecast(const data::PanelData& estimation, const Targets& targets,
                          std::uint64_t seed) const override;

 private:
  std::string name_;
  hyper::HyperPriorConfig hyper_;
  std::vector<double> thetas_;
  DrawBudget budget_;
  int p_;
  double kappa_;
  hyper::ScoringOptions scoring_;
};

/// FAVAR on focus series plus principal components, loose Minnesota prior.
class DfmForecastModel final : public ForecastModel {
 public:
  DfmForecastModel(std::string name, DrawBudget budget, int p = 2, double kappa = 0.001);
  std::string name() const override { return name_; }
  OriginForecast forecast(const data::PanelData& estimation, const Targets& targets,
                          std::uint64_t seed) const override;

 private:
  std::string name_;
  DrawBudget budget_;
  int p_;
  double kappa_;
};

/// The six models of the forecasting comparison: subVAR-Minn0/Minn1 and
/// subVAR-Flat0/Flat1 (flat or informative ω prior), BVAR and DFM.
std::vector<std::shared_ptr<const ForecastModel>> standard_models(
    const DrawBudget& budget, hyper::SelectionMode mode = hyper::SelectionMode::ML, int p = 2);

struct ForecastRecord {
  std::string model;
  std::string variable;
  int horizon = 1;
  std::string origin_date;
  Index origin = 0;
  double point = 0.0;
  double realized = 0.0;
  double lpl = 0.0;
};

struct HyperPathRecord {
  std::string model;
  std::string origin_date;
  hyper::HyperSummary summary;
};

struct ScoreRow {
  std::string model;
  std::string variable;
  int horizon = 1;
  double rmsfe = 0.0;
  double mean_lpl = 0.0;
  double rmsfe_ratio = 1.0;  // vs benchmark
  double lpl_diff = 0.0;     // vs benchmark
  double benchmark_rmsfe = 0.0;
  double benchmark_lpl = 0.0;
};

struct BacktestOptions {
  Index start = 0;  // first origin: rows [0, start) form the first estimation window
  Index end = 0;    // last origin, inclusive
  std::vector<int> horizons{1, 4};
  std::uint64_t seed = 0;
  std::string benchmark = "BVAR";
  unsigned threads = 1;
  Index min_window = 40;
};

struct BacktestResult {
  std::vector<ForecastRecord> forecasts;
  std::vector<HyperPathRecord> hyper_paths;
  std::vector<ScoreRow> scores;
};

/// Expanding-window pseudo out-of-sample evaluation.
///
/// Origin o in [start, end] estimates on rows [0, o) and forecasts row
/// o + h - 1 for every horizon h. Every model at origin o gets the seed
/// derive_seed(seed, "backtest-origin", o). Throws ConfigError when the
/// first window is shorter than min_window, the last target is beyond the
/// sample, or the benchmark is not among the models.
BacktestResult recursive_backtest(const data::PanelData& panel,
                                  const std::vector<std::shared_ptr<const ForecastModel>>& models,
                                  const BacktestOptions& options);

std::vector<ScoreRow> score_table(const std::vector<ForecastRecord>& forecasts,
                                  const std::string& benchmark);

void write_forecasts_csv(std::ostream& out, const std::vector<ForecastRecord>& rows,
                         const std::string& size);
void write_scores_csv(std::ostream& out, const std::vector<ScoreRow>& rows,
                      const std::string& size);
void write_hyper_paths_csv(std::ostream& out, const std::vector<HyperPathRecord>& rows);

}  // namespace subvar::forecast
