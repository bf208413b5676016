#include "subvar/hyper/model.hpp"

#include <set>
#include <string>

#include "subvar/engine/evidence.hpp"
#include "subvar/errors.hpp"
#include "subvar/hyper/bic.hpp"
#include "subvar/hyper/weights.hpp"
#include "subvar/parallel.hpp"

namespace subvar::hyper {

SelectionMode parse_selection(std::string_view text) {
  if (text == "ml" || text == "ML") return SelectionMode::ML;
  if (text == "bic" || text == "BIC") return SelectionMode::BIC;
  throw ConfigError("unknown selection mode '" + std::string(text) + "' (ml|bic)");
}

const char* to_string(SelectionMode mode) { return mode == SelectionMode::ML ? "ml" : "bic"; }

double ScoredModel::score(const HyperPoint& point, SelectionMode mode) const {
  if (mode == SelectionMode::ML) return log_evidence(point);
  const auto f = focus();
  return -0.5 * bic_from_posterior(posterior_at(point), stats(), f).bic;
}

std::vector<HyperPoint> ScoredModel::score_grid(std::vector<HyperPoint> grid,
                                                const HyperPriorConfig& config,
                                                const ScoringOptions& options) const {
  std::set<int> qs;
  for (const auto& pt : grid) qs.insert(pt.q);
  const int q_count = static_cast<int>(qs.size());
  const int m = static_cast<int>(M());
  for (auto& pt : grid) pt.log_prior = hyper_log_prior(pt, config, m, q_count);

  std::vector<double> scores(grid.size());
  parallel_for(grid.size(), options.threads,
               [&](std::size_t i) { scores[i] = score(grid[i], options.mode); });
  grid = hyper_posterior_weights(std::move(grid), scores);
  if (options.point_select) select_point(grid);
  return grid;
}

SubspaceVar::SubspaceVar(data::RegressionData data, prior::PriorVariant variant,
                         prior::MinnesotaSettings settings, int max_q,
                         std::array<std::size_t, 3> focus)
    : data_(std::move(data)),
      builder_(data_, variant, std::move(settings), max_q),
      stats_(engine::CrossProducts::from(data_)),
      focus_(focus) {
  for (std::size_t j : focus_)
    if (static_cast<Index>(j) >= data_.M()) throw ArgumentError("focus index out of range");
}

prior::ConjugatePrior SubspaceVar::prior_at(const HyperPoint& point) const {
  return builder_.build(point.omega, point.q, point.theta);
}

engine::Posterior SubspaceVar::posterior_at(const HyperPoint& point) const {
  return engine::posterior_moments(prior_at(point), stats_);
}

double SubspaceVar::log_evidence(const HyperPoint& point) const {
  const auto prior = prior_at(point);
  return engine::log_marginal_likelihood(prior, engine::posterior_moments(prior, stats_),
                                         stats_.T);
}

}  // namespace subvar::hyper
