#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "subvar/forecast/moments.hpp"
#include "subvar/hyper/model.hpp"
#include "subvar/hyper/weights.hpp"

namespace subvar::forecast {

struct DrawsMeta {
  int n_param_draws = 0;
  int n_hyper_draws = 0;
  std::uint64_t seed = 0;
};

struct ForecastResult {
  Index origin = 0;
  int horizon = 1;
  Vector point;  // per focus variable
  Vector lpl;    // per focus variable
  DrawsMeta draws_meta;
};

/// Pools conditional Gaussians into an equally weighted mixture per focus
/// variable: point is the mixture mean, lpl the log mixture density at the
/// realized value. Throws NumericalError on a non-positive variance.
ForecastResult mixture_forecast(const std::vector<ForecastMoments>& components, int h,
                                std::span<const std::size_t> focus, const Vector& realized);

ForecastResult predictive_density(const std::vector<engine::ParamDraw>& draws, const Vector& x_T,
                                  int h, std::span<const std::size_t> focus,
                                  const Vector& realized);

struct DrawBudget {
  int n_hyper = 200;
  int n_param = 10;
  unsigned threads = 1;
};

/// Predictive densities that integrate over the hyperparameter posterior.
///
/// Draws n_hyper grid points from the weights (stream "hyper"), then
/// n_param parameter draws per hyper draw (stream "param-draws", task = draw
/// index), and pools all conditional Gaussians. One call serves all
/// horizons from the same draws; realized[k] belongs to horizons[k].
std::vector<ForecastResult> forecast_with_hyper_uncertainty(
    const hyper::ScoredModel& model, const std::vector<hyper::HyperPoint>& scored_grid,
    const Vector& x_T, std::span<const int> horizons, const std::vector<Vector>& realized,
    const DrawBudget& budget, std::uint64_t seed);

}  // namespace subvar::forecast
