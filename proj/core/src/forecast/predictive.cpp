#include "subvar/forecast/predictive.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "subvar/engine/sampler.hpp"
#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"
#include "subvar/parallel.hpp"
#include "subvar/random.hpp"

namespace subvar::forecast {

namespace {

// Focus-variable means and variances, one row per mixture component.
ForecastResult pool(const Matrix& means, const Matrix& vars, int h, const Vector& realized) {
  const Index n = means.rows();
  const Index k_focus = means.cols();
  if (n < 1) throw ArgumentError("predictive density needs at least one draw");
  if (realized.size() != k_focus)
    throw ArgumentError("one realized value per focus variable is required");
  const double log_n = std::log(static_cast<double>(n));
  ForecastResult r;
  r.horizon = h;
  r.point = Vector::Zero(k_focus);
  r.lpl = Vector::Zero(k_focus);
  Vector logd(n);
  for (Index k = 0; k < k_focus; ++k) {
    const double y = realized[k];
    if (!std::isfinite(y)) throw ArgumentError("realized value is not finite");
    double mean_sum = 0.0;
    for (Index d = 0; d < n; ++d) {
      const double v = vars(d, k);
      if (!(v > 0.0)) throw NumericalError("zero conditional variance in predictive draw");
      const double e = y - means(d, k);
      mean_sum += means(d, k);
      logd[d] = -0.5 * (std::log(2.0 * std::numbers::pi * v) + e * e / v);
    }
    r.point[k] = mean_sum / static_cast<double>(n);
    r.lpl[k] = log_sum_exp(logd) - log_n;
  }
  return r;
}

}  // namespace

ForecastResult mixture_forecast(const std::vector<ForecastMoments>& components, int h,
                                std::span<const std::size_t> focus, const Vector& realized) {
  const Index n = static_cast<Index>(components.size());
  const Index k_focus = static_cast<Index>(focus.size());
  Matrix means(n, k_focus), vars(n, k_focus);
  for (Index d = 0; d < n; ++d)
    for (Index k = 0; k < k_focus; ++k) {
      const auto& c = components[static_cast<std::size_t>(d)];
      const Index j = static_cast<Index>(focus[static_cast<std::size_t>(k)]);
      if (j >= c.mean.size()) throw ArgumentError("focus index out of range");
      means(d, k) = c.mean[j];
      vars(d, k) = c.cov(j, j);
    }
  return pool(means, vars, h, realized);
}

ForecastResult predictive_density(const std::vector<engine::ParamDraw>& draws, const Vector& x_T,
                                  int h, std::span<const std::size_t> focus,
                                  const Vector& realized) {
  std::vector<ForecastMoments> comps;
  comps.reserve(draws.size());
  for (const auto& d : draws) comps.push_back(iterated_forecast_moments(d, x_T, h));
  ForecastResult r = mixture_forecast(comps, h, focus, realized);
  r.draws_meta.n_param_draws = static_cast<int>(draws.size());
  r.draws_meta.n_hyper_draws = 0;
  return r;
}

std::vector<ForecastResult> forecast_with_hyper_uncertainty(
    const hyper::ScoredModel& model, const std::vector<hyper::HyperPoint>& scored_grid,
    const Vector& x_T, std::span<const int> horizons, const std::vector<Vector>& realized,
    const DrawBudget& budget, std::uint64_t seed) {
  if (horizons.empty()) throw ArgumentError("no forecast horizons requested");
  if (realized.size() != horizons.size())
    throw ArgumentError("one realized vector per horizon is required");
  if (budget.n_hyper < 1 || budget.n_param < 1)
    throw ArgumentError("draw budget must be positive");
  const int h_max = *std::max_element(horizons.begin(), horizons.end());
  if (*std::min_element(horizons.begin(), horizons.end()) < 1)
    throw ArgumentError("forecast horizon must be at least 1");

  Rng hyper_rng = make_stream(seed, "hyper");
  const auto picks = hyper::sample_hyper(scored_grid, budget.n_hyper, hyper_rng);

  // One posterior per distinct grid point.
  std::map<std::size_t, std::size_t> slot_of;
  std::vector<std::size_t> unique;
  for (std::size_t idx : picks)
    if (slot_of.emplace(idx, unique.size()).second) unique.push_back(idx);
  std::vector<engine::Posterior> posts(unique.size());
  parallel_for(unique.size(), budget.threads,
               [&](std::size_t u) { posts[u] = model.posterior_at(scored_grid[unique[u]]); });

  const auto focus = model.focus();
  const Index k_focus = static_cast<Index>(focus.size());
  const Index n_comp = static_cast<Index>(picks.size()) * budget.n_param;
  std::vector<Matrix> means(horizons.size(), Matrix(n_comp, k_focus));
  std::vector<Matrix> vars(horizons.size(), Matrix(n_comp, k_focus));
  parallel_for(picks.size(), budget.threads, [&](std::size_t i) {
    const auto& post = posts[slot_of.at(picks[i])];
    const auto draws =
        engine::sample_posterior(post, budget.n_param, derive_seed(seed, "param-draws", i));
    for (int k = 0; k < budget.n_param; ++k) {
      const auto path = forecast_moment_path(draws[static_cast<std::size_t>(k)], x_T, h_max);
      const Index row = static_cast<Index>(i) * budget.n_param + k;
      for (std::size_t hi = 0; hi < horizons.size(); ++hi) {
        const auto& mom = path[static_cast<std::size_t>(horizons[hi] - 1)];
        for (Index f = 0; f < k_focus; ++f) {
          const Index j = static_cast<Index>(focus[static_cast<std::size_t>(f)]);
          means[hi](row, f) = mom.mean[j];
          vars[hi](row, f) = mom.cov(j, j);
        }
      }
    }
  });

  std::vector<ForecastResult> out;
  for (std::size_t hi = 0; hi < horizons.size(); ++hi) {
    ForecastResult r = pool(means[hi], vars[hi], horizons[hi], realized[hi]);
    r.draws_meta = {budget.n_param, budget.n_hyper, seed};
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace subvar::forecast
