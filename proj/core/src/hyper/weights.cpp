#include "subvar/hyper/weights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <string>

#include "subvar/csv.hpp"
#include "subvar/errors.hpp"

namespace subvar::hyper {

namespace {

std::string describe(const HyperPoint& pt) {
  std::string s = "(q=" + std::to_string(pt.q) + ", omega=" + format_double(pt.omega);
  if (pt.theta) s += ", theta=" + format_double(*pt.theta);
  return s + ")";
}

}  // namespace

std::vector<HyperPoint> hyper_posterior_weights(std::vector<HyperPoint> grid,
                                                const std::vector<double>& scores) {
  if (grid.empty()) throw ArgumentError("hyper_posterior_weights: empty grid");
  if (scores.size() != grid.size())
    throw ArgumentError("hyper_posterior_weights: scores do not match grid size");
  Vector total(static_cast<Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::isnan(scores[i]) || std::isnan(grid[i].log_prior))
      throw NumericalError("NaN score at grid point " + describe(grid[i]));
    grid[i].log_score = scores[i];
    total[static_cast<Index>(i)] = scores[i] + grid[i].log_prior;
  }
  // Only differences from the maximum enter, so a common shift of the
  // scores leaves the weights unchanged.
  const double top = total.maxCoeff();
  if (!std::isfinite(top)) throw NumericalError("hyper posterior has no finite mass");
  const Vector w = (total.array() - top).unaryExpr([](double v) { return std::exp(v); });
  const double sum = w.sum();
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i].weight = w[static_cast<Index>(i)] / sum;
  return grid;
}

void select_point(std::vector<HyperPoint>& grid) {
  if (grid.empty()) throw ArgumentError("select_point: empty grid");
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i].log_score + grid[i].log_prior > grid[best].log_score + grid[best].log_prior)
      best = i;
  for (auto& pt : grid) pt.weight = 0.0;
  grid[best].weight = 1.0;
}

std::vector<std::size_t> sample_hyper(const std::vector<HyperPoint>& grid, int n, Rng& rng) {
  if (grid.empty()) throw ArgumentError("sample_hyper: empty grid");
  if (n < 0) throw ArgumentError("sample_hyper: negative draw count");
  std::vector<double> cum(grid.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i].weight >= 0.0)) throw NumericalError("sample_hyper: invalid weight");
    acc += grid[i].weight;
    cum[i] = acc;
  }
  if (!(acc > 0.0)) throw NumericalError("sample_hyper: weights sum to zero");
  std::vector<std::size_t> out(static_cast<std::size_t>(n));
  for (auto& idx : out) {
    const double u = uniform01(rng) * acc;
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) it = std::lower_bound(cum.begin(), cum.end(), acc);
    idx = static_cast<std::size_t>(it - cum.begin());
  }
  return out;
}

std::vector<std::size_t> sample_hyper(const std::vector<HyperPoint>& grid, int n,
                                      std::uint64_t seed) {
  Rng rng(seed);
  return sample_hyper(grid, n, rng);
}

HyperSummary posterior_summary_q(const std::vector<HyperPoint>& grid) {
  if (grid.empty()) throw ArgumentError("posterior_summary_q: empty grid");
  std::map<int, double> marginal;
  HyperSummary s;
  double total = 0.0;
  double theta_sum = 0.0;
  bool has_theta = false;
  for (const auto& pt : grid) {
    marginal[pt.q] += pt.weight;
    total += pt.weight;
    s.mean_q += pt.weight * pt.q;
    s.mean_omega += pt.weight * pt.omega;
    if (pt.theta) {
      has_theta = true;
      theta_sum += pt.weight * *pt.theta;
    }
  }
  if (!(total > 0.0)) throw NumericalError("posterior_summary_q: weights sum to zero");
  s.mean_q /= total;
  s.mean_omega /= total;
  if (has_theta) s.mean_theta = theta_sum / total;
  double cum = 0.0;
  s.median_q = marginal.rbegin()->first;
  for (const auto& [q, w] : marginal) {
    cum += w / total;
    if (cum >= 0.5 - 1e-12) {
      s.median_q = q;
      break;
    }
  }
  return s;
}

void write_grid_csv(std::ostream& out, const std::vector<HyperPoint>& grid) {
  write_csv_row(out, {"q", "omega", "theta", "log_prior", "log_score", "weight"});
  for (const auto& pt : grid)
    write_csv_row(out, {std::to_string(pt.q), format_double(pt.omega),
                        pt.theta ? format_double(*pt.theta) : std::string(),
                        format_double(pt.log_prior), format_double(pt.log_score),
                        format_double(pt.weight)});
}

}  // namespace subvar::hyper
