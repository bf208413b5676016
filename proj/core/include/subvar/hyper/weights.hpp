#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "subvar/hyper/grid.hpp"
#include "subvar/random.hpp"

namespace subvar::hyper {

/// Stores scores on the grid and normalizes weight ∝ exp(log_score + log_prior).
/// Throws NumericalError naming the first point with a NaN score.
std::vector<HyperPoint> hyper_posterior_weights(std::vector<HyperPoint> grid,
                                                const std::vector<double>& scores);

/// Puts all weight on the highest-posterior point (ties go to the first).
void select_point(std::vector<HyperPoint>& grid);

/// i.i.d. categorical draws of grid indices by inverse CDF.
std::vector<std::size_t> sample_hyper(const std::vector<HyperPoint>& grid, int n, Rng& rng);
std::vector<std::size_t> sample_hyper(const std::vector<HyperPoint>& grid, int n,
                                      std::uint64_t seed);

struct HyperSummary {
  int median_q = 0;
  double mean_q = 0.0;
  double mean_omega = 0.0;
  std::optional<double> mean_theta;
};

/// Median of the marginal over q (smallest q whose cumulative weight reaches
/// 0.5) and weight-averaged q, ω and ϑ.
HyperSummary posterior_summary_q(const std::vector<HyperPoint>& grid);

/// Columns q, omega, theta, log_prior, log_score, weight (theta empty when absent).
void write_grid_csv(std::ostream& out, const std::vector<HyperPoint>& grid);

}  // namespace subvar::hyper
