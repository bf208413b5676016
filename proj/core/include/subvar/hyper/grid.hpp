#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "subvar/prior/conjugate_prior.hpp"

namespace subvar::hyper {

/// One point of the discrete (q, ω, ϑ) grid with its scores.
struct HyperPoint {
  int q = 1;
  double omega = 0.0;
  std::optional<double> theta;  // absent for the flat variant
  double log_prior = 0.0;
  double log_score = 0.0;
  double weight = 0.0;
};

enum class OmegaPrior { Flat, Informative };

OmegaPrior parse_omega_prior(std::string_view text);

struct HyperPriorConfig {
  OmegaPrior omega_prior = OmegaPrior::Flat;
  double c0 = 8.0;  // informative Beta(c0·M, c1·M)
  double c1 = 6.0;
  double theta_mode = 0.2;
  double theta_sd = 0.4;
  int q_max_cap = 10;
};

/// Largest L >= 0 with (M - L)² >= M + L.
int ledermann_bound(int M);

/// {0.01, 0.06, ..., 0.96} ∪ {0.99}.
std::vector<double> default_omega_grid();
std::vector<double> default_theta_grid();
/// {1, ..., min(cap, ledermann_bound(M))}.
std::vector<int> default_q_grid(int M, int cap = 10);

struct GridAxes {
  std::vector<int> q;
  std::vector<double> omega;
  std::vector<double> theta;  // ignored for the flat variant
};

GridAxes default_axes(const HyperPriorConfig& config, int M);

/// Cartesian product, ϑ outermost and q innermost; the flat variant drops ϑ.
std::vector<HyperPoint> build_grid(const GridAxes& axes, prior::PriorVariant variant);
std::vector<HyperPoint> build_grid(const HyperPriorConfig& config, int M,
                                   prior::PriorVariant variant);

struct GammaParams {
  double shape = 0.0;
  double rate = 0.0;
};

/// Shape/rate of the Gamma with the given mode and standard deviation:
/// rate is the positive root of sd²β² - mode·β - 1 = 0, shape = 1 + mode·β.
/// Rejects sd < 1e-6 and non-positive inputs with ArgumentError.
GammaParams gamma_from_mode_sd(double mode, double sd);

struct BetaParams {
  double a = 1.0;
  double b = 1.0;
};

/// Beta(1, 1) for the flat ω prior, Beta(c0·M, c1·M) for the informative one.
BetaParams omega_beta(const HyperPriorConfig& config, int M);

double log_beta_density(double x, const BetaParams& beta);
double log_gamma_density(double x, const GammaParams& gamma);

/// log p(ω) + log p(ϑ) + log p(q) at a grid point.
///
/// The flat ω prior contributes 0; ω = 0 (the Minnesota benchmark point)
/// is a fixed value and contributes 0 as well. The ϑ term applies only
/// when the point carries ϑ. The q term is log(1/q_count) with q_count
/// defaulting to the size of the default q grid.
double hyper_log_prior(const HyperPoint& point, const HyperPriorConfig& config, int M,
                       std::optional<int> q_count = std::nullopt);

}  // namespace subvar::hyper
