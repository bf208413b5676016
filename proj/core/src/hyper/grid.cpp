#include "subvar/hyper/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subvar/errors.hpp"

namespace subvar::hyper {

OmegaPrior parse_omega_prior(std::string_view text) {
  if (text == "flat") return OmegaPrior::Flat;
  if (text == "informative" || text == "inf") return OmegaPrior::Informative;
  throw ConfigError("unknown omega prior '" + std::string(text) + "' (flat|informative)");
}

int ledermann_bound(int M) {
  if (M < 1) throw ArgumentError("ledermann_bound: M must be positive");
  int L = 0;
  while (L + 1 <= M && (M - L - 1) * (M - L - 1) >= M + L + 1) ++L;
  return L;
}

std::vector<double> default_omega_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 19; ++i) grid.push_back(0.01 + 0.05 * i);
  grid.push_back(0.99);
  return grid;
}

std::vector<double> default_theta_grid() {
  return {0.001, 0.01, 0.025, 0.05, 0.10, 0.20, 0.3, 0.4, 0.5, 2.0, 3.0, 4.0, 5.0};
}

std::vector<int> default_q_grid(int M, int cap) {
  const int top = std::min(cap, ledermann_bound(M));
  if (top < 1) throw ArgumentError("no admissible factor count for M=" + std::to_string(M));
  std::vector<int> q(static_cast<std::size_t>(top));
  for (int i = 0; i < top; ++i) q[static_cast<std::size_t>(i)] = i + 1;
  return q;
}

GridAxes default_axes(const HyperPriorConfig& config, int M) {
  return {default_q_grid(M, config.q_max_cap), default_omega_grid(), default_theta_grid()};
}

std::vector<HyperPoint> build_grid(const GridAxes& axes, prior::PriorVariant variant) {
  if (axes.q.empty() || axes.omega.empty())
    throw ArgumentError("build_grid: empty q or omega axis");
  const bool minn = variant == prior::PriorVariant::Minnesota;
  if (minn && axes.theta.empty()) throw ArgumentError("build_grid: empty theta axis");

  std::vector<std::optional<double>> thetas;
  if (minn) {
    for (double t : axes.theta) thetas.emplace_back(t);
  } else {
    thetas.emplace_back(std::nullopt);
  }
  std::vector<HyperPoint> grid;
  grid.reserve(thetas.size() * axes.omega.size() * axes.q.size());
  for (const auto& theta : thetas)
    for (double omega : axes.omega)
      for (int q : axes.q) {
        HyperPoint pt;
        pt.q = q;
        pt.omega = omega;
        pt.theta = theta;
        grid.push_back(pt);
      }
  return grid;
}

std::vector<HyperPoint> build_grid(const HyperPriorConfig& config, int M,
                                   prior::PriorVariant variant) {
  return build_grid(default_axes(config, M), variant);
}

GammaParams gamma_from_mode_sd(double mode, double sd) {
  if (!(sd >= 1e-6)) throw ArgumentError("gamma_from_mode_sd: sd must be >= 1e-6");
  if (!(mode > 0.0)) throw ArgumentError("gamma_from_mode_sd: mode must be positive");
  const double v = sd * sd;
  const double rate = (mode + std::sqrt(mode * mode + 4.0 * v)) / (2.0 * v);
  return {1.0 + mode * rate, rate};
}

BetaParams omega_beta(const HyperPriorConfig& config, int M) {
  if (config.omega_prior == OmegaPrior::Flat) return {1.0, 1.0};
  return {config.c0 * M, config.c1 * M};
}

double log_beta_density(double x, const BetaParams& beta) {
  if (!(x > 0.0 && x < 1.0)) return -INFINITY;
  return (beta.a - 1.0) * std::log(x) + (beta.b - 1.0) * std::log1p(-x) -
         (std::lgamma(beta.a) + std::lgamma(beta.b) - std::lgamma(beta.a + beta.b));
}

double log_gamma_density(double x, const GammaParams& gamma) {
  if (!(x > 0.0)) return -INFINITY;
  return gamma.shape * std::log(gamma.rate) - std::lgamma(gamma.shape) +
         (gamma.shape - 1.0) * std::log(x) - gamma.rate * x;
}

double hyper_log_prior(const HyperPoint& point, const HyperPriorConfig& config, int M,
                       std::optional<int> q_count) {
  double lp = 0.0;
  if (config.omega_prior == OmegaPrior::Informative && point.omega > 0.0)
    lp += log_beta_density(point.omega, omega_beta(config, M));
  if (point.theta)
    lp += log_gamma_density(*point.theta, gamma_from_mode_sd(config.theta_mode, config.theta_sd));
  const int n_q = q_count ? *q_count : static_cast<int>(default_q_grid(M, config.q_max_cap).size());
  if (n_q < 1) throw ArgumentError("hyper_log_prior: q_count must be positive");
  lp -= std::log(static_cast<double>(n_q));
  return lp;
}

}  // namespace subvar::hyper
