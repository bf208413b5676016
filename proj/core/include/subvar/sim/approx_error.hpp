#pragma once

#include <iosfwd>
#include <vector>

#include "subvar/data/regression.hpp"
#include "subvar/prior/conjugate_prior.hpp"

namespace subvar::sim {

/// Average squared distance between the subVAR-Minn fit XĀ and the convex
/// combination ωΦ₀Y + (1-ω)·(Minnesota-only fit), per observation and equation:
///
///   Ξ = (1/(M T)) ‖XĀ - ωΦ₀Y - (1-ω) X Ā_minn‖²_F
///
/// where Ā_minn is the dummy-augmented least squares estimate.
double approximation_error(const prior::PriorBuilder& builder, const data::RegressionData& data,
                           double theta, double omega, int q);
double approximation_error(const data::RegressionData& data, double theta, double omega, int q,
                           double kappa = 0.001, const Vector& prior_mean = {});

struct ApproxSurface {
  std::vector<double> theta;
  std::vector<double> omega;
  int q = 3;
  Matrix log_xi;  // theta.size() x omega.size()
};

ApproxSurface approx_error_surface(const data::RegressionData& data,
                                   const std::vector<double>& thetas,
                                   const std::vector<double>& omegas, int q,
                                   double kappa = 0.001, const Vector& prior_mean = {},
                                   unsigned threads = 1);

/// Long format: theta, omega, logXi.
void write_surface_csv(std::ostream& out, const ApproxSurface& surface);

}  // namespace subvar::sim
