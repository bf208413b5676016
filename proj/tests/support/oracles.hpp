#pragma once

#include <cstdint>
#include <vector>

#include "subvar/engine/sampler.hpp"
#include "subvar/types.hpp"

namespace subvar::oracle {

/// Scalar conjugate model y_t = a x_t + e_t, e_t ~ N(0, s2),
/// a | s2 ~ N(a0, s2 / prec0), s2 ~ IG(nu0 / 2, scale0 / 2).
struct ScalarModel {
  std::vector<double> y;
  std::vector<double> x;
  double a0 = 0.0;
  double prec0 = 1.0;
  double nu0 = 3.0;
  double scale0 = 1.0;
};

/// log p(y) by nested adaptive quadrature over (a, log s2).
double scalar_evidence_quadrature(const ScalarModel& m);

/// log p(y) as the sum of one-step Student-t predictive log densities.
double scalar_evidence_sequential(const ScalarModel& m);

/// Largest L in [0, M] with (M - L)² >= M + L, found by checking every L.
int ledermann_enumerated(int M);

/// Fraction of Marchenko–Pastur mass above `threshold` for aspect ratio
/// gamma = N/T <= 1 (unit variance).
double marchenko_pastur_tail(double gamma, double threshold);

struct PathMoments {
  Vector mean;
  Matrix cov;
  Vector mean_se;  // standard error of each mean
  Matrix cov_se;   // standard error of each covariance entry
};

/// Simulates n paths of the VAR defined by one draw from x_T and returns
/// sample moments of y_{T+h}.
PathMoments simulate_paths(const engine::ParamDraw& draw, const Vector& x_T, int h, int n,
                           std::uint64_t seed);

}  // namespace subvar::oracle
