#pragma once

#include "subvar/types.hpp"

namespace subvar::prior {

/// Minnesota dummy observations for a VAR(p) with intercept.
///
/// Rows, top to bottom (d = Mp + M + 1):
///   lag block   Y: diag(ā_j σ̂_j)/ϑ over M(p-1) zero rows; X: J_p ⊗ diag(σ̂)/ϑ, J_p = diag(1..p)
///   covariance  Y: diag(σ̂);                    X: zeros
///   intercept   Y: zeros;                       X: (0, ..., 0, κ)
struct DummyData {
  Matrix Y;  // d x M
  Matrix X;  // d x K
  double theta = 0.0;
  double kappa = 0.0;
};

DummyData minnesota_dummies(const Vector& sigma, const Vector& prior_mean, int p,
                            double theta, double kappa);

/// K x M prior mean the lag dummies encode: ā_j on the own first-lag
/// coefficient of equation j, zero elsewhere.
Matrix minnesota_prior_mean(const Vector& prior_mean, int p);

}  // namespace subvar::prior
