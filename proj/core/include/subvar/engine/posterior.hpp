#pragma once

#include "subvar/data/regression.hpp"
#include "subvar/prior/conjugate_prior.hpp"
#include "subvar/types.hpp"

namespace subvar::engine {

/// Sufficient statistics of the Gaussian likelihood.
struct CrossProducts {
  Matrix xtx;
  Matrix xty;
  Matrix yty;
  Index T = 0;

  static CrossProducts from(const data::RegressionData& data);
};

/// Matrix-normal–inverse-Wishart posterior.
///
/// a|Σ,Y ~ N(vec(Ā), Σ ⊗ V̄) with V̄ = (X'X + V̲⁻¹)⁻¹, Σ|Y ~ IW(ν̄, S̄).
/// V̄ is kept as the lower Cholesky factor of its inverse.
struct Posterior {
  Matrix mean;             // Ā, K x M
  Matrix precision_chol;   // L with L L' = X'X + V̲⁻¹ (+ ridge·I)
  Matrix scale;            // S̄
  double dof = 0.0;        // ν̄ = ν̲ + T
  double logdet_prior_precision = 0.0;
  double logdet_posterior_precision = 0.0;
  double logdet_scale = 0.0;

  Index K() const { return mean.rows(); }
  Index M() const { return mean.cols(); }
  /// V̄ as a dense matrix (tests and diagnostics only).
  Matrix covariance() const;
};

/// Posterior moments via Cholesky solves, S̄ = S̲ + Y'Y + A̲'V̲⁻¹A̲ - Ā'V̄⁻¹Ā
/// symmetrized. Throws NumericalError (with the smallest eigenvalue) when
/// the posterior precision, the regularized prior precision or S̄ is not
/// positive definite.
Posterior posterior_moments(const prior::ConjugatePrior& prior, const CrossProducts& stats);
Posterior posterior_moments(const prior::ConjugatePrior& prior,
                            const data::RegressionData& data);

}  // namespace subvar::engine
