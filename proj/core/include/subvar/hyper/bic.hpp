#pragma once

#include <span>

#include "subvar/engine/posterior.hpp"

namespace subvar::hyper {

struct BicParts {
  double log_likelihood = 0.0;  // summed over the focus equations
  double effective_parameters = 0.0;
  double bic = 0.0;
};

/// BIC over the focus equations.
///
/// Gaussian log likelihood of each focus equation at x_t'Ā_j with variance
/// Σ̂_jj, Σ̂ = S̄/(ν̄ - M - 1). The penalty k_eff·log T uses
/// k_eff = |focus|·tr(X(X'X + V̲⁻¹)⁻¹X'), the hat-matrix trace of one
/// equation times the number of focus equations. Throws ArgumentError when
/// ν̄ <= M + 1.
BicParts bic_from_posterior(const engine::Posterior& post, const engine::CrossProducts& stats,
                            std::span<const std::size_t> focus);

double bic_score(const prior::ConjugatePrior& prior, const data::RegressionData& data,
                 std::span<const std::size_t> focus);

}  // namespace subvar::hyper
