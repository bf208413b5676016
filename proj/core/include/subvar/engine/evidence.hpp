#pragma once

#include "subvar/engine/posterior.hpp"

namespace subvar::engine {

/// Exact log evidence log ∫ p(Y|A,Σ) p(A,Σ) dA dΣ of the conjugate model:
///
///   -TM/2·log π + M/2·(log|V̲⁻¹| - log|V̄⁻¹|) + ν̲/2·log|S̲| - ν̄/2·log|S̄|
///   + log Γ_M(ν̄/2) - log Γ_M(ν̲/2)
///
/// All normalizing constants are kept so that priors with different
/// dummy-implied (ν̲, S̲) are comparable.
double log_marginal_likelihood(const prior::ConjugatePrior& prior, const Posterior& post,
                               Index T);
double log_marginal_likelihood(const prior::ConjugatePrior& prior, const CrossProducts& stats);
double log_marginal_likelihood(const prior::ConjugatePrior& prior,
                               const data::RegressionData& data);

/// Evidence of the actual data with the dummy-implied (A̲, V̲⁻¹, ν̲, S̲) as the
/// prior, i.e. the ratio of augmented-data to dummy-only evidence. For the
/// flat variant this is log_marginal_likelihood itself.
double dummy_consistent_log_ml(const prior::ConjugatePrior& prior, const CrossProducts& stats);
double dummy_consistent_log_ml(const prior::ConjugatePrior& prior,
                               const data::RegressionData& data);

}  // namespace subvar::engine
