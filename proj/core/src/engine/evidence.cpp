#include "subvar/engine/evidence.hpp"

#include <cmath>
#include <numbers>

#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"

namespace subvar::engine {

double log_marginal_likelihood(const prior::ConjugatePrior& prior, const Posterior& post,
                               Index T) {
  const auto M = static_cast<double>(post.M());
  if (!std::isfinite(post.logdet_prior_precision)) {
    throw NumericalError("evidence undefined: prior precision is singular (improper prior)");
  }
  if (!(prior.dof > M - 1.0)) {
    throw NumericalError("evidence undefined: prior degrees of freedom must exceed M - 1");
  }
  const double logdet_prior_scale = logdet_spd(prior.scale, "prior scale S̲");
  const int m = static_cast<int>(post.M());
  const double value =
      -0.5 * static_cast<double>(T) * M * std::log(std::numbers::pi) +
      0.5 * M * (post.logdet_prior_precision - post.logdet_posterior_precision) +
      0.5 * prior.dof * logdet_prior_scale - 0.5 * post.dof * post.logdet_scale +
      log_multivariate_gamma(0.5 * post.dof, m) - log_multivariate_gamma(0.5 * prior.dof, m);
  if (!std::isfinite(value)) throw NumericalError("evidence is not finite");
  return value;
}

double log_marginal_likelihood(const prior::ConjugatePrior& prior, const CrossProducts& stats) {
  return log_marginal_likelihood(prior, posterior_moments(prior, stats), stats.T);
}

double log_marginal_likelihood(const prior::ConjugatePrior& prior,
                               const data::RegressionData& data) {
  return log_marginal_likelihood(prior, CrossProducts::from(data));
}

double dummy_consistent_log_ml(const prior::ConjugatePrior& prior, const CrossProducts& stats) {
  // The Minnesota prior already carries the dummy-implied moments, so the
  // conditional evidence p(Y | dummies) is the plain evidence under it.
  return log_marginal_likelihood(prior, stats);
}

double dummy_consistent_log_ml(const prior::ConjugatePrior& prior,
                               const data::RegressionData& data) {
  return dummy_consistent_log_ml(prior, CrossProducts::from(data));
}

}  // namespace subvar::engine
