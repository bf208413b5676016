#include "subvar/engine/posterior.hpp"

#include <limits>

#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"

namespace subvar::engine {

CrossProducts CrossProducts::from(const data::RegressionData& data) {
  CrossProducts out;
  out.xtx = symmetrized(data.X.transpose() * data.X);
  out.xty = data.X.transpose() * data.Y;
  out.yty = symmetrized(data.Y.transpose() * data.Y);
  out.T = data.effective_T();
  return out;
}

Matrix Posterior::covariance() const {
  return cholesky_solve(precision_chol, Matrix::Identity(K(), K()));
}

Posterior posterior_moments(const prior::ConjugatePrior& prior, const CrossProducts& stats) {
  const Index K = stats.xtx.rows();
  const Index M = stats.yty.rows();
  if (prior.precision.rows() != K || prior.mean.rows() != K || prior.mean.cols() != M ||
      prior.scale.rows() != M) {
    throw ArgumentError("prior dimensions do not match the data");
  }
  const Matrix prior_precision = prior.regularized_precision();

  Posterior post;
  post.precision_chol = cholesky_lower(stats.xtx + prior_precision, "posterior precision X'X + V⁻¹");
  post.logdet_posterior_precision = logdet_from_cholesky(post.precision_chol);

  const Matrix prior_times_mean = prior_precision * prior.mean;
  const Matrix rhs = stats.xty + prior_times_mean;
  post.mean = cholesky_solve(post.precision_chol, rhs);

  post.scale = symmetrized(prior.scale + stats.yty + prior.mean.transpose() * prior_times_mean -
                           post.mean.transpose() * rhs);
  post.dof = prior.dof + static_cast<double>(stats.T);
  post.logdet_scale = logdet_spd(post.scale, "posterior scale S̄");
  // Singular prior precision (an unregularized flat prior) leaves the
  // posterior usable but the evidence undefined.
  Eigen::LLT<Matrix> prior_llt(symmetrized(prior_precision));
  post.logdet_prior_precision =
      prior_llt.info() == Eigen::Success
          ? logdet_from_cholesky(prior_llt.matrixL())
          : -std::numeric_limits<double>::infinity();
  return post;
}

Posterior posterior_moments(const prior::ConjugatePrior& prior,
                            const data::RegressionData& data) {
  return posterior_moments(prior, CrossProducts::from(data));
}

}  // namespace subvar::engine
