#include "subvar/hyper/bic.hpp"

#include <cmath>
#include <numbers>

#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"

namespace subvar::hyper {

BicParts bic_from_posterior(const engine::Posterior& post, const engine::CrossProducts& stats,
                            std::span<const std::size_t> focus) {
  const Index M = post.M();
  if (!(post.dof > M + 1.0)) throw ArgumentError("bic: posterior dof must exceed M + 1");
  const double T = static_cast<double>(stats.T);
  const Matrix sigma = post.scale / (post.dof - M - 1.0);
  // Residual cross-products Y'Y - Ā'X'Y - Y'XĀ + Ā'X'XĀ without forming residuals.
  const Matrix ata = post.mean.transpose() * stats.xty;
  const Matrix rss = stats.yty - ata - ata.transpose() +
                     post.mean.transpose() * stats.xtx * post.mean;

  BicParts parts;
  for (std::size_t j : focus) {
    if (static_cast<Index>(j) >= M) throw ArgumentError("bic: focus index out of range");
    const Index jj = static_cast<Index>(j);
    const double s2 = sigma(jj, jj);
    parts.log_likelihood +=
        -0.5 * T * std::log(2.0 * std::numbers::pi * s2) - 0.5 * rss(jj, jj) / s2;
  }
  const Matrix vx = cholesky_solve(post.precision_chol, stats.xtx);
  parts.effective_parameters = static_cast<double>(focus.size()) * vx.trace();
  parts.bic = -2.0 * parts.log_likelihood + parts.effective_parameters * std::log(T);
  return parts;
}

double bic_score(const prior::ConjugatePrior& prior, const data::RegressionData& data,
                 std::span<const std::size_t> focus) {
  const auto stats = engine::CrossProducts::from(data);
  return bic_from_posterior(engine::posterior_moments(prior, stats), stats, focus).bic;
}

}  // namespace subvar::hyper
