#include "subvar/engine/sampler.hpp"

#include <cmath>

#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"

namespace subvar::engine {

std::vector<ParamDraw> sample_posterior(const Posterior& post, int n, Rng& rng) {
  const Index M = post.M();
  const Index K = post.K();
  if (n < 1) throw ArgumentError("number of posterior draws must be at least 1");
  if (!(post.dof > static_cast<double>(M) + 1.0)) {
    throw ArgumentError("posterior degrees of freedom must exceed M + 1 to sample");
  }
  const Matrix scale_chol = cholesky_lower(post.scale, "posterior scale S̄");
  const auto precision_upper = post.precision_chol.triangularView<Eigen::Lower>().transpose();
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<ParamDraw> draws;
  draws.reserve(static_cast<std::size_t>(n));
  Matrix bartlett(M, M);
  Matrix noise(K, M);
  for (int d = 0; d < n; ++d) {
    bartlett.setZero();
    for (Index i = 0; i < M; ++i) {
      std::gamma_distribution<double> chi2(0.5 * (post.dof - static_cast<double>(i)), 2.0);
      bartlett(i, i) = std::sqrt(chi2(rng));
      for (Index j = 0; j < i; ++j) bartlett(i, j) = normal(rng);
    }
    // Σ⁻¹ = C^{-T} B B' C^{-1} ~ Wishart(ν̄, S̄⁻¹) with S̄ = C C', so
    // Σ = Q Q' with Q = C B^{-T}.
    const Matrix q_t =
        bartlett.triangularView<Eigen::Lower>().solve(Matrix(scale_chol.transpose()));
    const Matrix root = q_t.transpose();

    for (Index i = 0; i < K; ++i) {
      for (Index j = 0; j < M; ++j) noise(i, j) = normal(rng);
    }
    // Row covariance V̄ = (L L')⁻¹ has square root L^{-T}.
    const Matrix row_scaled = precision_upper.solve(noise);
    ParamDraw draw;
    draw.Sigma = symmetrized(root * root.transpose());
    draw.A = post.mean + row_scaled * root.transpose();
    draws.push_back(std::move(draw));
  }
  return draws;
}

std::vector<ParamDraw> sample_posterior(const Posterior& post, int n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_posterior(post, n, rng);
}

}  // namespace subvar::engine
