#include "subvar/engine/convex_check.hpp"

#include "subvar/engine/posterior.hpp"
#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"
#include "subvar/prior/conjugate_prior.hpp"
#include "subvar/prior/factors.hpp"

namespace subvar::engine {

double convex_combination_check(const data::RegressionData& data, double omega, int q) {
  const Index T = data.effective_T();
  const Index K = data.K();
  if (K > T) throw InapplicableIdentityError("identity needs K <= T");
  const Eigen::ColPivHouseholderQR<Matrix> qr(data.X);
  if (qr.rank() < K) {
    throw InapplicableIdentityError("regressor matrix is rank deficient (rank " +
                                    std::to_string(qr.rank()) + " < K = " +
                                    std::to_string(K) + ")");
  }

  const prior::PriorBuilder builder(data, prior::PriorVariant::Flat, {}, q);
  prior::ConjugatePrior flat = builder.build(omega, q, std::nullopt);
  flat.ridge = 0.0;
  const Posterior post = posterior_moments(flat, data);
  const Matrix fitted = data.X * post.mean;

  // Φ Y from an orthonormal basis of col(X); Φ₀ Y from the lag-block SVD.
  const Matrix basis = qr.householderQ() * Matrix::Identity(T, K);
  const Matrix full_fit = basis * (basis.transpose() * data.Y);
  Matrix factor_fit = Matrix::Zero(T, data.M());
  if (q > 0) {
    const Matrix F = prior::principal_components(Matrix(data.lag_block()), q).F;
    factor_fit = F * (F.transpose() * data.Y);
  }
  return max_abs(fitted - (omega * factor_fit + (1.0 - omega) * full_fit));
}

}  // namespace subvar::engine
