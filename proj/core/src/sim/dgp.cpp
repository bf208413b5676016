#include "subvar/sim/dgp.hpp"

#include <random>
#include <string>

#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"
#include "subvar/random.hpp"

namespace subvar::sim {

void validate(const DgpSpec& spec) {
  if (spec.M < 1) throw ArgumentError("DGP needs M >= 1");
  if (spec.q_true < 1 || spec.q_true > spec.M)
    throw ArgumentError("q_true " + std::to_string(spec.q_true) + " must lie in [1, M=" +
                        std::to_string(spec.M) + "]");
  if (spec.T < 10) throw ArgumentError("DGP needs T >= 10");
  if (spec.loading_sd < 0.0 || spec.chol_offdiag_sd < 0.0 || !(spec.chol_diag > 0.0))
    throw ArgumentError("DGP scales must be non-negative with a positive diagonal");
}

SyntheticPanel simulate_dgp(const DgpSpec& spec) {
  validate(spec);
  const Index M = spec.M;
  const Index q = spec.q_true;
  const Index T = spec.T;
  Rng rng = make_stream(spec.seed, "dgp");
  std::normal_distribution<double> normal(0.0, 1.0);

  SyntheticPanel out;
  out.loadings.resize(M, q);
  for (Index i = 0; i < M; ++i)
    for (Index j = 0; j < q; ++j)
      out.loadings(i, j) = i == j ? 1.0 : spec.loading_sd * normal(rng);

  out.A0_inv = Matrix::Zero(M, M);
  for (Index i = 0; i < M; ++i) {
    out.A0_inv(i, i) = spec.chol_diag;
    for (Index j = 0; j < i; ++j) out.A0_inv(i, j) = spec.chol_offdiag_sd * normal(rng);
  }

  Matrix G(q, q);
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j) G(i, j) = normal(rng);
  out.omega = G * G.transpose() / static_cast<double>(q);
  out.omega.diagonal().array() += 0.1;
  out.omega = symmetrized(out.omega);
  const Matrix omega_chol = cholesky_lower(out.omega, "factor innovation covariance");

  out.factors = Matrix::Zero(T, q);
  out.data.resize(T, M);
  Vector f = Vector::Zero(q);
  Vector eta(q), z(M);
  for (Index t = 0; t < T; ++t) {
    out.factors.row(t) = f.transpose();
    for (Index i = 0; i < M; ++i) z[i] = normal(rng);
    out.data.row(t) = (out.loadings * f + out.A0_inv * z).transpose();
    for (Index j = 0; j < q; ++j) eta[j] = normal(rng);
    f += omega_chol * eta;
  }
  return out;
}

}  // namespace subvar::sim
