#include "subvar/prior/minnesota.hpp"

#include "subvar/errors.hpp"

namespace subvar::prior {

DummyData minnesota_dummies(const Vector& sigma, const Vector& prior_mean, int p,
                            double theta, double kappa) {
  const Index M = sigma.size();
  if (p < 1) throw ArgumentError("lag order must be at least 1");
  if (!(theta > 0.0)) throw ArgumentError("Minnesota tightness ϑ must be positive");
  if (!(kappa > 0.0)) throw ArgumentError("intercept hyperparameter κ must be positive");
  if (prior_mean.size() != M) throw ArgumentError("prior mean length must equal M");
  for (Index j = 0; j < M; ++j) {
    if (!(sigma(j) > 0.0)) {
      throw ArgumentError("AR scale σ̂ for variable " + std::to_string(j) + " is not positive");
    }
  }
  const Index K = M * p + 1;
  const Index d = M * p + M + 1;
  DummyData out;
  out.theta = theta;
  out.kappa = kappa;
  out.Y = Matrix::Zero(d, M);
  out.X = Matrix::Zero(d, K);
  out.Y.topRows(M).diagonal() = prior_mean.cwiseProduct(sigma) / theta;
  for (int lag = 1; lag <= p; ++lag) {
    out.X.block((lag - 1) * M, (lag - 1) * M, M, M).diagonal() = lag * sigma / theta;
  }
  out.Y.block(M * p, 0, M, M).diagonal() = sigma;
  out.X(d - 1, K - 1) = kappa;
  return out;
}

Matrix minnesota_prior_mean(const Vector& prior_mean, int p) {
  const Index M = prior_mean.size();
  Matrix mean = Matrix::Zero(M * p + 1, M);
  mean.topRows(M).diagonal() = prior_mean;
  return mean;
}

}  // namespace subvar::prior
