#include "subvar/prior/conjugate_prior.hpp"

#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"

namespace subvar::prior {

PriorVariant parse_variant(std::string_view text) {
  if (text == "flat") return PriorVariant::Flat;
  if (text == "minn" || text == "minnesota") return PriorVariant::Minnesota;
  throw ConfigError("unknown prior variant '" + std::string(text) + "' (expected flat|minn)");
}

const char* to_string(PriorVariant variant) {
  return variant == PriorVariant::Flat ? "flat" : "minnesota";
}

Matrix ConjugatePrior::regularized_precision() const {
  if (ridge == 0.0) return precision;
  Matrix out = precision;
  out.diagonal().array() += ridge;
  return out;
}

PriorBuilder::PriorBuilder(const data::RegressionData& data, PriorVariant variant,
                           MinnesotaSettings settings, int max_q)
    : variant_(variant),
      settings_(std::move(settings)),
      p_(data.p),
      M_(data.M()),
      K_(data.K()),
      cache_(data, max_q) {
  flat_ridge_ = kFlatEvidenceRidge * cache_.xtx().trace() / static_cast<double>(K_);
  prior_mean_ = settings_.prior_mean.size() == 0 ? Vector::Zero(M_) : settings_.prior_mean;
  if (prior_mean_.size() != M_) throw ArgumentError("prior mean length must equal M");
  if (variant_ == PriorVariant::Minnesota) {
    if (!(settings_.kappa > 0.0)) throw ArgumentError("κ must be positive");
    sigma_ = data::ar_residual_scales(data::reconstruct_series(data), p_);
  }
}

ConjugatePrior PriorBuilder::build(double omega, int q, std::optional<double> theta) const {
  const double c = shrinkage_ratio(omega);
  ConjugatePrior prior;
  prior.meta = {variant_, omega, q, std::nullopt, 0.0};

  Matrix subspace;
  if (c > 0.0) {
    if (q < 0 || q > cache_.max_q()) {
      throw ArgumentError("number of factors " + std::to_string(q) + " outside [0, " +
                          std::to_string(cache_.max_q()) + "]");
    }
    subspace = c * cache_.residual_gram(q);
  }

  if (variant_ == PriorVariant::Flat) {
    prior.mean = Matrix::Zero(K_, M_);
    prior.precision = c > 0.0 ? subspace : Matrix::Zero(K_, K_);
    prior.dof = static_cast<double>(M_ + 2);
    prior.scale = Matrix::Identity(M_, M_) / 100.0;
    prior.ridge = flat_ridge_;
    return prior;
  }

  if (!theta) throw ArgumentError("Minnesota prior requires ϑ");
  const DummyData dummies = minnesota_dummies(sigma_, prior_mean_, p_, *theta, settings_.kappa);
  prior.meta.theta = theta;
  prior.meta.kappa = settings_.kappa;
  prior.mean = minnesota_prior_mean(prior_mean_, p_);
  prior.precision = dummies.X.transpose() * dummies.X;
  if (c > 0.0) prior.precision += subspace;
  prior.dof = static_cast<double>(dummies.Y.rows());
  const Matrix resid = dummies.Y - dummies.X * prior.mean;
  prior.scale = resid.transpose() * resid;
  prior.scale.diagonal() += kMinnesotaScaleRidge * sigma_.array().square().matrix();
  prior.scale = symmetrized(prior.scale);
  return prior;
}

ConjugatePrior assemble_prior(const data::RegressionData& data, PriorVariant variant,
                              double omega, int q, std::optional<double> theta, double kappa,
                              const Vector& prior_mean) {
  const PriorBuilder builder(data, variant, MinnesotaSettings{kappa, prior_mean},
                             omega > 0.0 ? q : 0);
  return builder.build(omega, q, theta);
}

}  // namespace subvar::prior
