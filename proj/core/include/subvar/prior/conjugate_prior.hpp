#pragma once

#include <memory>
#include <optional>
#include <string>

#include "subvar/data/regression.hpp"
#include "subvar/prior/factors.hpp"
#include "subvar/prior/minnesota.hpp"
#include "subvar/types.hpp"

namespace subvar::prior {

enum class PriorVariant { Flat, Minnesota };

PriorVariant parse_variant(std::string_view text);
const char* to_string(PriorVariant variant);

struct PriorMeta {
  PriorVariant variant = PriorVariant::Flat;
  double omega = 0.0;
  int q = 0;
  std::optional<double> theta;
  double kappa = 0.0;
};

/// Natural conjugate prior a|Σ ~ N(vec(A̲), Σ ⊗ V̲), Σ ~ IW(ν̲, S̲).
///
/// The prior is carried by its precision V̲⁻¹, which may be singular (the
/// subspace term alone has the factor directions as its null space). `ridge`
/// is added as ridge·I to the precision wherever it is factorized, in both
/// the posterior and the evidence, so every grid point is regularized alike.
struct ConjugatePrior {
  Matrix mean;        // K x M
  Matrix precision;   // K x K
  double dof = 0.0;
  Matrix scale;       // M x M
  double ridge = 0.0;
  PriorMeta meta;

  Matrix regularized_precision() const;
};

/// Minnesota hyperparameters that do not vary over the grid.
struct MinnesotaSettings {
  double kappa = 0.001;
  Vector prior_mean;  // per variable; empty means all zeros
};

/// Ridge multiplier for the flat variant: ridge = this · tr(X'X)/K.
inline constexpr double kFlatEvidenceRidge = 1e-10;
/// Ridge multiplier on diag(σ̂²) added to the Minnesota prior scale.
inline constexpr double kMinnesotaScaleRidge = 1e-8;

/// Builds priors for one dataset at many (ω, q, ϑ) points.
///
/// Computes the AR(p) scales σ̂ and the SVD once; build() is const and
/// safe to call concurrently.
class PriorBuilder {
 public:
  PriorBuilder(const data::RegressionData& data, PriorVariant variant,
               MinnesotaSettings settings = {}, int max_q = 10);

  /// Throws ArgumentError for ω outside [0, 0.99], q beyond the cache or a
  /// Minnesota prior without ϑ.
  ConjugatePrior build(double omega, int q, std::optional<double> theta) const;

  PriorVariant variant() const { return variant_; }
  const SubspaceCache& subspace() const { return cache_; }
  const Vector& sigma() const { return sigma_; }
  const Vector& prior_mean() const { return prior_mean_; }
  double kappa() const { return settings_.kappa; }
  int p() const { return p_; }
  Index M() const { return M_; }

 private:
  PriorVariant variant_;
  MinnesotaSettings settings_;
  int p_;
  Index M_;
  Index K_;
  SubspaceCache cache_;
  Vector sigma_;
  Vector prior_mean_;
  double flat_ridge_;
};

/// One-shot prior assembly (computes σ̂ and the SVD for this call only).
ConjugatePrior assemble_prior(const data::RegressionData& data, PriorVariant variant,
                              double omega, int q, std::optional<double> theta,
                              double kappa = 0.001, const Vector& prior_mean = {});

}  // namespace subvar::prior
