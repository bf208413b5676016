#pragma once

#include <array>
#include <vector>

#include "subvar/data/panel.hpp"
#include "subvar/hyper/model.hpp"

namespace subvar::forecast {

/// Minnesota BVAR estimated by least squares on dummy-augmented data.
///
/// Posterior moments come from a QR factorization of (X̲; X) and (Y̲; Y);
/// the evidence is the ratio of the augmented-sample and dummy-only
/// normalizing constants. Grid points are indexed by ϑ only (q and ω are
/// ignored). The prior shares the subspace model's conventions: ν̲ equals
/// the number of dummy rows and S̲ carries the 1e-8·diag(σ̂²) ridge.
class MinnesotaBvar final : public hyper::ScoredModel {
 public:
  MinnesotaBvar(data::RegressionData data, Vector prior_mean = {}, double kappa = 0.001,
                std::array<std::size_t, 3> focus = {0, 1, 2});

  engine::Posterior posterior_at(const hyper::HyperPoint& point) const override;
  double log_evidence(const hyper::HyperPoint& point) const override;
  const engine::CrossProducts& stats() const override { return stats_; }
  std::array<std::size_t, 3> focus() const override { return focus_; }
  Index M() const override { return data_.M(); }

  const Vector& sigma() const { return sigma_; }

 private:
  struct Fit {
    engine::Posterior post;
    double log_ml = 0.0;
  };
  Fit fit(const hyper::HyperPoint& point) const;

  data::RegressionData data_;
  Vector prior_mean_;
  double kappa_;
  std::array<std::size_t, 3> focus_;
  Vector sigma_;
  engine::CrossProducts stats_;
};

/// Grid over ϑ alone for the Minnesota BVAR (q = 1, ω = 0).
std::vector<hyper::HyperPoint> bvar_grid(const std::vector<double>& thetas);

/// FAVAR panel: the three focus series followed by the principal components
/// of the standardized remaining series with standard deviation above one.
struct DfmSpec {
  data::PanelData panel;
  int n_factors = 0;
  std::vector<double> component_sd;  // s_j / sqrt(T-1), all components
  bool floored = false;              // no component passed and one was kept anyway
  int p = 2;
};

inline constexpr double kDfmTheta = 10.0;

DfmSpec dfm_baseline_spec(const data::PanelData& panel, std::array<std::size_t, 3> focus, int p);

}  // namespace subvar::forecast
