#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "subvar/engine/posterior.hpp"
#include "subvar/hyper/grid.hpp"
#include "subvar/prior/conjugate_prior.hpp"

namespace subvar::hyper {

enum class SelectionMode { ML, BIC };

SelectionMode parse_selection(std::string_view text);
const char* to_string(SelectionMode mode);

struct ScoringOptions {
  SelectionMode mode = SelectionMode::ML;
  bool point_select = false;  // argmax instead of posterior weights
  unsigned threads = 1;
};

/// A conjugate VAR whose prior is indexed by grid points.
class ScoredModel {
 public:
  virtual ~ScoredModel() = default;

  virtual engine::Posterior posterior_at(const HyperPoint& point) const = 0;
  virtual double log_evidence(const HyperPoint& point) const = 0;
  virtual const engine::CrossProducts& stats() const = 0;
  virtual std::array<std::size_t, 3> focus() const = 0;
  virtual Index M() const = 0;

  /// log evidence (ML) or -BIC/2 (BIC) at one point.
  double score(const HyperPoint& point, SelectionMode mode) const;

  /// Scores every point (in parallel), adds the hyper-prior and normalizes.
  std::vector<HyperPoint> score_grid(std::vector<HyperPoint> grid,
                                     const HyperPriorConfig& config,
                                     const ScoringOptions& options) const;
};

/// VAR with the subspace shrinkage prior, optionally combined with Minnesota
/// dummies. One SVD and one set of cross-products serve the whole grid.
class SubspaceVar final : public ScoredModel {
 public:
  SubspaceVar(data::RegressionData data, prior::PriorVariant variant,
              prior::MinnesotaSettings settings = {}, int max_q = 10,
              std::array<std::size_t, 3> focus = {0, 1, 2});

  prior::ConjugatePrior prior_at(const HyperPoint& point) const;
  engine::Posterior posterior_at(const HyperPoint& point) const override;
  double log_evidence(const HyperPoint& point) const override;
  const engine::CrossProducts& stats() const override { return stats_; }
  std::array<std::size_t, 3> focus() const override { return focus_; }
  Index M() const override { return data_.M(); }

  const data::RegressionData& data() const { return data_; }
  const prior::PriorBuilder& builder() const { return builder_; }

 private:
  data::RegressionData data_;
  prior::PriorBuilder builder_;
  engine::CrossProducts stats_;
  std::array<std::size_t, 3> focus_;
};

}  // namespace subvar::hyper
