#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subvar/hyper/grid.hpp"
#include "subvar/hyper/model.hpp"

namespace subvar::sim {

struct ReplicationVariant {
  std::string name;
  prior::PriorVariant variant;
  hyper::OmegaPrior omega_prior;
};

/// subVAR-Minn0, Minn1, Flat0 and Flat1 (0: flat ω prior, 1: informative).
std::vector<ReplicationVariant> table1_variants();

struct ReplicationConfig {
  std::vector<int> M_list{10};
  std::vector<int> q_list{1, 3};
  int n_reps = 20;
  int T = 500;
  int p = 1;
  std::vector<ReplicationVariant> variants = table1_variants();
  std::uint64_t seed = 0;
  hyper::SelectionMode mode = hyper::SelectionMode::ML;
  unsigned threads = 1;
};

struct ReplicationCell {
  int M = 0;
  int q_true = 0;
  std::string variant;
  double mean_median_q = 0.0;
  double mean_omega = 0.0;  // average posterior mean of ω
  std::vector<int> median_q;  // per replication
};

/// Simulates n_reps panels per (M, q_true), scores every variant's full grid
/// on each and averages the posterior medians of q. Replication r of a cell
/// uses the DGP seed derive_seed(seed, "replication-M<M>-q<q>", r), so all
/// variants see the same panels.
std::vector<ReplicationCell> replication_study(const ReplicationConfig& config);

/// Wide layout: one row per M, one column per (variant, q_true).
void write_table1_csv(std::ostream& out, const std::vector<ReplicationCell>& cells);
/// Long layout with per-cell averages of median q and mean ω.
void write_replication_long_csv(std::ostream& out, const std::vector<ReplicationCell>& cells);

}  // namespace subvar::sim
