#include "subvar/sim/replication.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <ostream>
#include <set>

#include "subvar/csv.hpp"
#include "subvar/data/regression.hpp"
#include "subvar/errors.hpp"
#include "subvar/hyper/weights.hpp"
#include "subvar/parallel.hpp"
#include "subvar/random.hpp"
#include "subvar/sim/dgp.hpp"

namespace subvar::sim {

std::vector<ReplicationVariant> table1_variants() {
  using prior::PriorVariant;
  using hyper::OmegaPrior;
  return {{"subVAR-Minn0", PriorVariant::Minnesota, OmegaPrior::Flat},
          {"subVAR-Minn1", PriorVariant::Minnesota, OmegaPrior::Informative},
          {"subVAR-Flat0", PriorVariant::Flat, OmegaPrior::Flat},
          {"subVAR-Flat1", PriorVariant::Flat, OmegaPrior::Informative}};
}

std::vector<ReplicationCell> replication_study(const ReplicationConfig& config) {
  if (config.n_reps < 1) throw ArgumentError("replication study needs n_reps >= 1");
  if (config.variants.empty()) throw ArgumentError("replication study needs a variant");
  struct Task {
    int M;
    int q;
    int rep;
  };
  std::vector<Task> tasks;
  for (int M : config.M_list)
    for (int q : config.q_list)
      for (int r = 0; r < config.n_reps; ++r) tasks.push_back({M, q, r});

  const std::size_t n_var = config.variants.size();
  std::vector<hyper::HyperSummary> results(tasks.size() * n_var);
  parallel_for(tasks.size(), config.threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    DgpSpec spec;
    spec.M = task.M;
    spec.q_true = task.q;
    spec.T = config.T;
    spec.seed = derive_seed(config.seed,
                            "replication-M" + std::to_string(task.M) + "-q" + std::to_string(task.q),
                            static_cast<std::uint64_t>(task.rep));
    const auto panel = simulate_dgp(spec);
    auto rd = data::build_lag_matrix(panel.data, config.p);
    for (std::size_t v = 0; v < n_var; ++v) {
      const auto& variant = config.variants[v];
      hyper::HyperPriorConfig hp;
      hp.omega_prior = variant.omega_prior;
      const auto axes = hyper::default_axes(hp, task.M);
      const hyper::SubspaceVar model(rd, variant.variant, {}, axes.q.back());
      hyper::ScoringOptions opts;
      opts.mode = config.mode;
      const auto scored = model.score_grid(hyper::build_grid(axes, variant.variant), hp, opts);
      results[i * n_var + v] = hyper::posterior_summary_q(scored);
    }
  });

  std::vector<ReplicationCell> cells;
  std::map<std::tuple<int, int, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    for (std::size_t v = 0; v < n_var; ++v) {
      const auto key = std::make_tuple(tasks[i].M, tasks[i].q, v);
      auto [it, fresh] = index.try_emplace(key, cells.size());
      if (fresh) {
        ReplicationCell cell;
        cell.M = tasks[i].M;
        cell.q_true = tasks[i].q;
        cell.variant = config.variants[v].name;
        cells.push_back(cell);
      }
      auto& cell = cells[it->second];
      const auto& s = results[i * n_var + v];
      cell.median_q.push_back(s.median_q);
      cell.mean_median_q += s.median_q;
      cell.mean_omega += s.mean_omega;
    }
  for (auto& cell : cells) {
    const double n = static_cast<double>(cell.median_q.size());
    cell.mean_median_q /= n;
    cell.mean_omega /= n;
  }
  return cells;
}

void write_table1_csv(std::ostream& out, const std::vector<ReplicationCell>& cells) {
  std::vector<std::string> variants;
  std::vector<int> qs;
  std::vector<int> Ms;
  std::map<std::tuple<int, std::string, int>, double> value;
  for (const auto& c : cells) {
    if (std::find(variants.begin(), variants.end(), c.variant) == variants.end())
      variants.push_back(c.variant);
    if (std::find(qs.begin(), qs.end(), c.q_true) == qs.end()) qs.push_back(c.q_true);
    if (std::find(Ms.begin(), Ms.end(), c.M) == Ms.end()) Ms.push_back(c.M);
    value[{c.M, c.variant, c.q_true}] = c.mean_median_q;
  }
  std::vector<std::string> header{"M"};
  for (const auto& v : variants)
    for (int q : qs) header.push_back(v + "_q" + std::to_string(q));
  write_csv_row(out, header);
  for (int M : Ms) {
    std::vector<std::string> row{std::to_string(M)};
    for (const auto& v : variants)
      for (int q : qs) {
        const auto it = value.find({M, v, q});
        row.push_back(it == value.end() ? "" : format_double(it->second));
      }
    write_csv_row(out, row);
  }
}

void write_replication_long_csv(std::ostream& out, const std::vector<ReplicationCell>& cells) {
  write_csv_row(out, {"M", "q_true", "variant", "n_reps", "mean_median_q", "mean_omega"});
  for (const auto& c : cells)
    write_csv_row(out, {std::to_string(c.M), std::to_string(c.q_true), c.variant,
                        std::to_string(c.median_q.size()), format_double(c.mean_median_q),
                        format_double(c.mean_omega)});
}

}  // namespace subvar::sim
