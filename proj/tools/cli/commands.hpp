#pragma once

#include <CLI11.hpp>

#include "run_config.hpp"

namespace subvar::cli {

/// Registers a subcommand; the returned config is resolved and run from main
/// once parsing succeeds.
struct Command {
  std::unique_ptr<RunConfig> config;
  std::function<void(const RunConfig&)> run;
  CLI::App* app = nullptr;
};

Command make_simulate(CLI::App& root);
Command make_fit(CLI::App& root);
Command make_backtest(CLI::App& root);
Command make_approx_error(CLI::App& root);
Command make_replicate_table1(CLI::App& root);
Command make_transform(CLI::App& root);

}  // namespace subvar::cli
