#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "commands.hpp"
#include "subvar/errors.hpp"

namespace {

// Exit status by error class, so scripts can tell bad input from bad math.
int exit_code(const std::exception& e) {
  if (dynamic_cast<const subvar::ArgumentError*>(&e)) return 2;
  if (dynamic_cast<const subvar::ConfigError*>(&e)) return 3;
  if (dynamic_cast<const subvar::DataError*>(&e)) return 4;
  if (dynamic_cast<const subvar::DomainError*>(&e)) return 4;
  if (dynamic_cast<const subvar::IoError*>(&e)) return 5;
  if (dynamic_cast<const subvar::NumericalError*>(&e)) return 6;
  return 1;
}

const char* kind(const std::exception& e) {
  if (dynamic_cast<const subvar::ArgumentError*>(&e)) return "argument error";
  if (dynamic_cast<const subvar::ConfigError*>(&e)) return "configuration error";
  if (dynamic_cast<const subvar::DataError*>(&e)) return "data error";
  if (dynamic_cast<const subvar::DomainError*>(&e)) return "domain error";
  if (dynamic_cast<const subvar::IoError*>(&e)) return "I/O error";
  if (dynamic_cast<const subvar::NumericalError*>(&e)) return "numerical error";
  return "error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian VARs with subspace shrinkage toward a factor model"};
  app.require_subcommand(1);
  std::vector<subvar::cli::Command> commands;
  commands.push_back(subvar::cli::make_simulate(app));
  commands.push_back(subvar::cli::make_fit(app));
  commands.push_back(subvar::cli::make_backtest(app));
  commands.push_back(subvar::cli::make_approx_error(app));
  commands.push_back(subvar::cli::make_replicate_table1(app));
  commands.push_back(subvar::cli::make_transform(app));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    for (auto& c : commands) {
      if (!c.app->parsed()) continue;
      c.config->resolve();
      c.run(*c.config);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "subvar: %s: %s\n", kind(e), e.what());
    return exit_code(e);
  }
  return 0;
}
