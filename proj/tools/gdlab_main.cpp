#include <CLI11.hpp>

#include <iostream>

#include "gdlab/harness/config.hpp"
#include "gdlab/harness/runner.hpp"

int main(int argc, char** argv) {
  using namespace gdlab::harness;
  CLI::App app{"Gaussian-prime Diophantine approximation experiments"};
  CliOptions opt;
  std::uint64_t seed = 0;
  long precision = 0;
  std::size_t max_cells = 0;

  app.add_option("experiment", opt.experiment, "Experiment to run")
      ->required()
      ->check(CLI::IsMember(experiment_names()));
  app.add_option("--config", opt.config, "Key/value config file")->required()->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed (overrides config)");
  app.add_option("--out", opt.out, "Output directory")->capture_default_str();
  auto* prec_opt = app.add_option("--precision", precision, "Working precision in bits (>= 64)");
  auto* cells_opt = app.add_option("--max-cells", max_cells, "Stop after this many new grid cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitError;
  }
  if (*seed_opt) opt.seed = seed;
  if (*prec_opt) opt.precision_bits = precision;
  if (*cells_opt) opt.max_cells = max_cells;
  return run_cli(opt, std::cerr, std::cerr);
}
