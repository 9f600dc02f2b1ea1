#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "gdlab/harness/config.hpp"

namespace gdlab::harness {

inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFail = 2;

struct RunResult {
  bool complete = false;
  bool pass = false;
  std::size_t cells_total = 0;
  std::size_t cells_resumed = 0;
  std::size_t rows = 0;
  std::string config_hash;
  std::filesystem::path csv;
  std::filesystem::path json;
  std::filesystem::path manifest;
};

/// Runs every grid cell not already recorded in `<out>/<experiment>.manifest`,
/// appending each to the manifest as it completes, then writes
/// `<out>/<experiment>.csv` and `<out>/<experiment>.json`. With max_new_cells
/// set, stops after that many fresh cells and leaves complete = false.
RunResult run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out,
                         std::optional<std::size_t> max_new_cells = std::nullopt, std::ostream* log = nullptr);

struct CliOptions {
  std::string experiment;
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out = ".";
  std::optional<long> precision_bits;
  std::optional<std::size_t> max_cells;
};

/// Loads the config, applies overrides and runs. Returns kExitPass,
/// kExitFail, or kExitError (after printing the reason to `err`).
int run_cli(const CliOptions& opt, std::ostream& log, std::ostream& err);

}  // namespace gdlab::harness
