#pragma once

// Experiment configuration: a flat file of `key = value` lines.
//
//   # comment
//   eps = 0.05
//   c = ["sqrt2+sqrt3*i", "e+pi*i"]
//   d_mode = "trivial"
//   desk_scale = true
//
// Values are numbers, double-quoted strings, booleans, or [lists] of those.
// A scalar is accepted where a list is expected. Unknown keys are errors.

#include <cstdint>
#include <filesystem>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gdlab::harness {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"pnt",    "signi",        "fn",
                                              "metric", "sieve-error",  "vaaler-check",
                                              "expsum-calibrate"};
  return names;
}

struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 1;
  long precision_bits = 128;

  std::vector<std::string> c{"sqrt2+sqrt3*i"};
  double eps = 0.05;
  double A = 0.5;
  double B = 1.5;
  double theta_min = -std::numbers::pi;
  double theta_max = std::numbers::pi;
  double max_radius = 4096.0;

  // pnt, signi
  std::vector<double> radii{100.0, 200.0, 500.0};
  std::vector<std::int64_t> sector_splits{1, 4};
  std::vector<double> deltas{0.05, 0.1, 0.2, 0.5};
  std::int64_t m_count = 3;
  double pnt_tol = 0.20;
  double signi_tol = 0.25;

  // fn, metric
  double N = 50.0;
  std::int64_t samples = 200;
  std::int64_t oracle_samples = 5;

  // sieve-error
  double n_min = 32.0;
  double n_cap = 128.0;
  double p_floor = 16.0;
  std::string d_mode = "all";

  // vaaler-check
  std::vector<std::int64_t> J{1, 5, 20, 100};
  std::int64_t grid_points = 10000;
  std::int64_t random_points = 1000;

  // expsum-calibrate
  std::vector<double> x{20.0, 50.0, 100.0};
  std::int64_t kappa_samples = 1000;
  double x_lo_fraction = 0.5;
  double cs_max = 10.0;

  /// Throws ConfigError on violated ranges.
  void validate() const;
  /// Stable `key=value` listing of every field, one per line.
  std::string canonical() const;
  /// FNV-1a of canonical(), as 16 hex digits.
  std::string hash() const;
};

/// Parses config text on top of the defaults. `source` names the input in errors.
ExperimentConfig parse_config(std::string_view text, const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace gdlab::harness
