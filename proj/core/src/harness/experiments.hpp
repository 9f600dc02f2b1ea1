#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gdlab/harness/config.hpp"
#include "json.hpp"

namespace gdlab::harness {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Summary {
  Table table;
  Json fitted = Json::object();
  Json metadata = Json::object();
  bool pass = true;
};

/// A sweep split into independent grid cells. run_cell results are persisted
/// in the manifest, so finalize must depend on nothing else.
class Experiment {
 public:
  virtual ~Experiment() = default;
  virtual std::size_t cell_count() const = 0;
  virtual Json run_cell(std::size_t index) const = 0;
  virtual Summary finalize(const std::vector<Json>& cells) const = 0;
};

std::unique_ptr<Experiment> make_experiment(const ExperimentConfig& cfg);

/// mt19937_64 seeded from (seed, stream) through splitmix64.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream);
/// (rng() >> 11) * 2^-53, in [0, 1).
double uniform01(std::mt19937_64& rng);

}  // namespace gdlab::harness
