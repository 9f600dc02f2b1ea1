#include "gdlab/harness/runner.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "experiments.hpp"
#include "gdlab/harness/output.hpp"

namespace gdlab::harness {

namespace {

std::map<std::size_t, Json> read_manifest(const std::filesystem::path& path, const std::string& hash,
                                          std::size_t cells, std::ostream* log) {
  std::map<std::size_t, Json> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line)) return done;
  const Json head = Json::parse(line, nullptr, false);
  if (head.is_discarded() || !head.contains("config_hash") || head["config_hash"] != hash ||
      head.value("cells", std::size_t{0}) != cells) {
    if (log) *log << "manifest " << path.string() << " belongs to another configuration; starting over\n";
    return done;
  }
  while (std::getline(in, line)) {
    const Json rec = Json::parse(line, nullptr, false);
    // A torn final line from an interrupted write is dropped and recomputed.
    if (rec.is_discarded() || !rec.contains("cell") || !rec.contains("data")) break;
    done[rec["cell"].get<std::size_t>()] = rec["data"];
  }
  return done;
}

void write_manifest_head(const std::filesystem::path& path, const ExperimentConfig& cfg, std::size_t cells,
                         const std::map<std::size_t, Json>& done) {
  std::ofstream out(path, std::ios::trunc);
  out << Json{{"config_hash", cfg.hash()}, {"experiment", cfg.experiment}, {"cells", cells}}.dump() << '\n';
  for (const auto& [i, data] : done) out << Json{{"cell", i}, {"data", data}}.dump() << '\n';
  if (!out) throw std::runtime_error("cannot write manifest " + path.string());
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out,
                         std::optional<std::size_t> max_new_cells, std::ostream* log) {
  cfg.validate();
  std::filesystem::create_directories(out);
  const auto experiment = make_experiment(cfg);

  RunResult res;
  res.config_hash = cfg.hash();
  res.cells_total = experiment->cell_count();
  res.manifest = out / (cfg.experiment + ".manifest");
  res.csv = out / (cfg.experiment + ".csv");
  res.json = out / (cfg.experiment + ".json");

  std::map<std::size_t, Json> done = read_manifest(res.manifest, res.config_hash, res.cells_total, log);
  res.cells_resumed = done.size();
  write_manifest_head(res.manifest, cfg, res.cells_total, done);

  std::ofstream manifest(res.manifest, std::ios::app);
  std::size_t fresh = 0;
  for (std::size_t i = 0; i < res.cells_total; ++i) {
    if (done.count(i)) continue;
    if (max_new_cells && fresh >= *max_new_cells) {
      if (log) *log << "stopped after " << fresh << " new cells; rerun to resume\n";
      return res;
    }
    Json data = experiment->run_cell(i);
    manifest << Json{{"cell", i}, {"data", data}}.dump() << '\n';
    manifest.flush();
    done.emplace(i, std::move(data));
    ++fresh;
    if (log) *log << cfg.experiment << ": cell " << i + 1 << "/" << res.cells_total << " done\n";
  }

  std::vector<Json> cells;
  cells.reserve(done.size());
  for (auto& [i, data] : done) cells.push_back(data);
  Summary summary = experiment->finalize(cells);

  const std::string version = GDLAB_VERSION;
  const std::string bits = num(static_cast<std::int64_t>(cfg.precision_bits));
  {
    std::ofstream csv(res.csv, std::ios::binary | std::ios::trunc);
    std::vector<std::string> header = summary.table.header;
    header.insert(header.end(), {"config_hash", "version", "precision_bits"});
    write_csv_record(csv, header);
    for (auto row : summary.table.rows) {
      row.insert(row.end(), {res.config_hash, version, bits});
      write_csv_record(csv, row);
    }
    if (!csv) throw std::runtime_error("cannot write " + res.csv.string());
  }
  {
    Json j = {{"experiment", cfg.experiment},
              {"config_hash", res.config_hash},
              {"rows", summary.table.rows.size()},
              {"fitted_constants", summary.fitted},
              {"pass", summary.pass},
              {"version", version},
              {"precision_bits", cfg.precision_bits},
              {"seed", cfg.seed},
              {"metadata", summary.metadata}};
    std::ofstream js(res.json, std::ios::binary | std::ios::trunc);
    js << j.dump(2) << '\n';
    if (!js) throw std::runtime_error("cannot write " + res.json.string());
  }
  res.rows = summary.table.rows.size();
  res.complete = true;
  res.pass = summary.pass;
  return res;
}

int run_cli(const CliOptions& opt, std::ostream& log, std::ostream& err) {
  try {
    ExperimentConfig cfg = load_config(opt.config);
    if (!cfg.experiment.empty() && cfg.experiment != opt.experiment) {
      throw ConfigError("config is for experiment '" + cfg.experiment + "', not '" + opt.experiment + "'");
    }
    cfg.experiment = opt.experiment;
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.precision_bits) cfg.precision_bits = *opt.precision_bits;
    const RunResult res = run_experiment(cfg, opt.out, opt.max_cells, &log);
    if (!res.complete) return kExitError;
    log << opt.experiment << ": " << res.rows << " rows, " << (res.pass ? "PASS" : "FAIL") << " -> "
        << res.csv.string() << '\n';
    return res.pass ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    err << "gdlab: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace gdlab::harness
