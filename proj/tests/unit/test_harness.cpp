#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "experiments.hpp"
#include "gdlab/harness/config.hpp"
#include "gdlab/harness/output.hpp"
#include "gdlab/harness/runner.hpp"
#include "json.hpp"

using namespace gdlab::harness;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("gdlab_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

ExperimentConfig light_vaaler() {
  return parse_config("experiment = \"vaaler-check\"\nJ = [1, 5]\ngrid_points = 200\nrandom_points = 50\n");
}

ExperimentConfig light_pnt() {
  return parse_config("experiment = \"pnt\"\nradii = [60, 120, 240]\nsector_splits = [1, 2]\n");
}

}  // namespace

TEST(Config, ParsesScalarsListsAndComments) {
  const auto cfg = parse_config(
      "# header\n"
      "experiment = \"signi\"   # trailing comment\n"
      "seed = 18446744073709551615\n"
      "c = [\"sqrt2+sqrt3*i\", \"e+pi*i\"]\n"
      "deltas = 0.25\n"
      "\n"
      "eps = 0.04\n");
  EXPECT_EQ(cfg.experiment, "signi");
  EXPECT_EQ(cfg.seed, 18446744073709551615ULL);
  EXPECT_EQ(cfg.c.size(), 2U);
  EXPECT_EQ(cfg.deltas, std::vector<double>{0.25});
  EXPECT_DOUBLE_EQ(cfg.eps, 0.04);
  EXPECT_EQ(cfg.radii, (std::vector<double>{100.0, 200.0, 500.0}));
}

TEST(Config, UnknownKeyNamesLine) {
  try {
    parse_config("experiment = \"pnt\"\nradius = 5\n", "x.cfg");
    FAIL() << "no error";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("x.cfg:2"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("radius"), std::string::npos) << e.what();
  }
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(parse_config("experiment = \"pnt\"\nseed = 1\nseed = 2\n"), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"pnt\"\neps = \"big\"\n"), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"pnt\"\nradii = [1, 2\n"), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"pnt\"\nseed = -1\n"), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"pnt\"\njust words\n"), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"pnt\"\nsamples = 1.5\n"), ConfigError);
}

TEST(Config, ValidationRanges) {
  EXPECT_THROW(parse_config("experiment = \"nope\"\n").validate(), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"fn\"\nA = 1.5\nB = 1.5\n").validate(), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"fn\"\neps = 0.1\n").validate(), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"signi\"\ndeltas = [0.6]\n").validate(), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"vaaler-check\"\nJ = [0]\n").validate(), ConfigError);
  EXPECT_THROW(parse_config("experiment = \"fn\"\nsamples = 0\n").validate(), ConfigError);
  EXPECT_NO_THROW(light_pnt().validate());
}

TEST(Config, HashTracksEveryField) {
  const auto a = light_pnt();
  auto b = a;
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16U);
  b.seed = 2;
  EXPECT_NE(a.hash(), b.hash());
  b = a;
  b.radii.push_back(300.0);
  EXPECT_NE(a.hash(), b.hash());
}

TEST(Output, CsvQuotingAndFnv) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  std::ostringstream os;
  write_csv_record(os, {"x", "1,2"});
  EXPECT_EQ(os.str(), "x,\"1,2\"\r\n");
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(num(0.1), "0.1");
  EXPECT_EQ(num(std::int64_t{-3}), "-3");
}

TEST(StreamRng, DeterministicAndStreamSeparated) {
  auto a = stream_rng(7, 0);
  auto b = stream_rng(7, 0);
  auto c = stream_rng(7, 1);
  EXPECT_EQ(a(), b());
  EXPECT_NE(a(), c());
  for (int k = 0; k < 1000; ++k) {
    const double u = uniform01(a);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Runner, OutputsAreByteIdenticalAcrossRuns) {
  const auto d1 = fresh_dir("det1");
  const auto d2 = fresh_dir("det2");
  const auto cfg = light_vaaler();
  const auto r1 = run_experiment(cfg, d1);
  const auto r2 = run_experiment(cfg, d2);
  ASSERT_TRUE(r1.complete);
  EXPECT_TRUE(r1.pass);
  EXPECT_EQ(slurp(r1.csv), slurp(r2.csv));
  EXPECT_EQ(slurp(r1.json), slurp(r2.json));
  EXPECT_EQ(slurp(r1.manifest), slurp(r2.manifest));
}

TEST(Runner, JsonSummaryShape) {
  const auto d = fresh_dir("shape");
  const auto r = run_experiment(light_vaaler(), d);
  const auto j = nlohmann::json::parse(slurp(r.json));
  for (const char* key : {"experiment", "config_hash", "rows", "fitted_constants", "pass"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["experiment"], "vaaler-check");
  EXPECT_EQ(j["config_hash"], light_vaaler().hash());
  EXPECT_EQ(j["rows"].get<std::size_t>(), r.rows);
  const std::string csv = slurp(r.csv);
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = csv.find("\r\n", pos)) != std::string::npos; pos += 2) ++lines;
  EXPECT_EQ(lines, r.rows + 1);
}

TEST(Runner, ResumeMatchesUninterruptedRun) {
  const auto whole = fresh_dir("whole");
  const auto parts = fresh_dir("parts");
  const auto cfg = light_pnt();
  const auto ref = run_experiment(cfg, whole);
  ASSERT_TRUE(ref.complete);
  ASSERT_GE(ref.cells_total, 3U);
  const auto first = run_experiment(cfg, parts, 1);
  EXPECT_FALSE(first.complete);
  const auto second = run_experiment(cfg, parts, 1);
  EXPECT_FALSE(second.complete);
  EXPECT_EQ(second.cells_resumed, 1U);
  const auto rest = run_experiment(cfg, parts);
  ASSERT_TRUE(rest.complete);
  EXPECT_EQ(rest.cells_resumed, 2U);
  EXPECT_EQ(slurp(ref.csv), slurp(rest.csv));
  EXPECT_EQ(slurp(ref.json), slurp(rest.json));
}

TEST(Runner, TornManifestLineIsRecomputed) {
  const auto whole = fresh_dir("torn_ref");
  const auto torn = fresh_dir("torn");
  const auto cfg = light_pnt();
  const auto ref = run_experiment(cfg, whole);
  run_experiment(cfg, torn, 2);
  {
    std::ofstream out(torn / "pnt.manifest", std::ios::app | std::ios::binary);
    out << "{\"cell\": 2, \"data\": {\"trunc";
  }
  const auto rest = run_experiment(cfg, torn);
  ASSERT_TRUE(rest.complete);
  EXPECT_EQ(rest.cells_resumed, 2U);
  EXPECT_EQ(slurp(ref.csv), slurp(rest.csv));
}

TEST(Runner, ManifestFromAnotherConfigIsDiscarded) {
  const auto d = fresh_dir("stale");
  auto cfg = light_pnt();
  run_experiment(cfg, d, 1);
  cfg.seed = 99;
  const auto r = run_experiment(cfg, d);
  EXPECT_EQ(r.cells_resumed, 0U);
  EXPECT_TRUE(r.complete);
}

TEST(Cli, ExitCodes) {
  const auto d = fresh_dir("cli");
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(d / name) << text;
    return d / name;
  };
  std::ostringstream log, err;
  CliOptions ok;
  ok.experiment = "vaaler-check";
  ok.config = write("v.cfg", "experiment = \"vaaler-check\"\nJ = [1, 5]\ngrid_points = 100\nrandom_points = 10\n");
  ok.out = d / "out";
  EXPECT_EQ(run_cli(ok, log, err), kExitPass);

  CliOptions fail = ok;
  fail.experiment = "pnt";
  fail.config = write("p.cfg", "experiment = \"pnt\"\nradii = [50, 100]\nsector_splits = [1]\npnt_tol = 0.01\n");
  EXPECT_EQ(run_cli(fail, log, err), kExitFail);

  CliOptions bad = ok;
  bad.config = write("bad.cfg", "experiment = \"vaaler-check\"\nbogus = 1\n");
  EXPECT_EQ(run_cli(bad, log, err), kExitError);

  CliOptions mismatch = ok;
  mismatch.experiment = "pnt";
  EXPECT_EQ(run_cli(mismatch, log, err), kExitError);

  CliOptions low = ok;
  low.precision_bits = 32;
  EXPECT_EQ(run_cli(low, log, err), kExitError);

  CliOptions partial = ok;
  partial.out = d / "partial";
  partial.max_cells = 1;
  EXPECT_EQ(run_cli(partial, log, err), kExitError);
}

TEST(Cli, SeedOverrideChangesHash) {
  const auto d = fresh_dir("seed");
  std::ofstream(d / "v.cfg") << "experiment = \"vaaler-check\"\nJ = [1]\ngrid_points = 50\nrandom_points = 5\n";
  std::ostringstream log, err;
  CliOptions opt;
  opt.experiment = "vaaler-check";
  opt.config = d / "v.cfg";
  opt.out = d / "a";
  ASSERT_EQ(run_cli(opt, log, err), kExitPass);
  opt.out = d / "b";
  opt.seed = 42;
  ASSERT_EQ(run_cli(opt, log, err), kExitPass);
  const auto ja = nlohmann::json::parse(slurp(d / "a" / "vaaler-check.json"));
  const auto jb = nlohmann::json::parse(slurp(d / "b" / "vaaler-check.json"));
  EXPECT_NE(ja["config_hash"], jb["config_hash"]);
  EXPECT_EQ(jb["seed"].get<std::uint64_t>(), 42U);
}
