#include "gdlab/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gdlab/harness/output.hpp"

namespace gdlab::harness {

namespace {

enum class Kind { Number, String, Bool };

struct Token {
  Kind kind;
  std::string text;
};

struct Value {
  std::vector<Token> items;
  bool is_list = false;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class LineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Token parse_scalar(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw LineError("empty value");
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"') throw LineError("unterminated string");
    const std::string_view body = s.substr(1, s.size() - 2);
    if (body.find('"') != std::string_view::npos) throw LineError("stray quote in string");
    return {Kind::String, std::string(body)};
  }
  if (s == "true" || s == "false") return {Kind::Bool, std::string(s)};
  return {Kind::Number, std::string(s)};
}

// Splits on commas outside quotes.
std::vector<std::string_view> split_list(std::string_view body) {
  std::vector<std::string_view> parts;
  bool quoted = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '"') quoted = !quoted;
    if (body[i] == ',' && !quoted) {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  if (quoted) throw LineError("unterminated string");
  parts.push_back(body.substr(start));
  return parts;
}

Value parse_value(std::string_view s) {
  s = trim(s);
  Value v;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw LineError("unterminated list");
    v.is_list = true;
    const std::string_view body = trim(s.substr(1, s.size() - 2));
    if (body.empty()) return v;
    for (std::string_view part : split_list(body)) v.items.push_back(parse_scalar(part));
    return v;
  }
  v.items.push_back(parse_scalar(s));
  return v;
}

// Strips a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

double to_double(const Token& t) {
  if (t.kind != Kind::Number) throw LineError("expected a number, got '" + t.text + "'");
  double v = 0.0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw LineError("bad number '" + t.text + "'");
  return v;
}

std::int64_t to_int(const Token& t) {
  if (t.kind != Kind::Number) throw LineError("expected an integer, got '" + t.text + "'");
  std::int64_t v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw LineError("bad integer '" + t.text + "'");
  return v;
}

std::uint64_t to_u64(const Token& t) {
  if (t.kind != Kind::Number) throw LineError("expected an unsigned integer, got '" + t.text + "'");
  std::uint64_t v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw LineError("bad unsigned integer '" + t.text + "'");
  return v;
}

std::string to_string_value(const Token& t) {
  if (t.kind != Kind::String) throw LineError("expected a quoted string, got '" + t.text + "'");
  return t.text;
}

const Token& single(const Value& v) {
  if (v.is_list || v.items.size() != 1) throw LineError("expected a single value, got a list");
  return v.items.front();
}

template <class T, class Conv>
std::vector<T> list_of(const Value& v, Conv conv) {
  std::vector<T> out;
  for (const Token& t : v.items) out.push_back(conv(t));
  return out;
}

using Setter = std::function<void(ExperimentConfig&, const Value&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> m;
    auto real = [&m](const char* key, double ExperimentConfig::*field) {
      m[key] = [field](ExperimentConfig& c, const Value& v) { c.*field = to_double(single(v)); };
    };
    auto integer = [&m](const char* key, std::int64_t ExperimentConfig::*field) {
      m[key] = [field](ExperimentConfig& c, const Value& v) { c.*field = to_int(single(v)); };
    };
    m["experiment"] = [](ExperimentConfig& c, const Value& v) { c.experiment = to_string_value(single(v)); };
    m["seed"] = [](ExperimentConfig& c, const Value& v) { c.seed = to_u64(single(v)); };
    m["precision_bits"] = [](ExperimentConfig& c, const Value& v) { c.precision_bits = to_int(single(v)); };
    m["c"] = [](ExperimentConfig& c, const Value& v) { c.c = list_of<std::string>(v, to_string_value); };
    m["d_mode"] = [](ExperimentConfig& c, const Value& v) { c.d_mode = to_string_value(single(v)); };
    m["radii"] = [](ExperimentConfig& c, const Value& v) { c.radii = list_of<double>(v, to_double); };
    m["deltas"] = [](ExperimentConfig& c, const Value& v) { c.deltas = list_of<double>(v, to_double); };
    m["x"] = [](ExperimentConfig& c, const Value& v) { c.x = list_of<double>(v, to_double); };
    m["sector_splits"] = [](ExperimentConfig& c, const Value& v) {
      c.sector_splits = list_of<std::int64_t>(v, to_int);
    };
    m["J"] = [](ExperimentConfig& c, const Value& v) { c.J = list_of<std::int64_t>(v, to_int); };
    real("eps", &ExperimentConfig::eps);
    real("A", &ExperimentConfig::A);
    real("B", &ExperimentConfig::B);
    real("theta_min", &ExperimentConfig::theta_min);
    real("theta_max", &ExperimentConfig::theta_max);
    real("max_radius", &ExperimentConfig::max_radius);
    real("pnt_tol", &ExperimentConfig::pnt_tol);
    real("signi_tol", &ExperimentConfig::signi_tol);
    real("N", &ExperimentConfig::N);
    real("n_min", &ExperimentConfig::n_min);
    real("n_cap", &ExperimentConfig::n_cap);
    real("p_floor", &ExperimentConfig::p_floor);
    real("x_lo_fraction", &ExperimentConfig::x_lo_fraction);
    real("cs_max", &ExperimentConfig::cs_max);
    integer("m_count", &ExperimentConfig::m_count);
    integer("samples", &ExperimentConfig::samples);
    integer("oracle_samples", &ExperimentConfig::oracle_samples);
    integer("grid_points", &ExperimentConfig::grid_points);
    integer("random_points", &ExperimentConfig::random_points);
    integer("kappa_samples", &ExperimentConfig::kappa_samples);
    return m;
  }();
  return table;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_same_v<T, std::string>) {
      out += "\"" + xs[i] + "\"";
    } else {
      out += num(xs[i]);
    }
  }
  return out + "]";
}

}  // namespace

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (std::find(experiment_names().begin(), experiment_names().end(), experiment) == experiment_names().end()) {
    fail("unknown experiment '" + experiment + "'");
  }
  if (precision_bits < 64) fail("precision_bits must be >= 64");
  if (!(A > 0.0 && A < B)) fail("need 0 < A < B");
  if (!(eps > 0.0 && eps < 1.0 / 12.0)) fail("need 0 < eps < 1/12");
  if (samples < 1) fail("samples must be >= 1");
  if (oracle_samples < 0) fail("oracle_samples must be >= 0");
  if (!(theta_min < theta_max && theta_max <= theta_min + 2.0 * std::numbers::pi + 1e-12)) {
    fail("need theta_min < theta_max <= theta_min + 2 pi");
  }
  if (c.empty()) fail("c must name at least one value");
  for (double d : deltas) {
    if (!(d > 0.0 && d <= 0.5)) fail("every delta must lie in (0, 1/2]");
  }
  for (double r : radii) {
    if (!(r > 1.0)) fail("every radius must exceed 1");
  }
  for (auto s : sector_splits) {
    if (s < 1) fail("sector_splits entries must be >= 1");
  }
  for (auto j : J) {
    if (j < 1) fail("J entries must be >= 1");
  }
  for (double v : x) {
    if (!(v > 0.0)) fail("x entries must be positive");
  }
  if (!(x_lo_fraction >= 0.0 && x_lo_fraction < 1.0)) fail("x_lo_fraction must lie in [0, 1)");
  if (m_count < 1) fail("m_count must be >= 1");
  if (!(N > 0.0)) fail("N must be positive");
  if (!(n_min >= 2.0 && n_min <= n_cap)) fail("need 2 <= n_min <= n_cap");
  if (!(p_floor >= 2.0)) fail("p_floor must be >= 2");
  if (d_mode != "all" && d_mode != "trivial") fail("d_mode must be \"all\" or \"trivial\"");
  if (grid_points < 1 || random_points < 0 || kappa_samples < 1) fail("grid sizes must be positive");
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream os;
  os << "experiment=" << experiment << '\n'
     << "seed=" << seed << '\n'
     << "precision_bits=" << precision_bits << '\n'
     << "c=" << join(c) << '\n'
     << "eps=" << num(eps) << '\n'
     << "A=" << num(A) << '\n'
     << "B=" << num(B) << '\n'
     << "theta_min=" << num(theta_min) << '\n'
     << "theta_max=" << num(theta_max) << '\n'
     << "max_radius=" << num(max_radius) << '\n'
     << "radii=" << join(radii) << '\n'
     << "sector_splits=" << join(sector_splits) << '\n'
     << "deltas=" << join(deltas) << '\n'
     << "m_count=" << m_count << '\n'
     << "pnt_tol=" << num(pnt_tol) << '\n'
     << "signi_tol=" << num(signi_tol) << '\n'
     << "N=" << num(N) << '\n'
     << "samples=" << samples << '\n'
     << "oracle_samples=" << oracle_samples << '\n'
     << "n_min=" << num(n_min) << '\n'
     << "n_cap=" << num(n_cap) << '\n'
     << "p_floor=" << num(p_floor) << '\n'
     << "d_mode=" << d_mode << '\n'
     << "J=" << join(J) << '\n'
     << "grid_points=" << grid_points << '\n'
     << "random_points=" << random_points << '\n'
     << "x=" << join(x) << '\n'
     << "kappa_samples=" << kappa_samples << '\n'
     << "x_lo_fraction=" << num(x_lo_fraction) << '\n'
     << "cs_max=" << num(cs_max) << '\n';
  return os.str();
}

std::string ExperimentConfig::hash() const { return hex64(fnv1a(canonical())); }

ExperimentConfig parse_config(std::string_view text, const std::string& source) {
  ExperimentConfig cfg;
  std::vector<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected `key = value`");
    const std::string key(trim(line.substr(0, eq)));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(where + "unknown key '" + key + "'");
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) throw ConfigError(where + "duplicate key '" + key + "'");
    seen.push_back(key);
    try {
      it->second(cfg, parse_value(line.substr(eq + 1)));
    } catch (const LineError& e) {
      throw ConfigError(where + key + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

}  // namespace gdlab::harness
