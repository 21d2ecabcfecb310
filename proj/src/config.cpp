#include "gibbsbo/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "gibbsbo/errors.hpp"
#include "gibbsbo/experiments.hpp"

namespace gibbsbo {

namespace {

enum class KeyType {
  positive_int,
  positive_count,
  positive_int_list,
  positive_real,
  real,
  positive_real_list,
  name_list,
};

const std::map<std::string, KeyType>& key_types() {
  static const std::map<std::string, KeyType> types{
      {"N", KeyType::positive_int},
      {"N_list", KeyType::positive_int_list},
      {"slope_N_list", KeyType::positive_int_list},
      {"ratio_N", KeyType::positive_int},
      {"mc_N", KeyType::positive_int},
      {"quadrature_N", KeyType::positive_int},
      {"grid_factor", KeyType::positive_int},
      {"points", KeyType::positive_int},
      {"limit", KeyType::positive_int},
      {"draws", KeyType::positive_int},
      {"dimension", KeyType::positive_int},
      {"specs_per_kind", KeyType::positive_int},
      {"terms", KeyType::positive_int},
      {"panels", KeyType::positive_int},
      {"sup_scale", KeyType::positive_int},
      {"samples", KeyType::positive_count},
      {"R", KeyType::positive_real},
      {"taper", KeyType::positive_real},
      {"dt", KeyType::positive_real},
      {"step", KeyType::positive_real},
      {"amplitude", KeyType::positive_real},
      {"C1", KeyType::positive_real},
      {"C2", KeyType::positive_real},
      {"quadrature_t", KeyType::positive_real},
      {"s", KeyType::real},
      {"t", KeyType::real},
      {"lambda_list", KeyType::positive_real_list},
      {"p_list", KeyType::positive_real_list},
      {"eps_list", KeyType::positive_real_list},
      {"observables", KeyType::name_list},
  };
  return types;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto next = s.find_first_of(" ,\t", pos);
    const auto item = s.substr(pos, next == std::string_view::npos ? s.npos : next - pos);
    if (!item.empty()) out.push_back(item);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  if (begin != end && *begin == '+') ++begin;
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end && begin != end;
}

long long parse_int(std::string_view s) {
  long long v = 0;
  if (parse_number(s, v)) return v;
  // allow integral scientific notation such as 1e5
  double d = 0.0;
  if (parse_number(s, d) && std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9e18) {
    return static_cast<long long>(d);
  }
  throw std::invalid_argument("not an integer");
}

double parse_real(std::string_view s) {
  double v = 0.0;
  if (!parse_number(s, v) || !std::isfinite(v)) throw std::invalid_argument("not a finite number");
  return v;
}

void check_value(const std::string& key, KeyType type, std::string_view value) {
  auto positive_int = [](std::string_view item) {
    const auto v = parse_int(item);
    if (v <= 0 || v > 1'000'000'000'000LL) throw std::invalid_argument("must be positive");
  };
  auto positive_real = [](std::string_view item) {
    if (!(parse_real(item) > 0.0)) throw std::invalid_argument("must be positive");
  };
  auto list = [](std::string_view v) {
    auto items = split_list(v);
    if (items.empty()) throw std::invalid_argument("empty list");
    return items;
  };
  try {
    switch (type) {
      case KeyType::positive_int:
      case KeyType::positive_count:
        positive_int(value);
        if (type == KeyType::positive_int && parse_int(value) > 1'000'000'000) {
          throw std::invalid_argument("too large");
        }
        break;
      case KeyType::positive_int_list:
        for (auto item : list(value)) {
          positive_int(item);
          if (parse_int(item) > 1'000'000'000) throw std::invalid_argument("too large");
        }
        break;
      case KeyType::positive_real:
        positive_real(value);
        break;
      case KeyType::real:
        parse_real(value);
        break;
      case KeyType::positive_real_list:
        for (auto item : list(value)) positive_real(item);
        break;
      case KeyType::name_list:
        list(value);
        break;
    }
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("malformed value for " + key + ": '" + std::string(value) +
                                "' (" + e.what() + ")");
  }
}

// Typed access to validated values.
class Values {
 public:
  explicit Values(const RunConfig& c) : c_(c) {}

  bool has(const std::string& key) const { return c_.values.count(key) > 0; }
  const std::string& text(const std::string& key) const { return c_.values.at(key); }

  void get(const std::string& key, int& out) const {
    if (has(key)) out = static_cast<int>(parse_int(text(key)));
  }
  void get(const std::string& key, std::size_t& out) const {
    if (has(key)) out = static_cast<std::size_t>(parse_int(text(key)));
  }
  void get(const std::string& key, double& out) const {
    if (has(key)) out = parse_real(text(key));
  }
  void get(const std::string& key, std::vector<int>& out) const {
    if (!has(key)) return;
    out.clear();
    for (auto item : split_list(text(key))) out.push_back(static_cast<int>(parse_int(item)));
  }
  void get(const std::string& key, std::vector<double>& out) const {
    if (!has(key)) return;
    out.clear();
    for (auto item : split_list(text(key))) out.push_back(parse_real(item));
  }
  void get(const std::string& key, std::vector<std::string>& out) const {
    if (!has(key)) return;
    out.clear();
    for (auto item : split_list(text(key))) out.emplace_back(item);
  }
  void get_cutoff(CutoffSpec& out) const {
    if (has("R")) out = cutoff_with_radius(parse_real(text("R")));
    get("taper", out.taper);
  }

 private:
  const RunConfig& c_;
};

}  // namespace

ConfigError::ConfigError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

void RunConfig::set(const std::string& key, const std::string& value, int line) {
  const std::string v(trim(value));
  if (key == "experiment") {
    if (v.empty()) throw ConfigError(line, "empty value for experiment");
    experiment = v;
  } else if (key == "seed") {
    std::uint64_t s = 0;
    if (!parse_number(std::string_view(v), s)) {
      throw ConfigError(line, "malformed value for seed: '" + v + "' (not an unsigned integer)");
    }
    seed = s;
  } else if (key == "output_dir") {
    if (v.empty()) throw ConfigError(line, "empty value for output_dir");
    output_dir = v;
  } else {
    const auto it = key_types().find(key);
    if (it == key_types().end()) throw ConfigError(line, "unknown key: " + key);
    try {
      check_value(key, it->second, v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line, e.what());
    }
    values[key] = v;
  }
  lines[key] = line;
}

RunConfig parse_config_entries(std::string_view text) {
  RunConfig config;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError(line_no, "missing key before '='");
    if (config.lines.count(key)) throw ConfigError(line_no, "duplicate key: " + key);
    config.set(key, std::string(line.substr(eq + 1)), line_no);
  }
  return config;
}

RunConfig parse_config(std::string_view text) {
  auto config = parse_config_entries(text);
  validate_config(config);
  return config;
}

const std::vector<std::string>& experiment_keys(const std::string& experiment) {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"conservation", {"N", "t", "dt", "grid_factor"}},
      {"liouville", {"N_list", "points", "step"}},
      {"resonance", {"limit"}},
      {"cauchy_g", {"N_list", "samples"}},
      {"cauchy_f", {"N_list", "slope_N_list", "ratio_N", "samples"}},
      {"chaos_bounds", {"dimension", "specs_per_kind", "terms", "p_list", "samples"}},
      {"khinchin", {"samples"}},
      {"invariance", {"N", "R", "taper", "t", "dt", "grid_factor", "observables", "samples"}},
      {"density_lp", {"N_list", "p_list", "R", "taper", "samples"}},
      {"pi_square", {"N_list", "s", "mc_N", "samples"}},
      {"picard",
       {"N_list", "s", "t", "mc_N", "samples", "quadrature_N", "quadrature_t", "panels"}},
      {"gauge", {"N", "draws", "s", "amplitude"}},
      {"convergence_in_measure", {"N_list", "eps_list", "R", "taper", "samples"}},
      {"linfty_tail", {"N", "lambda_list", "C1", "C2", "sup_scale", "samples"}},
  };
  const auto it = keys.find(experiment);
  if (it == keys.end()) throw ConfigError(0, "unknown experiment: " + experiment);
  return it->second;
}

void validate_config(const RunConfig& config) {
  if (config.experiment.empty()) throw ConfigError(0, "missing required key: experiment");
  const int exp_line = config.lines.count("experiment") ? config.lines.at("experiment") : 0;
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), config.experiment) == names.end()) {
    throw ConfigError(exp_line, "unknown experiment: " + config.experiment);
  }
  const auto& allowed = experiment_keys(config.experiment);
  for (const auto& [key, value] : config.values) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(config.lines.at(key),
                        "key " + key + " does not apply to experiment " + config.experiment);
    }
  }
}

ExperimentReport run_experiment(const RunConfig& config) {
  validate_config(config);
  const Values v(config);
  const StreamFactory streams(config.seed);
  const auto& name = config.experiment;

  if (name == "conservation") {
    ConservationParams p;
    v.get("N", p.N);
    v.get("t", p.t);
    v.get("dt", p.dt);
    v.get("grid_factor", p.grid_factor);
    return conservation_experiment(p, streams);
  }
  if (name == "liouville") {
    LiouvilleParams p;
    v.get("N_list", p.N_list);
    v.get("points", p.points);
    v.get("step", p.step);
    return liouville_experiment(p, streams);
  }
  if (name == "resonance") {
    ResonanceParams p;
    v.get("limit", p.limit);
    return resonance_experiment(p);
  }
  if (name == "cauchy_g") {
    CauchyGParams p;
    v.get("N_list", p.N_list);
    v.get("samples", p.samples);
    return cauchy_g_experiment(p, streams);
  }
  if (name == "cauchy_f") {
    CauchyFParams p;
    v.get("N_list", p.N_list);
    v.get("slope_N_list", p.slope_N_list);
    v.get("ratio_N", p.ratio_N);
    v.get("samples", p.samples);
    return cauchy_f_experiment(p, streams);
  }
  if (name == "chaos_bounds") {
    ChaosBoundsParams p;
    v.get("dimension", p.dimension);
    v.get("specs_per_kind", p.specs_per_kind);
    v.get("terms", p.terms);
    v.get("p_list", p.p_list);
    v.get("samples", p.samples);
    return chaos_bounds_experiment(p, streams);
  }
  if (name == "khinchin") {
    KhinchinParams p;
    v.get("samples", p.samples);
    return khinchin_experiment(p, streams);
  }
  if (name == "invariance") {
    InvarianceParams p;
    v.get("N", p.N);
    v.get_cutoff(p.cutoff);
    v.get("t", p.t);
    v.get("dt", p.integrator.dt);
    v.get("grid_factor", p.integrator.grid_factor);
    v.get("observables", p.observables);
    v.get("samples", p.samples);
    return invariance_experiment(p, streams);
  }
  if (name == "density_lp") {
    DensityLpParams p;
    v.get("N_list", p.N_list);
    v.get("p_list", p.p_list);
    v.get_cutoff(p.cutoff);
    v.get("samples", p.samples);
    return density_lp_experiment(p, streams);
  }
  if (name == "pi_square") {
    PiSquareParams p;
    v.get("N_list", p.N_list);
    v.get("s", p.s);
    v.get("mc_N", p.mc_N);
    v.get("samples", p.samples);
    return pi_square_experiment(p, streams);
  }
  if (name == "picard") {
    PicardParams p;
    v.get("N_list", p.N_list);
    v.get("s", p.s);
    v.get("t", p.t);
    v.get("mc_N", p.mc_N);
    v.get("samples", p.samples);
    v.get("quadrature_N", p.quadrature_N);
    v.get("quadrature_t", p.quadrature_t);
    v.get("panels", p.panels);
    return picard_experiment(p, streams);
  }
  if (name == "gauge") {
    GaugeParams p;
    v.get("N", p.N);
    v.get("draws", p.draws);
    v.get("s", p.s);
    v.get("amplitude", p.amplitude);
    return gauge_experiment(p, streams);
  }
  if (name == "convergence_in_measure") {
    ConvergenceParams p;
    v.get("N_list", p.N_list);
    v.get("eps_list", p.eps_list);
    v.get_cutoff(p.cutoff);
    v.get("samples", p.samples);
    return convergence_in_measure_experiment(p, streams);
  }
  LinftyParams p;
  v.get("N", p.N);
  v.get("lambda_list", p.lambda_list);
  v.get("C1", p.C1);
  v.get("C2", p.C2);
  v.get("sup_scale", p.sup_scale);
  v.get("samples", p.samples);
  return linfty_tail_experiment(p, streams);
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << content;
  file.close();
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ExperimentReport report;
  try {
    report = run_experiment(config);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "experiment " << config.experiment << " aborted: " << e.what() << '\n';
    return 2;
  }

  const std::filesystem::path dir(config.output_dir);
  const std::string stem = config.experiment + "_" + std::to_string(config.seed);
  try {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    write_file(dir / (stem + ".csv"), report.csv());
    write_file(dir / (stem + ".verdict.txt"), report.verdict_text());
  } catch (const std::exception& e) {
    err << "I/O error: " << e.what() << '\n';
    return 2;
  }

  out << report.verdict_text();
  out << "wrote " << (dir / (stem + ".csv")).string() << " and "
      << (dir / (stem + ".verdict.txt")).string() << '\n';
  return report.all_pass() ? 0 : 1;
}

}  // namespace gibbsbo
