#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gibbsbo/report.hpp"

namespace gibbsbo {

/// Malformed or inconsistent configuration. `line` is 0 when the problem is
/// not tied to a line (command-line flag or missing key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// One batch run. Experiment parameters are kept as validated text and only
/// converted when the experiment is built, so every key has a single parser.
struct RunConfig {
  std::string experiment;
  std::uint64_t seed = 42;
  std::string output_dir = ".";
  /// Experiment parameters by key (N, N_list, samples, R, taper, s, t, ...).
  std::map<std::string, std::string> values;
  /// Source line of each key, for diagnostics.
  std::map<std::string, int> lines;

  /// Sets a key after checking its name and value; line 0 for flags.
  void set(const std::string& key, const std::string& value, int line = 0);
};

/// Parses `key = value` lines with `#` comments. Unknown keys and malformed
/// values raise ConfigError naming the key and line. Does not require
/// `experiment`; see validate_config.
RunConfig parse_config_entries(std::string_view text);

/// parse_config_entries followed by validate_config.
RunConfig parse_config(std::string_view text);

/// Checks that the experiment is named and known and that every parameter
/// applies to it.
void validate_config(const RunConfig& config);

/// Keys accepted for an experiment, besides experiment, seed and output_dir.
const std::vector<std::string>& experiment_keys(const std::string& experiment);

/// Builds and runs the configured experiment.
ExperimentReport run_experiment(const RunConfig& config);

/// Runs the experiment, writes `<experiment>_<seed>.csv` and
/// `<experiment>_<seed>.verdict.txt` to output_dir and prints a summary.
/// Returns 0 if every verdict passes, 1 otherwise, 2 on configuration or
/// I/O errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gibbsbo
