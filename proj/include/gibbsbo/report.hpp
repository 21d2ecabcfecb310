#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gibbsbo {

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict v);

/// Worst of two verdicts: fail beats inconclusive beats pass.
Verdict worst(Verdict a, Verdict b);

struct VerdictLine {
  /// Acceptance criterion this check belongs to, e.g. "4".
  std::string criterion;
  std::string check;
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct ExperimentReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<VerdictLine> verdicts;
  std::vector<std::string> warnings;

  void add_parameter(std::string key, std::string value);
  void add_row(std::vector<std::string> row);
  void add_verdict(std::string criterion, std::string check, Verdict verdict, std::string detail);

  bool all_pass() const;
  /// Worst verdict among lines for this criterion (pass if none).
  Verdict criterion_verdict(std::string_view criterion) const;

  /// Header row plus one line per result row.
  std::string csv() const;
  /// Parameters, warnings and one line per verdict.
  std::string verdict_text() const;
};

/// Shortest round-trip decimal form; deterministic across runs.
std::string format_number(double x);

/// Space-separated list of numbers (safe inside a CSV cell).
template <class Seq>
std::string format_list(const Seq& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    out += format_number(static_cast<double>(v));
  }
  return out;
}

/// Oracle agreement with the 3-SE margin. Inconclusive when the standard
/// error exceeds 10% of the reference magnitude (underpowered run).
Verdict agreement_verdict(double estimate, double std_error, double reference);

}  // namespace gibbsbo
