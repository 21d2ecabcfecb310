#include "gibbsbo/report.hpp"

#include <charconv>
#include <cmath>

namespace gibbsbo {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "fail";
}

Verdict worst(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

void ExperimentReport::add_parameter(std::string key, std::string value) {
  parameters.emplace_back(std::move(key), std::move(value));
}

void ExperimentReport::add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

void ExperimentReport::add_verdict(std::string criterion, std::string check, Verdict verdict,
                                   std::string detail) {
  verdicts.push_back({std::move(criterion), std::move(check), verdict, std::move(detail)});
}

bool ExperimentReport::all_pass() const {
  for (const auto& v : verdicts) {
    if (v.verdict != Verdict::pass) return false;
  }
  return true;
}

Verdict ExperimentReport::criterion_verdict(std::string_view criterion) const {
  Verdict out = Verdict::pass;
  for (const auto& v : verdicts) {
    if (v.criterion == criterion) out = worst(out, v.verdict);
  }
  return out;
}

std::string ExperimentReport::csv() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out;
}

std::string ExperimentReport::verdict_text() const {
  std::string out = "experiment: " + experiment + "\n";
  for (const auto& [k, v] : parameters) out += "  " + k + " = " + v + "\n";
  for (const auto& w : warnings) out += "warning: " + w + "\n";
  for (const auto& v : verdicts) {
    out += "[" + std::string(to_string(v.verdict)) + "] criterion " + v.criterion + ": " +
           v.check;
    if (!v.detail.empty()) out += " (" + v.detail + ")";
    out += "\n";
  }
  out += all_pass() ? "overall: pass\n" : "overall: not all checks passed\n";
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Verdict agreement_verdict(double estimate, double std_error, double reference) {
  if (!std::isfinite(estimate) || !std::isfinite(std_error)) return Verdict::fail;
  if (std_error > 0.1 * std::abs(reference)) return Verdict::inconclusive;
  return std::abs(estimate - reference) <= 3.0 * std_error ? Verdict::pass : Verdict::fail;
}

}  // namespace gibbsbo
