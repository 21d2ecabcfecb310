#include "gibbsbo/wick.hpp"

#include <algorithm>
#include <map>
#include <cmath>

#include "gibbsbo/errors.hpp"
#include "gibbsbo/summation.hpp"

namespace gibbsbo {

namespace {

// Sum over perfect matchings of the factors not yet in `used`.
template <class Pairs>
double matchings(std::span<const int> labels, unsigned used, Pairs&& pairs) {
  const auto n = static_cast<unsigned>(labels.size());
  unsigned first = 0;
  while (first < n && (used >> first & 1U)) ++first;
  if (first == n) return 1.0;
  double total = 0.0;
  for (unsigned j = first + 1; j < n; ++j) {
    if (used >> j & 1U) continue;
    if (!pairs(labels[first], labels[j])) continue;
    total += matchings(labels, used | (1U << first) | (1U << j), pairs);
  }
  return total;
}

void check_size(std::size_t size) {
  if (size > kMaxWickFactors) throw PreconditionError("too many Gaussian factors for pairing");
}

bool has_opposite_pair(const std::vector<int>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == -labels[j]) return true;
    }
  }
  return false;
}

// Number of bijections between two equal multisets: prod over label
// multiplicities m of m!.
double multiset_automorphisms(const std::vector<int>& sorted) {
  double count = 1.0;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
      count *= static_cast<double>(run);
    } else {
      run = 1;
    }
  }
  return count;
}

}  // namespace

double complex_gaussian_moment(std::span<const int> labels) {
  check_size(labels.size());
  if (std::any_of(labels.begin(), labels.end(), [](int a) { return a == 0; })) {
    throw PreconditionError("complex Gaussian labels must be nonzero");
  }
  if (labels.size() % 2 != 0) return 0.0;
  int total = 0;
  for (int a : labels) total += a;
  // each matched pair sums to zero, so a nonzero total rules out any matching
  if (total != 0) return 0.0;
  return matchings(labels, 0U, [](int a, int b) { return a == -b; });
}

double real_gaussian_moment(std::span<const int> indices) {
  check_size(indices.size());
  if (indices.size() % 2 != 0) return 0.0;
  return matchings(indices, 0U, [](int a, int b) { return a == b; });
}

std::complex<double> wick_expectation(std::span<const WickTerm> terms) {
  CompensatedComplexSum sum;
  for (const auto& t : terms) sum.add(t.weight * complex_gaussian_moment(t.labels));
  return sum.value();
}

double wick_second_moment(std::span<const WickTerm> terms) {
  if (terms.empty()) return 0.0;
  const std::size_t len = terms.front().labels.size();
  const bool collapsible = std::all_of(terms.begin(), terms.end(), [&](const WickTerm& t) {
    return t.labels.size() == len && !has_opposite_pair(t.labels);
  });

  if (collapsible) {
    // E[prod g_a conj(prod g_b)] = [sorted a == sorted b] * automorphisms(a)
    std::map<std::vector<int>, std::complex<double>> groups;
    for (const auto& t : terms) {
      auto key = t.labels;
      std::sort(key.begin(), key.end());
      groups[key] += t.weight;
    }
    CompensatedSum sum;
    for (const auto& [key, w] : groups) sum.add(std::norm(w) * multiset_automorphisms(key));
    return sum.value();
  }

  CompensatedSum sum;
  std::vector<int> joint;
  for (const auto& a : terms) {
    for (const auto& b : terms) {
      joint = a.labels;
      for (int l : b.labels) joint.push_back(-l);
      const double m = complex_gaussian_moment(joint);
      if (m != 0.0) sum.add((a.weight * std::conj(b.weight)).real() * m);
    }
  }
  return sum.value();
}

double wick_variance(std::span<const WickTerm> terms) {
  return wick_second_moment(terms) - std::norm(wick_expectation(terms));
}

}  // namespace gibbsbo
