#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gibbsbo {

/// Largest product the pairing enumeration accepts.
inline constexpr std::size_t kMaxWickFactors = 12;

/// E[prod_i g_{a_i}] for standard complex Gaussians indexed by nonzero
/// labels, with g_{-n} = conj(g_n). The only nonvanishing covariance is
/// E[g_a g_b] = 1 for a = -b, so this sums over perfect matchings of
/// opposite labels. Throws PreconditionError on a zero label or more than
/// kMaxWickFactors factors.
double complex_gaussian_moment(std::span<const int> labels);

/// E[prod_i x_{k_i}] for independent real standard Gaussians (Isserlis).
double real_gaussian_moment(std::span<const int> indices);

/// weight * prod g_{labels}; an empty label list is the constant weight.
struct WickTerm {
  std::complex<double> weight;
  std::vector<int> labels;
};

/// E[sum_t weight_t prod g_{labels_t}].
std::complex<double> wick_expectation(std::span<const WickTerm> terms);

/// E|sum_t weight_t prod g_{labels_t}|^2.
///
/// When no term contains an opposite pair (k, -k) and all terms have the
/// same length, only cross pairings survive and the sum collapses onto
/// label multisets; otherwise every term pair is expanded.
double wick_second_moment(std::span<const WickTerm> terms);

/// wick_second_moment - |wick_expectation|^2.
double wick_variance(std::span<const WickTerm> terms);

}  // namespace gibbsbo
