#pragma once

// Slow, independent reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "gibbsbo/rng.hpp"
#include "gibbsbo/spectral.hpp"
#include "gibbsbo/wick.hpp"

namespace gibbsbo::testing {

inline SpectralField random_field(int N, RandomStream& stream, double scale = 1.0) {
  std::vector<Complex> c(static_cast<std::size_t>(N));
  for (auto& x : c) x = scale * Complex(stream.normal(), stream.normal());
  return SpectralField(std::move(c));
}

/// sum_{0 < |n| <= N} c_n exp(i n x_j) evaluated term by term, complex.
inline std::vector<Complex> brute_synthesize(const SpectralField& u, std::size_t M) {
  std::vector<Complex> out(M);
  const int N = u.max_mode();
  for (std::size_t j = 0; j < M; ++j) {
    const double x = kTwoPi * static_cast<double>(j) / static_cast<double>(M);
    Complex sum{};
    for (int n = -N; n <= N; ++n) sum += u.coeff(n) * std::polar(1.0, n * x);
    out[j] = sum;
  }
  return out;
}

/// (u^2)_n = sum_{n1 + n2 = n} c_{n1} c_{n2}, both modes in the support.
inline Complex brute_square_mode(const SpectralField& u, int n) {
  const int N = u.max_mode();
  Complex sum{};
  for (int n1 = -N; n1 <= N; ++n1) sum += u.coeff(n1) * u.coeff(n - n1);
  return sum;
}

/// 2 pi sum_{n1 + n2 + n3 = 0, 0 < |n_i| <= N} c_{n1} c_{n2} c_{n3}.
inline double brute_cubic(const SpectralField& u, int N) {
  Complex sum{};
  for (int a = -N; a <= N; ++a) {
    for (int b = -N; b <= N; ++b) {
      const int c = -a - b;
      if (a == 0 || b == 0 || c == 0 || c < -N || c > N) continue;
      sum += u.coeff(a) * u.coeff(b) * u.coeff(c);
    }
  }
  return kTwoPi * sum.real();
}

/// E[prod g_{labels}] by expanding perfect matchings one factor at a time.
inline double brute_complex_moment(std::vector<int> labels) {
  if (labels.empty()) return 1.0;
  if (labels.size() % 2) return 0.0;
  const int first = labels.front();
  double total = 0.0;
  for (std::size_t j = 1; j < labels.size(); ++j) {
    if (labels[j] != -first) continue;
    std::vector<int> rest;
    for (std::size_t k = 1; k < labels.size(); ++k) {
      if (k != j) rest.push_back(labels[k]);
    }
    total += brute_complex_moment(rest);
  }
  return total;
}

/// E|sum w_t prod g_{labels_t}|^2 over all term pairs.
inline double brute_second_moment(const std::vector<WickTerm>& terms) {
  double total = 0.0;
  for (const auto& a : terms) {
    for (const auto& b : terms) {
      std::vector<int> labels = a.labels;
      for (int l : b.labels) labels.push_back(-l);
      total += (a.weight * std::conj(b.weight)).real() * brute_complex_moment(labels);
    }
  }
  return total;
}

/// sigma(n) = -n |n| computed independently of the library.
inline double brute_sigma(int n) { return -static_cast<double>(n) * std::abs(n); }

/// Covariance scale of c_n = g_n / (2 sqrt(pi |n|)).
inline double phi_scale(int n) { return 1.0 / (2.0 * std::sqrt(kPi * std::abs(n))); }

}  // namespace gibbsbo::testing
