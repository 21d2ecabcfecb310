#pragma once

#include <cstdint>
#include <vector>

#include "gibbsbo/gaussmeasure.hpp"
#include "gibbsbo/spectral.hpp"

namespace gibbsbo {

/// Dispersion symbol sigma(n) = -n |n|.
constexpr std::int64_t sigma(std::int64_t n) { return -n * (n < 0 ? -n : n); }

/// sigma(n1) + sigma(n2) - sigma(n1 + n2).
constexpr std::int64_t resonance_delta(std::int64_t n1, std::int64_t n2) {
  return sigma(n1) + sigma(n2) - sigma(n1 + n2);
}

struct ResonanceTriple {
  std::int64_t n1, n2, n;
  std::int64_t gap;
};

/// Builds the triple for nonzero n1, n2 with n1 + n2 != 0 and checks
/// gap >= |n| (InvariantViolation otherwise).
ResonanceTriple make_resonance_triple(std::int64_t n1, std::int64_t n2);

/// Minimum of gap/|n| over all 0 < |n1|, |n2| <= limit with n1 + n2 != 0.
/// Throws InvariantViolation if any ratio falls below 1.
double resonance_gap_scan(int limit);

/// (exp(i t d) - 1) / d for d != 0.
Complex divided_difference(double t, double d);

/// |2 sin(t d / 2) / d|, the magnitude of divided_difference.
double divided_difference_magnitude(double t, double d);

struct PiSquare {
  /// Pi(u^2), max_mode 2N.
  SpectralField field;
  double norm_sq;
};

/// Exact square of u with the mean removed, and its H^s squared norm.
PiSquare pi_square(const SpectralField& u, SobolevIndex s);

/// Multiplier 1/(i n).
SpectralField inv_derivative(const SpectralField& u);

/// Complex field with modes n >= 1 only, the range of P_+. Not real-valued,
/// so it is kept apart from SpectralField.
struct OneSidedField {
  /// c_1..c_K
  std::vector<Complex> coeffs;

  /// 2 pi sum_{n >= 1} <n>^{2s} |c_n|^2.
  double sobolev_norm_sq(SobolevIndex s) const;
};

/// P_+ of a real field: its n >= 1 coefficients.
OneSidedField positive_part(const SpectralField& u);

/// P_+(exp(-i V) u) with V = inv_derivative(u), computed pointwise on a grid
/// of M points and returned on modes 1..M/2 - 1. Requires M >= 8N
/// (GridTooSmallError).
OneSidedField gauge_transform(const SpectralField& u, std::size_t grid);

/// Second Picard iterate at time t driven by phi_N built from the draw:
/// u_n(t) = -n e^{i t sigma(n)} sum_{n1} phi_{n1} phi_{n - n1} (e^{i t D} - 1)/D,
/// D = resonance_delta(n1, n - n1), on modes 1..2N.
SpectralField picard_second(const GaussianDraw& draw, int N, double t);

}  // namespace gibbsbo
