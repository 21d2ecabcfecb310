#pragma once

#include <cstddef>
#include <vector>

#include "gibbsbo/spectral.hpp"

namespace gibbsbo {

struct IntegratorConfig {
  double dt = 1e-3;
  /// Dealiasing grid multiplier for transform-based products (>= 3).
  int grid_factor = 3;
  /// Drop the nonlinearity; the step is then the exact phase rotation.
  bool linear_only = false;
  /// Store every k-th state in the trajectory (the final state is always kept).
  std::size_t record_every = 1;

  void validate() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<SpectralField> states;
  std::vector<double> l2_series;
  std::vector<double> hamiltonian_series;
};

struct ConservationReport {
  double l2_drift = 0.0;
  double hamiltonian_drift = 0.0;
};

/// Modes up to which rhs() uses the direct convolution; larger fields go
/// through the zero-padded transform.
inline constexpr int kDirectConvolutionLimit = 48;

/// (u^2)_n for n = 1..N, truncated sum over 0 < |n1|, |n2| <= N. O(N^2).
std::vector<Complex> square_modes_direct(const SpectralField& u);

/// Same as square_modes_direct via a zero-padded grid of
/// >= grid_factor * N + 1 points (grid_factor >= 3 keeps it alias-free).
std::vector<Complex> square_modes_padded(const SpectralField& u, int grid_factor = 3);

/// Right-hand side of the truncated Benjamin-Ono system:
/// dc_n/dt = -i sign(n) n^2 c_n - i n sum_{n1 + n2 = n} c_{n1} c_{n2}.
SpectralField rhs(const SpectralField& u);

/// Exact integral of u^3 over the circle (grid of >= 3N + 1 points).
double cubic_integral(const SpectralField& u);

/// F(u) = -(1/2) int (|D|^{1/2} u)^2 - (1/3) int u^3.
double hamiltonian(const SpectralField& u);

/// Integrating-factor RK4 for the truncated flow from 0 to t_final (which
/// may be negative). t_final must be a whole number of steps dt.
/// Throws NonFiniteStateError if a coefficient blows up.
Trajectory evolve(const SpectralField& u0, double t_final, const IntegratorConfig& cfg = {});

/// Final state of evolve() without recording a trajectory.
SpectralField flow(const SpectralField& u0, double t_final, const IntegratorConfig& cfg = {});

/// Max relative drift of the L^2 mass and of F over the stored states.
ConservationReport conservation_report(const Trajectory& traj);

struct DivergenceEstimate {
  /// sum_n d(a_n')/d(a_n) + d(b_n')/d(b_n) of the rhs field.
  double divergence = 0.0;
  /// Frobenius norm of the full 2N x 2N Jacobian.
  double jacobian_norm = 0.0;
};

/// Central finite-difference Jacobian of rhs in the real coordinates
/// a_n = 2 Re c_n, b_n = -2 Im c_n. Exact up to roundoff because the field
/// is quadratic.
DivergenceEstimate rhs_divergence(const SpectralField& u, double step = 1e-5);

}  // namespace gibbsbo
