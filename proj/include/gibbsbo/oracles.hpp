#pragma once

#include <vector>

#include "gibbsbo/gaussmeasure.hpp"
#include "gibbsbo/randomdata.hpp"

namespace gibbsbo {

/// E|g_M(phi_M) - g_N(phi_N)|^2 = sum_{N < n <= M} 1/n^2. Requires M > N >= 1.
double exact_g_diff_second_moment(int N, int M);

/// E|f_M(phi_M) - f_N(phi_N)|^2 by pairing enumeration over the triples
/// n1 + n2 + n3 = 0 present at level M but not at level N.
/// Requires M > N >= 1 and M <= 128.
double exact_f_diff_second_moment(int N, int M);

/// E||Pi(phi_N^2)||_{H^s}^2, Pi removing the zero mode. Requires s < 0,
/// 1 <= N <= 512.
double exact_pi_square_expectation(int N, double s);

/// E||u(t)||_{H^s}^2 for the second Picard iterate driven by phi_N.
/// Requires s < 0, 1 <= N <= 512.
double exact_picard_second_moment(int N, double t, double s);

enum class CalculusSum {
  /// sum_{m != 0, n} 1/(|m| |n - m|), scaled by (1 + |n|)^{1 - eps}
  elem1,
  /// sum_{m != 0, n} 1/(|m|^{3/2 - eps} |m - n|^{1/2 - eps}),
  /// scaled by (1 + |n|)^{1/2 - eps}
  elem2,
};

/// Unscaled left-hand sum at index n: direct summation over a window of
/// radius kCalculusWindow plus an Euler-Maclaurin tail.
double calculus_sum(CalculusSum kind, double eps, int n);

/// Scaled sums for n = 0..max_index.
std::vector<double> calculus_scaled_sums(CalculusSum kind, double eps, int max_index);

/// max of the scaled sums over lo <= n <= hi.
double calculus_sum_check(CalculusSum kind, double eps, int lo, int hi);

inline constexpr int kCalculusWindow = 100000;

/// Second Picard iterate by composite Simpson quadrature of the Duhamel
/// integral -i n int_0^t e^{i (t - tau) sigma(n)} (u_1(tau)^2)_n dtau, with
/// u_1 the free evolution of phi_N and the square taken on a grid.
/// Returns modes 1..2N. `panels` must be even.
std::vector<Complex> picard_second_quadrature(const GaussianDraw& draw, int N, double t,
                                              int panels);

/// First two terms of the exponential series for the gauge transform:
/// P_+(u) - i P_+(V u), V = inv_derivative(u), by direct convolution.
OneSidedField gauge_linearization(const SpectralField& u);

}  // namespace gibbsbo
