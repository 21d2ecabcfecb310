#include "gibbsbo/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "gibbsbo/dynamics.hpp"
#include "gibbsbo/errors.hpp"
#include "gibbsbo/parallel.hpp"
#include "gibbsbo/randomdata.hpp"
#include "gibbsbo/spectral.hpp"
#include "gibbsbo/summation.hpp"
#include "gibbsbo/wick.hpp"

namespace gibbsbo {

namespace {

// E|c_m|^2 for the coefficients of phi: 1/(4 pi |m|).
double mode_variance(int m) { return 1.0 / (4.0 * kPi * std::abs(m)); }

double bracket_power(int n, double s) {
  return std::pow(1.0 + static_cast<double>(n) * n, s);
}

void check_random_data_args(int N, double s) {
  if (N < 1 || N > 512) throw PreconditionError("N must lie in [1, 512]");
  if (!(s < 0.0)) throw PreconditionError("Sobolev index must be negative");
}

// 2 pi sum_{n != 0} <n>^{2s} * 2 sum_{n1} v(n1) v(n - n1) * kernel(n1, n),
// the pairing-reduced second moment of a bilinear form in phi_N whose
// n-th coefficient is sum_{n1} phi_{n1} phi_{n - n1} k(n1, n).
template <class Kernel>
double bilinear_norm(int N, double s, Kernel&& kernel_sq) {
  CompensatedSum total;
  for (int n = 1; n <= 2 * N; ++n) {
    CompensatedSum inner;
    for (int n1 = n - N; n1 <= N; ++n1) {
      if (n1 == 0 || n1 == n) continue;
      inner.add(mode_variance(n1) * mode_variance(n - n1) * kernel_sq(n1, n));
    }
    // modes -n contribute the same by symmetry
    total.add(2.0 * kTwoPi * bracket_power(n, s) * 2.0 * inner.value());
  }
  return total.value();
}

// sum_{m > L} m^{-a} (m + beta)^{-b} via the integral and the first
// Euler-Maclaurin correction; requires L >> |beta|.
double power_tail(double L, double beta, double a, double b) {
  const double c = a + b;
  double integral = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= 8; ++k) {
    integral += binom * std::pow(beta, k) * std::pow(L, 1.0 - c - k) / (c + k - 1.0);
    binom *= (-b - k) / (k + 1.0);
  }
  const double f_L = std::pow(L, -a) * std::pow(L + beta, -b);
  return integral - 0.5 * f_L;
}

struct Exponents {
  double a, b, scale;
};

Exponents exponents(CalculusSum kind, double eps) {
  if (kind == CalculusSum::elem1) {
    if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("eps must lie in (0, 1)");
    return {1.0, 1.0, 1.0 - eps};
  }
  if (!(eps > 0.0 && eps < 0.25)) throw PreconditionError("eps must lie in (0, 1/4)");
  return {1.5 - eps, 0.5 - eps, 0.5 - eps};
}

class PowerTable {
 public:
  PowerTable(double exponent, int size) : values_(static_cast<std::size_t>(size) + 1) {
    for (int m = 1; m <= size; ++m) values_[m] = std::pow(static_cast<double>(m), -exponent);
  }
  double operator()(int m) const { return values_[static_cast<std::size_t>(std::abs(m))]; }

 private:
  std::vector<double> values_;
};

double windowed_sum(const Exponents& e, const PowerTable& pa, const PowerTable& pb, int n) {
  const int W = kCalculusWindow;
  CompensatedSum sum;
  for (int m = -W; m <= n + W; ++m) {
    if (m == 0 || m == n) continue;
    sum.add(pa(m) * pb(m - n));
  }
  // right tail: m > n + W, |m - n| = m - n; left tail: m < -W
  const double right = power_tail(n + W, -static_cast<double>(n), e.a, e.b);
  const double left = power_tail(W, static_cast<double>(n), e.a, e.b);
  sum.add(right);
  sum.add(left);
  return sum.value();
}

}  // namespace

double exact_g_diff_second_moment(int N, int M) {
  if (N < 1 || M <= N) throw PreconditionError("need M > N >= 1");
  CompensatedSum sum;
  for (int n = M; n > N; --n) sum.add(1.0 / (static_cast<double>(n) * n));
  return sum.value();
}

double exact_f_diff_second_moment(int N, int M) {
  if (N < 1 || M <= N) throw PreconditionError("need M > N >= 1");
  if (M > 128) throw PreconditionError("f-difference oracle limited to M <= 128");
  // f_M - f_N = 2 pi sum c_{n1} c_{n2} c_{n3}, c_n = g_n / (2 sqrt(pi |n|)),
  // over zero-sum triples with max |n_i| > N
  std::vector<WickTerm> terms;
  const double prefactor = kTwoPi / (8.0 * std::pow(kPi, 1.5));
  for (int n1 = -M; n1 <= M; ++n1) {
    for (int n2 = -M; n2 <= M; ++n2) {
      const int n3 = -n1 - n2;
      if (n1 == 0 || n2 == 0 || n3 == 0 || std::abs(n3) > M) continue;
      if (std::max({std::abs(n1), std::abs(n2), std::abs(n3)}) <= N) continue;
      const double w =
          prefactor / std::sqrt(std::abs(static_cast<double>(n1) * n2 * n3));
      terms.push_back({w, {n1, n2, n3}});
    }
  }
  return wick_second_moment(terms);
}

double exact_pi_square_expectation(int N, double s) {
  check_random_data_args(N, s);
  return bilinear_norm(N, s, [](int, int) { return 1.0; });
}

double exact_picard_second_moment(int N, double t, double s) {
  check_random_data_args(N, s);
  return bilinear_norm(N, s, [t](int n1, int n) {
    const double d = static_cast<double>(resonance_delta(n1, n - n1));
    const double q = divided_difference_magnitude(t, d);
    return static_cast<double>(n) * n * q * q;
  });
}

double calculus_sum(CalculusSum kind, double eps, int n) {
  const auto e = exponents(kind, eps);
  n = std::abs(n);
  const int size = kCalculusWindow + n + 1;
  const PowerTable pa(e.a, size), pb(e.b, size);
  return windowed_sum(e, pa, pb, n);
}

std::vector<double> calculus_scaled_sums(CalculusSum kind, double eps, int max_index) {
  if (max_index < 0) throw PreconditionError("max_index must be nonnegative");
  const auto e = exponents(kind, eps);
  const int size = kCalculusWindow + max_index + 1;
  const PowerTable pa(e.a, size), pb(e.b, size);
  return parallel_map(static_cast<std::size_t>(max_index) + 1, [&](std::size_t i) {
    const int n = static_cast<int>(i);
    return windowed_sum(e, pa, pb, n) * std::pow(1.0 + n, e.scale);
  });
}

double calculus_sum_check(CalculusSum kind, double eps, int lo, int hi) {
  if (lo < 0 || hi < lo) throw PreconditionError("need 0 <= lo <= hi");
  const auto values = calculus_scaled_sums(kind, eps, hi);
  return *std::max_element(values.begin() + lo, values.end());
}

std::vector<Complex> picard_second_quadrature(const GaussianDraw& draw, int N, double t,
                                              int panels) {
  if (N < 1 || N > draw.max_mode()) throw PreconditionError("draw does not cover N modes");
  if (panels < 2 || panels % 2 != 0) throw PreconditionError("Simpson needs an even panel count");
  const auto phi = project(phi_from_draw(draw), N);
  const int K = 2 * N;
  std::vector<CompensatedComplexSum> acc(static_cast<std::size_t>(K));
  const double h = t / panels;
  std::vector<Complex> free(static_cast<std::size_t>(K));
  for (int j = 0; j <= panels; ++j) {
    const double tau = h * j;
    const double w = (j == 0 || j == panels) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    for (int m = 1; m <= K; ++m) {
      free[m - 1] = m <= N ? phi.coeff(m) * std::polar(1.0, tau * static_cast<double>(sigma(m)))
                           : Complex{};
    }
    const auto sq = square_modes_padded(SpectralField(free));
    for (int n = 1; n <= K; ++n) {
      const double phase = (t - tau) * static_cast<double>(sigma(n));
      acc[n - 1].add(w * std::polar(1.0, phase) * sq[n - 1]);
    }
  }
  std::vector<Complex> out(static_cast<std::size_t>(K));
  for (int n = 1; n <= K; ++n) {
    out[n - 1] = Complex(0.0, -static_cast<double>(n)) * (h / 3.0) * acc[n - 1].value();
  }
  return out;
}

OneSidedField gauge_linearization(const SpectralField& u) {
  const int N = u.max_mode();
  const auto v = inv_derivative(u);
  OneSidedField out;
  out.coeffs.resize(2 * static_cast<std::size_t>(N));
  for (int n = 1; n <= 2 * N; ++n) {
    CompensatedComplexSum conv;
    for (int m = n - N; m <= N; ++m) conv.add(v.coeff(m) * u.coeff(n - m));
    out.coeffs[n - 1] = u.coeff(n) - Complex(0.0, 1.0) * conv.value();
  }
  return out;
}

}  // namespace gibbsbo
