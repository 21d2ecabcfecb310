#include "gibbsbo/randomdata.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "gibbsbo/errors.hpp"
#include "gibbsbo/fft.hpp"
#include "gibbsbo/summation.hpp"

namespace gibbsbo {

ResonanceTriple make_resonance_triple(std::int64_t n1, std::int64_t n2) {
  if (n1 == 0 || n2 == 0 || n1 + n2 == 0) {
    throw PreconditionError("resonance triple needs nonzero n1, n2, n1 + n2");
  }
  const std::int64_t n = n1 + n2;
  const std::int64_t d = resonance_delta(n1, n2);
  ResonanceTriple triple{n1, n2, n, d < 0 ? -d : d};
  if (triple.gap < (n < 0 ? -n : n)) {
    throw InvariantViolation("resonance gap below |n| at (" + std::to_string(n1) + ", " +
                             std::to_string(n2) + ")");
  }
  return triple;
}

double resonance_gap_scan(int limit) {
  if (limit < 2) throw PreconditionError("limit must be at least 2");
  double worst = INFINITY;
  for (std::int64_t n1 = -limit; n1 <= limit; ++n1) {
    for (std::int64_t n2 = -limit; n2 <= limit; ++n2) {
      if (n1 == 0 || n2 == 0 || n1 + n2 == 0) continue;
      const auto t = make_resonance_triple(n1, n2);
      worst = std::min(worst, static_cast<double>(t.gap) / std::abs(static_cast<double>(t.n)));
    }
  }
  return worst;
}

Complex divided_difference(double t, double d) {
  // exp(i t d) - 1 = 2 i sin(t d / 2) exp(i t d / 2), stable for small t d
  const double half = 0.5 * t * d;
  return Complex(0.0, 2.0 * std::sin(half)) * std::polar(1.0, half) / d;
}

double divided_difference_magnitude(double t, double d) {
  return std::abs(2.0 * std::sin(0.5 * t * d) / d);
}

PiSquare pi_square(const SpectralField& u, SobolevIndex s) {
  const int N = u.max_mode();
  const std::size_t grid = fft::good_size(4 * static_cast<std::size_t>(N) + 1);
  auto values = synthesize(u, grid);
  for (auto& v : values) v *= v;
  // analyze drops the mean, which is exactly Pi
  auto result = analyze(values, 2 * N);
  const double norm = sobolev_norm_sq(result.field, s);
  return {std::move(result.field), norm};
}

SpectralField inv_derivative(const SpectralField& u) {
  std::vector<Complex> c(u.coeffs().begin(), u.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] /= Complex(0.0, static_cast<double>(i + 1));
  return SpectralField(std::move(c));
}

double OneSidedField::sobolev_norm_sq(SobolevIndex s) const {
  CompensatedSum sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    sum.add(std::pow(1.0 + n * n, s.s) * std::norm(coeffs[i]));
  }
  return kTwoPi * sum.value();
}

OneSidedField positive_part(const SpectralField& u) {
  return {std::vector<Complex>(u.coeffs().begin(), u.coeffs().end())};
}

OneSidedField gauge_transform(const SpectralField& u, std::size_t grid) {
  const std::size_t required = 8 * static_cast<std::size_t>(u.max_mode());
  if (grid < required) throw GridTooSmallError(grid, required);
  const auto values = synthesize(u, grid);
  const auto potential = synthesize(inv_derivative(u), grid);
  std::vector<Complex> w(grid), spectrum(grid);
  for (std::size_t j = 0; j < grid; ++j) w[j] = values[j] * std::polar(1.0, -potential[j]);
  fft::forward(w, spectrum);
  OneSidedField out;
  out.coeffs.resize(grid / 2 - 1);
  const double scale = 1.0 / static_cast<double>(grid);
  for (std::size_t n = 1; n < grid / 2; ++n) out.coeffs[n - 1] = spectrum[n] * scale;
  return out;
}

SpectralField picard_second(const GaussianDraw& draw, int N, double t) {
  if (N < 1 || N > draw.max_mode()) throw PreconditionError("draw does not cover N modes");
  const auto phi = project(phi_from_draw(draw), N);
  std::vector<Complex> c(2 * static_cast<std::size_t>(N));
  for (int n = 1; n <= 2 * N; ++n) {
    CompensatedComplexSum sum;
    for (int n1 = n - N; n1 <= N; ++n1) {
      if (n1 == 0 || n1 == n) continue;
      const double d = static_cast<double>(resonance_delta(n1, n - n1));
      sum.add(phi.coeff(n1) * phi.coeff(n - n1) * divided_difference(t, d));
    }
    const double phase = t * static_cast<double>(sigma(n));
    c[n - 1] = -static_cast<double>(n) * std::polar(1.0, phase) * sum.value();
  }
  return SpectralField(std::move(c));
}

}  // namespace gibbsbo
