#include "gibbsbo/spectral.hpp"

#include <algorithm>

#include "gibbsbo/errors.hpp"
#include "gibbsbo/fft.hpp"
#include "gibbsbo/summation.hpp"

namespace gibbsbo {

SpectralField::SpectralField(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("SpectralField needs at least one mode");
}

SpectralField SpectralField::zero(int max_mode) {
  if (max_mode < 1) throw PreconditionError("max_mode must be positive");
  return SpectralField(std::vector<Complex>(static_cast<std::size_t>(max_mode)));
}

SpectralField SpectralField::from_cos_sin(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw PreconditionError("cosine and sine arrays differ in length");
  std::vector<Complex> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = 0.5 * Complex(a[i], -b[i]);
  return SpectralField(std::move(c));
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

SpectralField make_field(std::span<const Complex> coeffs) {
  return SpectralField(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

SpectralField project(const SpectralField& u, int N) {
  if (N < 1) throw PreconditionError("projection order must be positive");
  const int keep = std::min(N, u.max_mode());
  return SpectralField(std::vector<Complex>(u.coeffs().begin(), u.coeffs().begin() + keep));
}

SpectralField hilbert(const SpectralField& u) {
  std::vector<Complex> c(u.coeffs().begin(), u.coeffs().end());
  for (auto& x : c) x *= Complex(0.0, -1.0);
  return SpectralField(std::move(c));
}

SpectralField half_derivative(const SpectralField& u) {
  std::vector<Complex> c(u.coeffs().begin(), u.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= std::sqrt(static_cast<double>(i + 1));
  return SpectralField(std::move(c));
}

SpectralField derivative(const SpectralField& u) {
  std::vector<Complex> c(u.coeffs().begin(), u.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= Complex(0.0, static_cast<double>(i + 1));
  return SpectralField(std::move(c));
}

double sobolev_norm_sq(const SpectralField& u, SobolevIndex s) {
  CompensatedSum acc;
  const auto c = u.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    acc.add(std::pow(1.0 + n * n, s.s) * std::norm(c[i]));
  }
  // both signs of n
  return 2.0 * kTwoPi * acc.value();
}

double mode_mass(const SpectralField& u) {
  CompensatedSum acc;
  for (const auto& c : u.coeffs()) acc.add(std::norm(c));
  return 2.0 * acc.value();
}

std::vector<double> synthesize(const SpectralField& u, std::size_t grid) {
  const std::size_t required = 2 * static_cast<std::size_t>(u.max_mode()) + 1;
  if (grid < required) throw GridTooSmallError(grid, required);
  std::vector<Complex> half(grid / 2 + 1);
  const auto c = u.coeffs();
  std::copy(c.begin(), c.end(), half.begin() + 1);
  std::vector<double> values(grid);
  fft::half_spectrum_to_grid(half, values);
  return values;
}

Analysis analyze(std::span<const double> values, int N) {
  if (N < 1) throw PreconditionError("analysis order must be positive");
  const std::size_t required = 2 * static_cast<std::size_t>(N) + 1;
  if (values.size() < required) throw GridTooSmallError(values.size(), required);
  const std::size_t grid = values.size();
  std::vector<Complex> half(grid / 2 + 1);
  fft::grid_to_half_spectrum(values, half);
  const double scale = 1.0 / static_cast<double>(grid);
  std::vector<Complex> c(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) c[n - 1] = half[n] * scale;
  return {SpectralField(std::move(c)), half[0].real() * scale};
}

double grid_integral(std::span<const double> values) {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return kTwoPi * acc.value() / static_cast<double>(values.size());
}

}  // namespace gibbsbo
