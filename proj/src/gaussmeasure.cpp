#include "gibbsbo/gaussmeasure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "gibbsbo/errors.hpp"
#include "gibbsbo/fft.hpp"
#include "gibbsbo/summation.hpp"

namespace gibbsbo {

GaussianDraw draw_gaussians(int N, RandomStream& stream) {
  if (N < 1) throw PreconditionError("N must be positive");
  GaussianDraw draw;
  draw.g.resize(static_cast<std::size_t>(N));
  const double r = 1.0 / std::sqrt(2.0);
  for (auto& g : draw.g) {
    const double h = stream.normal();
    const double l = stream.normal();
    g = Complex(h * r, -l * r);
  }
  return draw;
}

SpectralField phi_from_draw(const GaussianDraw& draw) {
  std::vector<Complex> c(draw.g.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = draw.g[i] / (2.0 * std::sqrt(kPi * static_cast<double>(i + 1)));
  }
  return SpectralField(std::move(c));
}

PhiSample sample_phi(int N, RandomStream& stream) {
  auto draw = draw_gaussians(N, stream);
  auto field = phi_from_draw(draw);
  return {std::move(field), std::move(draw)};
}

double alpha(int N) {
  if (N < 1) throw PreconditionError("alpha needs N >= 1");
  CompensatedSum sum;
  for (int n = 1; n <= N; ++n) sum.add(1.0 / n);
  return sum.value();
}

double f_N(const SpectralField& u, int N) {
  const auto v = project(u, N);
  const std::size_t grid = fft::good_size(3 * static_cast<std::size_t>(v.max_mode()) + 1);
  auto values = synthesize(v, grid);
  for (auto& x : values) x = x * x * x;
  return grid_integral(values);
}

double f_N_triple_sum(const SpectralField& u, int N) {
  const int K = std::min(N, u.max_mode());
  CompensatedSum sum;
  for (int n1 = -K; n1 <= K; ++n1) {
    if (n1 == 0) continue;
    const Complex c1 = u.coeff(n1);
    for (int n2 = -K; n2 <= K; ++n2) {
      const int n3 = -n1 - n2;
      if (n2 == 0 || n3 == 0 || std::abs(n3) > K) continue;
      sum.add((c1 * u.coeff(n2) * u.coeff(n3)).real());
    }
  }
  return kTwoPi * sum.value();
}

double g_N(const SpectralField& u, int N) {
  const auto v = project(u, N);
  return kTwoPi * mode_mass(v) - alpha(N);
}

void CutoffSpec::validate() const {
  if (!(R > 0.0) || !(taper > 0.0) || !std::isfinite(R) || !std::isfinite(taper)) {
    throw PreconditionError("cutoff radius and taper must be positive");
  }
}

CutoffSpec cutoff_with_radius(double R) { return CutoffSpec{R, R}; }

double cutoff(double x, const CutoffSpec& spec) {
  const double a = std::abs(x);
  if (a <= spec.R) return 1.0;
  if (a >= spec.R + spec.taper) return 0.0;
  return (spec.R + spec.taper - a) / spec.taper;
}

double gibbs_weight(double f, double g, const CutoffSpec& spec) {
  const double chi = cutoff(g, spec);
  if (chi == 0.0) return 0.0;
  return chi * std::exp(-2.0 / 3.0 * f);
}

WeightedSample density_G(const SpectralField& u, int N, const CutoffSpec& spec) {
  WeightedSample out{u, 0.0, 0.0, f_N(u, N), g_N(u, N)};
  out.log_weight = -2.0 / 3.0 * out.f;
  out.weight = gibbs_weight(out.f, out.g, spec);
  return out;
}

ResonantSplit resonant_split(const GaussianDraw& draw, int N) {
  const int K = std::min(N, draw.max_mode());
  CompensatedSum f1, f2;
  for (int n1 = -K; n1 <= K; ++n1) {
    if (n1 == 0) continue;
    for (int n2 = -K; n2 <= K; ++n2) {
      const int n3 = -n1 - n2;
      if (n2 == 0 || n3 == 0 || std::abs(n3) > K) continue;
      const double term =
          (draw.at(n1) * draw.at(n2) * draw.at(n3)).real() /
          std::sqrt(std::abs(static_cast<double>(n1) * n2 * n3));
      const int a1 = std::abs(n1), a2 = std::abs(n2), a3 = std::abs(n3);
      if (a1 == a2 || a2 == a3 || a1 == a3) {
        f1.add(term);
      } else {
        f2.add(term);
      }
    }
  }
  const double scale = 1.0 / (8.0 * std::pow(kPi, 1.5));
  return {scale * f1.value(), scale * f2.value()};
}

}  // namespace gibbsbo
