#pragma once

#include <vector>

#include "gibbsbo/rng.hpp"
#include "gibbsbo/spectral.hpp"

namespace gibbsbo {

/// Standard complex Gaussians g_n = (h_n - i l_n)/sqrt(2), n = 1..N, with
/// h_n, l_n independent N(0, 1), so E|g_n|^2 = 1.
struct GaussianDraw {
  std::vector<Complex> g;

  int max_mode() const { return static_cast<int>(g.size()); }
  /// g_n for nonzero n, with g_{-n} = conj(g_n).
  Complex at(int n) const { return n > 0 ? g[n - 1] : std::conj(g[-n - 1]); }
};

GaussianDraw draw_gaussians(int N, RandomStream& stream);

/// The random series with c_n = g_n / (2 sqrt(pi n)).
SpectralField phi_from_draw(const GaussianDraw& draw);

struct PhiSample {
  SpectralField field;
  GaussianDraw draw;
};

PhiSample sample_phi(int N, RandomStream& stream);

/// Harmonic partial sum sum_{n=1}^N 1/n, the expected L^2 mass of phi_N.
double alpha(int N);

/// int (S_N u)^3 on an alias-free grid.
double f_N(const SpectralField& u, int N);

/// 2 pi sum_{n1 + n2 + n3 = 0} c_{n1} c_{n2} c_{n3} over 0 < |n_i| <= N.
/// Independent O(N^2) evaluation of f_N.
double f_N_triple_sum(const SpectralField& u, int N);

/// ||S_N u||_{L^2}^2 - alpha(N).
double g_N(const SpectralField& u, int N);

/// Trapezoidal cutoff: 1 on [-R, R], linear down to 0 at |x| = R + taper.
struct CutoffSpec {
  double R = 5.0;
  double taper = 5.0;

  void validate() const;
};

/// Cutoff with taper equal to R.
CutoffSpec cutoff_with_radius(double R);

double cutoff(double x, const CutoffSpec& spec);

struct WeightedSample {
  SpectralField field;
  /// cutoff(g_N) * exp(log_weight); zero when the cutoff vanishes.
  double weight = 0.0;
  /// -(2/3) f_N, the exponent of the density term.
  double log_weight = 0.0;
  double f = 0.0;
  double g = 0.0;
};

/// Gibbs weight of u relative to the free measure at inverse temperature 2.
WeightedSample density_G(const SpectralField& u, int N, const CutoffSpec& spec);

/// Weight from precomputed f_N and g_N values.
double gibbs_weight(double f, double g, const CutoffSpec& spec);

struct ResonantSplit {
  /// Triples of the form (n, n, -2n) and permutations.
  double F1 = 0.0;
  /// Triples with pairwise distinct |n_i|.
  double F2 = 0.0;
};

/// Splits (1/(8 pi^{3/2})) sum g_{n1} g_{n2} g_{n3} / sqrt|n1 n2 n3| over
/// n1 + n2 + n3 = 0, 0 < |n_i| <= N. F1 + F2 = f_N(phi_N) / (2 pi).
ResonantSplit resonant_split(const GaussianDraw& draw, int N);

}  // namespace gibbsbo
