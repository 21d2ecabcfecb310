#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gibbsbo/dynamics.hpp"
#include "gibbsbo/gaussmeasure.hpp"
#include "gibbsbo/report.hpp"
#include "gibbsbo/rng.hpp"

namespace gibbsbo {

// Every experiment returns a report whose verdict lines are tagged with the
// acceptance criterion they feed. Defaults are the acceptance settings.

struct ConservationParams {
  int N = 16;
  double t = 1.0;
  double dt = 1e-3;
  int grid_factor = 3;
};
/// L^2 and Hamiltonian drift of the truncated flow, step-halving order and
/// time reversibility (criterion 1).
ExperimentReport conservation_experiment(const ConservationParams& params,
                                         const StreamFactory& streams);

struct LiouvilleParams {
  std::vector<int> N_list{1, 2, 4, 8};
  int points = 20;
  double step = 1e-5;
};
/// Finite-difference divergence of the rhs field (criterion 2).
ExperimentReport liouville_experiment(const LiouvilleParams& params, const StreamFactory& streams);

struct ResonanceParams {
  int limit = 256;
};
/// Exhaustive resonance gap scan (criterion 3).
ExperimentReport resonance_experiment(const ResonanceParams& params);

struct CauchyGParams {
  std::vector<int> N_list{16, 64, 256};
  std::size_t samples = 100000;
};
/// E|g_{2N} - g_N|^2 against the pairing oracle (criterion 4).
ExperimentReport cauchy_g_experiment(const CauchyGParams& params, const StreamFactory& streams);

struct CauchyFParams {
  /// Levels with a Monte Carlo estimate.
  std::vector<int> N_list{1, 4};
  /// Levels entering the oracle log-log slope.
  std::vector<int> slope_N_list{4, 8, 16, 32};
  /// Level for the L^4/L^2 moment ratio.
  int ratio_N = 8;
  std::size_t samples = 100000;
};
/// E|f_{2N} - f_N|^2 against the pairing oracle (criterion 5).
ExperimentReport cauchy_f_experiment(const CauchyFParams& params, const StreamFactory& streams);

struct ChaosBoundsParams {
  int dimension = 10;
  int specs_per_kind = 2;
  int terms = 6;
  std::vector<double> p_list{3.0, 4.0, 6.0};
  std::size_t samples = 1000000;
};
/// Moment ratios of degree-2 and degree-3 chaos against (p-1)^{k/2}
/// (criterion 6).
ExperimentReport chaos_bounds_experiment(const ChaosBoundsParams& params,
                                         const StreamFactory& streams);

struct KhinchinParams {
  std::size_t samples = 1000000;
};
/// Empirical Gaussian tails against 2 exp(-l^2 / (2 |c|^2)) (criterion 7).
ExperimentReport khinchin_experiment(const KhinchinParams& params, const StreamFactory& streams);

struct InvarianceParams {
  int N = 8;
  CutoffSpec cutoff{};
  double t = 0.5;
  /// Any of exp_neg_hm1, first_mode_energy, tanh_cubic, one.
  std::vector<std::string> observables{"exp_neg_hm1", "first_mode_energy", "tanh_cubic"};
  std::size_t samples = 100000;
  IntegratorConfig integrator{};
};
/// Importance-sampled E_mu[h] before and after the flow (criterion 8).
ExperimentReport invariance_experiment(const InvarianceParams& params,
                                       const StreamFactory& streams);

struct DensityLpParams {
  std::vector<int> N_list{16, 64, 256};
  std::vector<double> p_list{1.0, 2.0, 4.0};
  CutoffSpec cutoff{};
  std::size_t samples = 200000;
};
/// E_theta[G_N^p] across N (criterion 9).
ExperimentReport density_lp_experiment(const DensityLpParams& params,
                                       const StreamFactory& streams);

struct PiSquareParams {
  std::vector<int> N_list{16, 64, 256};
  double s = -0.6;
  int mc_N = 16;
  std::size_t samples = 10000;
};
/// E||Pi(phi_N^2)||_{H^s}^2 oracle growth and Monte Carlo agreement
/// (criterion 10).
ExperimentReport pi_square_experiment(const PiSquareParams& params, const StreamFactory& streams);

struct PicardParams {
  std::vector<int> N_list{16, 64, 256};
  double s = -0.25;
  double t = 1.0;
  int mc_N = 16;
  std::size_t samples = 10000;
  int quadrature_N = 8;
  double quadrature_t = 0.7;
  int panels = 10000;
};
/// Second Picard iterate: quadrature cross-check, oracle growth, Monte
/// Carlo agreement (criterion 11).
ExperimentReport picard_experiment(const PicardParams& params, const StreamFactory& streams);

struct GaugeParams {
  int N = 16;
  int draws = 20;
  double s = -0.5;
  double amplitude = 1e-4;
};
/// Grid refinement and small-amplitude linearization of the gauge
/// transform (criterion 12).
ExperimentReport gauge_experiment(const GaugeParams& params, const StreamFactory& streams);

struct ConvergenceParams {
  std::vector<int> N_list{16, 64, 256};
  std::vector<double> eps_list{0.1, 0.5};
  CutoffSpec cutoff{};
  std::size_t samples = 200000;
};
/// Frequencies of |X_{2N} - X_N| > eps for X = f, g, G and fitted tail
/// shapes of the f and g differences (criterion 13).
ExperimentReport convergence_in_measure_experiment(const ConvergenceParams& params,
                                                   const StreamFactory& streams);

struct LinftyParams {
  int N = 64;
  std::vector<double> lambda_list{2.0, 2.5, 3.0, 3.5};
  double C1 = 1.0;
  double C2 = 10.0;
  /// Grid points per mode for the sup norm.
  int sup_scale = 8;
  std::size_t samples = 10000000;
};
/// Joint frequencies of a large sup norm with a controlled L^2 norm,
/// best-effort quadratic-decay check (criterion 13).
ExperimentReport linfty_tail_experiment(const LinftyParams& params, const StreamFactory& streams);

/// Names accepted by run_experiment, in a fixed order.
const std::vector<std::string>& experiment_names();

}  // namespace gibbsbo
