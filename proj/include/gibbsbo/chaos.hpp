#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gibbsbo/errors.hpp"
#include "gibbsbo/rng.hpp"
#include "gibbsbo/stats.hpp"

namespace gibbsbo {

class DegreeTooLargeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

inline constexpr int kMaxHermiteDegree = 30;

/// Normalised Hermite polynomial h_k with
/// exp(-l x - l^2/2) = sum_k l^k / sqrt(k!) h_k(x), via
/// h_{k+1} = -(x h_k + sqrt(k) h_{k-1}) / sqrt(k+1).
double hermite(int k, double x);

enum class ChaosKind {
  /// x_{n1} x_{n2} x_{n3}, n1 < n2 < n3 (degree 3)
  product3,
  /// x_{n1} (x_{n2}^2 - 1), n1 != n2 (degree 3)
  mixed3,
  /// x_n^2 - 1 (degree 2)
  square2,
};

int chaos_degree(ChaosKind kind);

struct ChaosTerm {
  /// 1-based variable indices; only the first 3, 2 or 1 are used by kind.
  std::array<int, 3> index{};
  double coeff = 0.0;
};

struct ChaosFunctionSpec {
  int dimension = 0;
  ChaosKind kind = ChaosKind::product3;
  std::vector<ChaosTerm> terms;

  /// Throws PreconditionError on empty terms, out-of-range or repeated indices.
  void validate() const;
  double evaluate(std::span<const double> x) const;
};

/// Random spec with `n_terms` distinct index tuples and N(0,1) coefficients.
ChaosFunctionSpec random_chaos_spec(ChaosKind kind, int dimension, int n_terms,
                                    RandomStream& stream);

/// E[H^p] for even integer p by pairing enumeration of the expanded polynomial.
double exact_chaos_moment(const ChaosFunctionSpec& spec, int p);

struct LpRatio {
  double p = 2.0;
  /// ||H||_p / ||H||_2 with a batch-bootstrap standard error.
  EstimateWithError ratio;
  /// (p - 1)^{k/2}
  double bound = 1.0;
  /// Monte Carlo E|H|^p and E H^2.
  double moment_p = 0.0;
  double moment_p_se = 0.0;
  double moment_2 = 0.0;
};

/// One sample set shared across all p. Standard errors come from
/// resampling chunk sums, 200 bootstrap replicates.
std::vector<LpRatio> chaos_lp_ratios(const ChaosFunctionSpec& spec, std::span<const double> p_list,
                                     std::size_t samples, const StreamFactory& streams);

LpRatio chaos_lp_ratio(const ChaosFunctionSpec& spec, double p, std::size_t samples,
                       const StreamFactory& streams);

/// 2 exp(-lambda^2 / (2 sum c^2)).
double gaussian_tail_bound(std::span<const double> c, double lambda);

/// P(|sum c_n l_n| > lambda) = erfc(lambda / (sqrt(2) ||c||)).
double exact_gaussian_tail(std::span<const double> c, double lambda);

/// Frequency of |sum c_n l_n| > lambda.
EstimateWithError empirical_tail(std::span<const double> c, double lambda, std::size_t samples,
                                 const StreamFactory& streams);

/// Hypothesis ||F||_p <= C N^{-alpha} p^{k/2} for all p >= 2.
struct MomentTailSpec {
  double C = 1.0;
  double alpha = 0.0;
  double N = 1.0;
  int k = 1;
};

/// P(|F| > lambda) <= C1 exp(-delta N^{2 alpha/k} lambda^{2/k}).
struct MomentTail {
  MomentTailSpec spec;
  /// k / (2 C^{2/k} e); any delta strictly below works.
  double ceiling = 0.0;
  double delta = 0.0;
  /// Bound on E exp(delta N^{2 alpha/k} |F|^{2/k}).
  double C1 = 0.0;

  double operator()(double lambda) const;
};

/// delta at half the ceiling, which makes the geometric tail ratio 1/2.
MomentTail moment_to_tail(const MomentTailSpec& spec);

}  // namespace gibbsbo
