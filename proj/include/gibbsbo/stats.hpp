#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gibbsbo/summation.hpp"

namespace gibbsbo {

/// Monte Carlo estimate with its standard error.
struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;

  /// |value - target| <= k * std_error
  bool within(double target, double k = 3.0) const;
};

/// Mergeable first/second moment accumulator over compensated sums.
class MomentAccumulator {
 public:
  void add(double x) {
    ++count_;
    sum_.add(x);
    sum_sq_.add(x * x);
  }
  void merge(const MomentAccumulator& other) {
    count_ += other.count_;
    sum_.merge(other.sum_);
    sum_sq_.merge(other.sum_sq_);
  }

  std::size_t count() const { return count_; }
  double sum() const { return sum_.value(); }
  double mean() const;
  /// Unbiased sample variance (0 when fewer than two samples).
  double variance() const;
  double std_error() const;
  EstimateWithError estimate(std::uint64_t seed = 0) const;

 private:
  std::size_t count_ = 0;
  CompensatedSum sum_;
  CompensatedSum sum_sq_;
};

/// Self-normalised importance-sampling accumulator for E_w[h] with
/// delta-method standard error. Tracks sums of w, w^2, w h, w^2 h, w^2 h^2.
class WeightedAccumulator {
 public:
  void add(double weight, double value);
  void merge(const WeightedAccumulator& other);

  std::size_t count() const { return count_; }
  double weight_sum() const { return w_.value(); }
  double effective_sample_size() const;
  double mean() const;
  double std_error() const;
  EstimateWithError estimate(std::uint64_t seed = 0) const;

 private:
  std::size_t count_ = 0;
  CompensatedSum w_, w2_, wh_, w2h_, w2h2_;
};

/// Delete-one-group jackknife standard error of a self-normalised ratio
/// estimator sum(w h)/sum(w), using `groups` contiguous groups.
double jackknife_ratio_se(std::span<const double> weights,
                          std::span<const double> values, std::size_t groups);

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double slope_se = 0.0;
  /// Weighted residual sum of squares.
  double rss = 0.0;
};

/// Weighted least squares y = a + b x; weights are inverse variances.
/// Pass an empty weight span for ordinary least squares.
LinearFit fit_line(std::span<const double> x, std::span<const double> y,
                   std::span<const double> weights = {});

double normal_cdf(double x);

}  // namespace gibbsbo
