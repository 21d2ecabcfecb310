#include "gibbsbo/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "gibbsbo/errors.hpp"

namespace gibbsbo {

bool EstimateWithError::within(double target, double k) const {
  return std::abs(value - target) <= k * std_error;
}

double MomentAccumulator::mean() const {
  return count_ == 0 ? 0.0 : sum_.value() / static_cast<double>(count_);
}

double MomentAccumulator::variance() const {
  if (count_ < 2) return 0.0;
  const double n = static_cast<double>(count_);
  const double s = sum_.value();
  const double v = (sum_sq_.value() - s * s / n) / (n - 1.0);
  return v > 0.0 ? v : 0.0;
}

double MomentAccumulator::std_error() const {
  return count_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

EstimateWithError MomentAccumulator::estimate(std::uint64_t seed) const {
  return {mean(), std_error(), count_, seed};
}

void WeightedAccumulator::add(double weight, double value) {
  ++count_;
  w_.add(weight);
  w2_.add(weight * weight);
  wh_.add(weight * value);
  w2h_.add(weight * weight * value);
  w2h2_.add(weight * weight * value * value);
}

void WeightedAccumulator::merge(const WeightedAccumulator& other) {
  count_ += other.count_;
  w_.merge(other.w_);
  w2_.merge(other.w2_);
  wh_.merge(other.wh_);
  w2h_.merge(other.w2h_);
  w2h2_.merge(other.w2h2_);
}

double WeightedAccumulator::effective_sample_size() const {
  const double w2 = w2_.value();
  if (w2 <= 0.0) return 0.0;
  const double w = w_.value();
  return w * w / w2;
}

double WeightedAccumulator::mean() const {
  const double w = w_.value();
  return w > 0.0 ? wh_.value() / w : 0.0;
}

double WeightedAccumulator::std_error() const {
  // Var ~ sum w_i^2 (h_i - mu)^2 / (sum w_i)^2
  const double w = w_.value();
  if (w <= 0.0) return 0.0;
  const double mu = mean();
  const double num = w2h2_.value() - 2.0 * mu * w2h_.value() + mu * mu * w2_.value();
  return num > 0.0 ? std::sqrt(num) / w : 0.0;
}

EstimateWithError WeightedAccumulator::estimate(std::uint64_t seed) const {
  return {mean(), std_error(), count_, seed};
}

double jackknife_ratio_se(std::span<const double> weights,
                          std::span<const double> values, std::size_t groups) {
  if (weights.size() != values.size()) {
    throw PreconditionError("jackknife: weights and values differ in length");
  }
  const std::size_t n = weights.size();
  if (groups < 2 || groups > n) {
    throw PreconditionError("jackknife: need 2 <= groups <= samples");
  }
  std::vector<double> gw(groups, 0.0), gwh(groups, 0.0);
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t begin = g * n / groups;
    const std::size_t end = (g + 1) * n / groups;
    CompensatedSum sw, swh;
    for (std::size_t i = begin; i < end; ++i) {
      sw.add(weights[i]);
      swh.add(weights[i] * values[i]);
    }
    gw[g] = sw.value();
    gwh[g] = swh.value();
  }
  CompensatedSum tw, twh;
  for (std::size_t g = 0; g < groups; ++g) {
    tw.add(gw[g]);
    twh.add(gwh[g]);
  }
  std::vector<double> leave_out(groups);
  CompensatedSum mean_acc;
  for (std::size_t g = 0; g < groups; ++g) {
    const double w = tw.value() - gw[g];
    leave_out[g] = w > 0.0 ? (twh.value() - gwh[g]) / w : 0.0;
    mean_acc.add(leave_out[g]);
  }
  const double k = static_cast<double>(groups);
  const double mean = mean_acc.value() / k;
  CompensatedSum ss;
  for (double v : leave_out) ss.add((v - mean) * (v - mean));
  return std::sqrt((k - 1.0) / k * ss.value());
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y,
                   std::span<const double> weights) {
  if (x.size() != y.size() || x.size() < 2 ||
      (!weights.empty() && weights.size() != x.size())) {
    throw PreconditionError("fit_line: need at least two matching points");
  }
  double sw = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    sw += w;
    sx += w * x[i];
    sy += w * y[i];
  }
  const double mx = sx / sw, my = sy / sw;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    sxx += w * (x[i] - mx) * (x[i] - mx);
    sxy += w * (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0.0) throw PreconditionError("fit_line: degenerate abscissae");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    fit.rss += w * r * r;
  }
  if (weights.empty()) {
    const double dof = static_cast<double>(x.size()) - 2.0;
    fit.slope_se = dof > 0 ? std::sqrt(fit.rss / dof / sxx) : 0.0;
  } else {
    fit.slope_se = std::sqrt(1.0 / sxx);
  }
  return fit;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace gibbsbo
