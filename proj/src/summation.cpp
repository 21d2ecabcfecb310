#include "gibbsbo/summation.hpp"

#include <cmath>

namespace gibbsbo {

void CompensatedSum::add(double value) {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    compensation_ += (sum_ - t) + value;
  } else {
    compensation_ += (value - t) + sum_;
  }
  sum_ = t;
}

void CompensatedSum::merge(const CompensatedSum& other) {
  add(other.sum_);
  compensation_ += other.compensation_;
}

}  // namespace gibbsbo
