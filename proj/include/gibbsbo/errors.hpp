#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gibbsbo {

/// A caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grid too coarse for an exact synthesis/analysis or product.
class GridTooSmallError : public PreconditionError {
 public:
  GridTooSmallError(std::size_t grid, std::size_t required)
      : PreconditionError("grid of " + std::to_string(grid) +
                          " points is too small; need at least " +
                          std::to_string(required)),
        grid_(grid),
        required_(required) {}

  std::size_t grid() const { return grid_; }
  std::size_t required() const { return required_; }

 private:
  std::size_t grid_;
  std::size_t required_;
};

/// Time integration produced a NaN or infinity.
class NonFiniteStateError : public std::runtime_error {
 public:
  explicit NonFiniteStateError(std::size_t step)
      : std::runtime_error("non-finite coefficient after step " +
                           std::to_string(step)),
        step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// A mathematical invariant that must hold exactly was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gibbsbo
