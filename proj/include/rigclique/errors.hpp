#pragma once

#include <stdexcept>
#include <string>

namespace rigclique {

/// Raised when caller-supplied data violates a documented precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative numeric routine fails to meet its tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace rigclique
