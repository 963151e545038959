#pragma once

#include <stdexcept>
#include <string>

namespace mpip {

// A float32 or binary16 conversion left the representable range.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Cholesky pivot was not positive at the factorization precision.
class CholeskyBreakdown : public std::runtime_error {
 public:
  CholeskyBreakdown(int pivot, const std::string& what)
      : std::runtime_error(what), pivot_(pivot) {}
  // 0-based index of the failing pivot.
  int pivot() const { return pivot_; }

 private:
  int pivot_;
};

// The regularized normal equations could not be solved even in float64.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpip
