#pragma once

#include <stdexcept>
#include <string>

namespace qrelax {

// Input exceeds a hard size cap (brute force, eigensolver, oracle matrices).
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative method exhausted its iteration budget without meeting tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what, double residual = 0.0)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Lookup of a named resource (fixture) failed.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qrelax
