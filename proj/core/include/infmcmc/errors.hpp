#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace infmcmc {

/// Vector or matrix sizes that do not agree with the operator they are passed to.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A model or kernel was asked for a capability it does not provide
/// (gradient on a gradient-free model, quadrature above three dimensions, ...).
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Numerical breakdown: NaN acceptance ratios, non-positive-definite operators.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration rejected; carries every violated field, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  std::vector<std::string> issues_;
};

/// Malformed dataset file; the message names the offending line.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_same_size(long expected, long actual, const char* what);

}  // namespace infmcmc
