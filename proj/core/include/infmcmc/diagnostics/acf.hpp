#pragma once

#include <Eigen/Dense>

#include <vector>

namespace infmcmc {

struct AcfValue {
  double value = 0.0;
  bool zero_variance = false;
};

/// Biased-normalised sample autocorrelation at one lag.
AcfValue autocorrelation(const Eigen::VectorXd& column, int lag);

/// Biased autocovariances gamma_0 .. gamma_{max_lag} by FFT (mean removed).
Eigen::VectorXd autocovariance(const Eigen::VectorXd& column, int max_lag);

/// ACF(lag) for each column of a trace at each requested lag.
/// Row i of the result is column i; zero-variance columns give 0.
Eigen::MatrixXd acf_table(const Eigen::MatrixXd& trace, const std::vector<int>& lags);

/// Online ACF at a fixed lag for many coordinates, without storing the
/// trace. Holds the last `lag` samples in a ring buffer.
class LagAccumulator {
 public:
  LagAccumulator(Eigen::Index dim, int lag);

  void push(const Eigen::VectorXd& x);
  long count() const { return n_; }
  int lag() const { return lag_; }
  /// Per-coordinate ACF(lag); coordinates with zero variance give 0.
  Eigen::VectorXd acf() const;
  double mean_acf() const;

 private:
  int lag_;
  long n_ = 0;
  Eigen::VectorXd shift_;      // first sample, subtracted for stability
  Eigen::VectorXd sum_;
  Eigen::VectorXd sum_sq_;
  Eigen::VectorXd cross_;      // sum_t y_t y_{t+lag}
  Eigen::VectorXd head_sum_;   // sum of the first lag samples
  Eigen::MatrixXd ring_;       // last lag samples, columns
};

}  // namespace infmcmc
