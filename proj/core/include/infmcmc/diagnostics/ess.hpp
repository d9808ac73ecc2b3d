#pragma once

#include <Eigen/Dense>

#include <vector>

namespace infmcmc {

struct EssValue {
  double ess = 0.0;
  bool capped = false;         // negatively correlated chain, reported as n
  bool zero_variance = false;  // constant column, reported as n
};

/// n / (1 + 2 sum rho_k) with Geyer's initial positive sequence: pairs
/// rho_{2m} + rho_{2m+1} are summed while positive. Capped at n.
EssValue ess(const Eigen::VectorXd& column);

/// A chain trace, iterations x coordinates, with leading burn-in rows.
struct Trace {
  Eigen::MatrixXd values;
  int burn_in = 0;

  /// Rows after burn-in.
  Eigen::MatrixXd kept() const { return values.bottomRows(values.rows() - burn_in); }
};

struct EssSummary {
  std::vector<double> per_coordinate;
  double min_ess = 0.0;
  double median_ess = 0.0;
  double min_per_second = 0.0;
  double median_per_second = 0.0;
  double min_per_iteration = 0.0;
  double median_per_iteration = 0.0;
  int capped = 0;
  int zero_variance = 0;
};

/// Median of an even count is the mean of the two middle values.
double median(std::vector<double> values);

EssSummary summarize_ess(std::vector<double> per_coordinate, double wall_seconds, long iterations);
EssSummary ess_summary(const Trace& trace, double wall_seconds, long iterations);

}  // namespace infmcmc
