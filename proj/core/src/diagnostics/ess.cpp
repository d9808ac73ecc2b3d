#include "infmcmc/diagnostics/ess.hpp"

#include "infmcmc/diagnostics/acf.hpp"

#include <algorithm>
#include <stdexcept>

namespace infmcmc {

EssValue ess(const Eigen::VectorXd& column) {
  const Eigen::Index n = column.size();
  if (n < 2) throw std::invalid_argument("ess: need at least two samples");
  const double nd = static_cast<double>(n);
  const Eigen::VectorXd gamma = autocovariance(column, static_cast<int>(n - 1));
  if (!(gamma[0] > 0.0)) return {nd, false, true};

  // sigma^2 = -gamma_0 + 2 sum_m Gamma_m with Gamma_m = gamma_{2m} + gamma_{2m+1}
  double sum = 0.0;
  for (Eigen::Index m = 0; 2 * m + 1 < gamma.size(); ++m) {
    const double pair = gamma[2 * m] + gamma[2 * m + 1];
    if (!(pair > 0.0)) break;
    sum += pair;
  }
  const double sigma2 = -gamma[0] + 2.0 * sum;
  if (!(sigma2 > 0.0)) return {nd, true, false};
  const double value = nd * gamma[0] / sigma2;
  if (value > nd) return {nd, true, false};
  return {value, false, false};
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty set");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

EssSummary summarize_ess(std::vector<double> per_coordinate, double wall_seconds, long iterations) {
  if (per_coordinate.empty()) throw std::invalid_argument("ess summary of an empty trace");
  EssSummary s;
  s.per_coordinate = std::move(per_coordinate);
  s.min_ess = *std::min_element(s.per_coordinate.begin(), s.per_coordinate.end());
  s.median_ess = median(s.per_coordinate);
  if (wall_seconds > 0.0) {
    s.min_per_second = s.min_ess / wall_seconds;
    s.median_per_second = s.median_ess / wall_seconds;
  }
  if (iterations > 0) {
    s.min_per_iteration = s.min_ess / static_cast<double>(iterations);
    s.median_per_iteration = s.median_ess / static_cast<double>(iterations);
  }
  return s;
}

EssSummary ess_summary(const Trace& trace, double wall_seconds, long iterations) {
  if (trace.burn_in < 0 || trace.burn_in >= trace.values.rows()) {
    throw std::invalid_argument("trace must have more rows than burn-in");
  }
  const Eigen::MatrixXd kept = trace.kept();
  std::vector<double> values;
  int capped = 0;
  int zero = 0;
  for (Eigen::Index c = 0; c < kept.cols(); ++c) {
    const EssValue e = ess(kept.col(c));
    values.push_back(e.ess);
    capped += e.capped ? 1 : 0;
    zero += e.zero_variance ? 1 : 0;
  }
  EssSummary s = summarize_ess(std::move(values), wall_seconds, iterations);
  s.capped = capped;
  s.zero_variance = zero;
  return s;
}

}  // namespace infmcmc
