#include "infmcmc/diagnostics/acf.hpp"

#include "../fftw_planner.hpp"

#include <fftw3.h>

#include <complex>
#include <stdexcept>

namespace infmcmc {

namespace {

int fft_length(int n) {
  int m = 1;
  while (m < 2 * n) m *= 2;
  return m;
}

}  // namespace

AcfValue autocorrelation(const Eigen::VectorXd& column, int lag) {
  const Eigen::Index n = column.size();
  if (lag < 0 || lag >= n) throw std::invalid_argument("autocorrelation: lag must lie in [0, length)");
  const Eigen::VectorXd y = column.array() - column.mean();
  const double var = y.squaredNorm();
  if (!(var > 0.0)) return {0.0, true};
  const double cross = y.head(n - lag).dot(y.tail(n - lag));
  return {cross / var, false};
}

Eigen::VectorXd autocovariance(const Eigen::VectorXd& column, int max_lag) {
  const int n = static_cast<int>(column.size());
  if (n < 1) throw std::invalid_argument("autocovariance: empty column");
  max_lag = std::min(max_lag, n - 1);
  const int m = fft_length(n);

  std::vector<double> buf(m, 0.0);
  const double mean = column.mean();
  for (int i = 0; i < n; ++i) buf[i] = column[i] - mean;
  std::vector<std::complex<double>> spec(m / 2 + 1);

  fftw_plan forward;
  fftw_plan inverse;
  {
    std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
    forward = fftw_plan_dft_r2c_1d(m, buf.data(), reinterpret_cast<fftw_complex*>(spec.data()),
                                   FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    inverse = fftw_plan_dft_c2r_1d(m, reinterpret_cast<fftw_complex*>(spec.data()), buf.data(), FFTW_ESTIMATE);
  }
  fftw_execute(forward);
  for (auto& c : spec) c = std::norm(c);
  fftw_execute(inverse);
  {
    std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(inverse);
  }

  Eigen::VectorXd gamma(max_lag + 1);
  const double scale = 1.0 / (static_cast<double>(m) * n);
  for (int k = 0; k <= max_lag; ++k) gamma[k] = buf[k] * scale;
  return gamma;
}

Eigen::MatrixXd acf_table(const Eigen::MatrixXd& trace, const std::vector<int>& lags) {
  Eigen::MatrixXd out(trace.cols(), static_cast<Eigen::Index>(lags.size()));
  for (Eigen::Index c = 0; c < trace.cols(); ++c) {
    const Eigen::VectorXd col = trace.col(c);
    for (std::size_t k = 0; k < lags.size(); ++k) {
      out(c, static_cast<Eigen::Index>(k)) = lags[k] < col.size() ? autocorrelation(col, lags[k]).value : 0.0;
    }
  }
  return out;
}

LagAccumulator::LagAccumulator(Eigen::Index dim, int lag)
    : lag_(lag),
      shift_(Eigen::VectorXd::Zero(dim)),
      sum_(Eigen::VectorXd::Zero(dim)),
      sum_sq_(Eigen::VectorXd::Zero(dim)),
      cross_(Eigen::VectorXd::Zero(dim)),
      head_sum_(Eigen::VectorXd::Zero(dim)),
      ring_(Eigen::MatrixXd::Zero(dim, std::max(lag, 1))) {
  if (lag < 1) throw std::invalid_argument("LagAccumulator: lag must be >= 1");
}

void LagAccumulator::push(const Eigen::VectorXd& x) {
  if (x.size() != shift_.size()) throw std::invalid_argument("LagAccumulator: dimension mismatch");
  if (n_ == 0) shift_ = x;
  const Eigen::VectorXd y = x - shift_;
  const Eigen::Index slot = n_ % lag_;
  if (n_ >= lag_) cross_ += ring_.col(slot).cwiseProduct(y);
  if (n_ < lag_) head_sum_ += y;
  ring_.col(slot) = y;
  sum_ += y;
  sum_sq_ += y.cwiseAbs2();
  ++n_;
}

// With s the total, h the first lag values and t the last lag values,
// sum_{t < n - lag} (y_t - ybar)(y_{t+lag} - ybar)
//   = cross - ybar ((s - t) + (s - h)) + (n - lag) ybar^2.
Eigen::VectorXd LagAccumulator::acf() const {
  const Eigen::Index dim = shift_.size();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  if (n_ <= lag_) return out;
  const double n = static_cast<double>(n_);
  const Eigen::VectorXd tail_sum = ring_.rowwise().sum();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double ybar = sum_[i] / n;
    const double var = sum_sq_[i] - n * ybar * ybar;
    if (!(var > 1e-300)) continue;
    const double cov = cross_[i] - ybar * ((sum_[i] - tail_sum[i]) + (sum_[i] - head_sum_[i])) +
                       (n - lag_) * ybar * ybar;
    out[i] = cov / var;
  }
  return out;
}

double LagAccumulator::mean_acf() const { return acf().mean(); }

}  // namespace infmcmc
