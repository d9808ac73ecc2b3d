#include "../fftw_planner.hpp"
#include "infmcmc/errors.hpp"
#include "infmcmc/gaussian/basis.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <vector>

namespace infmcmc {

namespace detail {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

namespace {

// Amplitude of the k-th orthonormal 1-d DCT basis vector.
double amplitude(int k, int n) { return k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n); }

}  // namespace

CosineBasis::CosineBasis(int rows, int cols, std::vector<int> order)
    : rows_(rows), cols_(cols), order_(std::move(order)) {
  if (rows_ <= 0 || cols_ <= 0) throw std::invalid_argument("CosineBasis: empty lattice");
  const int cells = rows_ * cols_;
  if (order_.empty() || static_cast<int>(order_.size()) > cells) {
    throw std::invalid_argument("CosineBasis: need 0 < dim <= rows * cols");
  }
  std::vector<char> seen(cells, 0);
  for (int f : order_) {
    if (f < 0 || f >= cells || seen[f]) throw std::invalid_argument("CosineBasis: order is not an injection");
    seen[f] = 1;
  }

  // REDFT10 computes 2 sum_j x_j cos(pi k (j + 1/2) / n); orthonormal DCT-II
  // coefficients are that times a_k / 2 per axis. REDFT01 computes
  // y_0 + 2 sum_{k>0} y_k cos(...), so the inverse feeds y_k = c_k a_k (k = 0)
  // or c_k a_k / 2 (k > 0).
  forward_scale_.resize(cells);
  inverse_scale_.resize(cells);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const double ar = amplitude(r, rows_);
      const double ac = amplitude(c, cols_);
      forward_scale_[r * cols_ + c] = 0.25 * ar * ac;
      inverse_scale_[r * cols_ + c] = (r == 0 ? ar : 0.5 * ar) * (c == 0 ? ac : 0.5 * ac);
    }
  }

  std::vector<double> in(cells), out(cells);
  std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  forward_plan_ = fftw_plan_r2r_2d(rows_, cols_, in.data(), out.data(), FFTW_REDFT10, FFTW_REDFT10, flags);
  inverse_plan_ = fftw_plan_r2r_2d(rows_, cols_, in.data(), out.data(), FFTW_REDFT01, FFTW_REDFT01, flags);
  if (!forward_plan_ || !inverse_plan_) throw std::runtime_error("CosineBasis: FFTW planning failed");
}

CosineBasis::~CosineBasis() {
  std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
  if (forward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  if (inverse_plan_) fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
}

Vector CosineBasis::apply(const Vector& coeffs) const {
  require_same_size(dim(), coeffs.size(), "CosineBasis::apply");
  const Index cells = nodal_dim();
  Vector spectrum = Vector::Zero(cells);
  for (Index k = 0; k < coeffs.size(); ++k) {
    const int f = order_[k];
    spectrum[f] = coeffs[k] * inverse_scale_[f];
  }
  Vector nodal(cells);
  fftw_execute_r2r(static_cast<fftw_plan>(inverse_plan_), spectrum.data(), nodal.data());
  return nodal;
}

Vector CosineBasis::apply_transpose(const Vector& nodal) const {
  require_same_size(nodal_dim(), nodal.size(), "CosineBasis::apply_transpose");
  Vector input = nodal;
  Vector spectrum(nodal_dim());
  fftw_execute_r2r(static_cast<fftw_plan>(forward_plan_), input.data(), spectrum.data());
  Vector coeffs(dim());
  for (Index k = 0; k < coeffs.size(); ++k) {
    const int f = order_[k];
    coeffs[k] = spectrum[f] * forward_scale_[f];
  }
  return coeffs;
}

const Matrix& CosineBasis::dense() const {
  std::call_once(dense_once_, [this] {
    dense_.resize(nodal_dim(), dim());
    Vector e = Vector::Zero(dim());
    for (Index k = 0; k < dim(); ++k) {
      e[k] = 1.0;
      dense_.col(k) = apply(e);
      e[k] = 0.0;
    }
  });
  return dense_;
}

}  // namespace infmcmc
