#pragma once

#include <Eigen/Dense>

#include <mutex>
#include <vector>

namespace infmcmc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Orthonormal map P between eigen-coordinates (length dim) and nodal
/// coordinates (length nodal_dim). Columns of P are the covariance
/// eigenvectors, so P^T P = I. When dim < nodal_dim the map is a truncated
/// Karhunen-Loeve basis and P P^T is the projector onto its span.
class BasisMap {
 public:
  virtual ~BasisMap() = default;

  virtual Index nodal_dim() const = 0;
  virtual Index dim() const = 0;

  /// nodal = P * coeffs
  virtual Vector apply(const Vector& coeffs) const = 0;
  /// coeffs = P^T * nodal
  virtual Vector apply_transpose(const Vector& nodal) const = 0;
  /// Explicit nodal_dim x dim matrix.
  virtual const Matrix& dense() const = 0;
};

/// P stored as an explicit matrix, typically from a kernel eigendecomposition.
class DenseBasis final : public BasisMap {
 public:
  explicit DenseBasis(Matrix columns);

  Index nodal_dim() const override { return columns_.rows(); }
  Index dim() const override { return columns_.cols(); }
  Vector apply(const Vector& coeffs) const override;
  Vector apply_transpose(const Vector& nodal) const override;
  const Matrix& dense() const override { return columns_; }

 private:
  Matrix columns_;
};

/// Orthonormal 2-d cosine (DCT-II / DCT-III) basis on a rows x cols lattice,
/// which diagonalises the 5-point Neumann Laplacian. Flat nodal index is
/// r * cols + c. Coefficient k corresponds to the flat frequency order[k].
class CosineBasis final : public BasisMap {
 public:
  CosineBasis(int rows, int cols, std::vector<int> order);
  ~CosineBasis() override;
  CosineBasis(const CosineBasis&) = delete;
  CosineBasis& operator=(const CosineBasis&) = delete;

  Index nodal_dim() const override { return static_cast<Index>(rows_) * cols_; }
  Index dim() const override { return static_cast<Index>(order_.size()); }
  Vector apply(const Vector& coeffs) const override;
  Vector apply_transpose(const Vector& nodal) const override;
  const Matrix& dense() const override;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<int>& order() const { return order_; }

 private:
  int rows_;
  int cols_;
  std::vector<int> order_;
  Vector forward_scale_;  // per flat frequency
  Vector inverse_scale_;
  void* forward_plan_ = nullptr;
  void* inverse_plan_ = nullptr;
  mutable std::once_flag dense_once_;
  mutable Matrix dense_;
};

}  // namespace infmcmc
