#include "infmcmc/errors.hpp"
#include "infmcmc/gaussian/basis.hpp"
#include "infmcmc/gaussian/measure.hpp"
#include "infmcmc/gaussian/scaling.hpp"
#include "infmcmc/gaussian/spectral_covariance.hpp"
#include "infmcmc/models/lattice.hpp"
#include "infmcmc/random.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace infmcmc;
using tsupport::Gen;

namespace {

std::shared_ptr<const SpectralCovariance> diag_cov(std::initializer_list<double> values) {
  Vector eig(static_cast<Index>(values.size()));
  Index i = 0;
  for (double v : values) eig[i++] = v;
  return diagonal_covariance(eig);
}

std::shared_ptr<const SpectralCovariance> random_dense_cov(Index n, Gen& gen) {
  Vector eig = gen.uniform_vector(n, 0.1, 5.0);
  std::sort(eig.data(), eig.data() + n, std::greater<>());
  return std::make_shared<SpectralCovariance>(std::make_shared<DenseBasis>(gen.orthonormal(n)), eig);
}

std::shared_ptr<const SpectralCovariance> cosine_cov(int rows, int cols, int truncation) {
  LatticeSpec lattice{rows, cols, 1.0};
  return matern_lattice_covariance(lattice, 0.7, 1.0, 2, truncation);
}

double rel_err(const Vector& a, const Vector& b) { return (a - b).norm() / std::max(1e-300, b.norm()); }

}  // namespace

TEST_SUITE("gaussian_core") {
  TEST_CASE("to_coefficients examples") {
    auto cov = diag_cov({4.0, 1.0});
    CHECK(cov->to_coefficients(Vector::Zero(2)).isZero(0.0));
    Vector u(2);
    u << 2.0, 3.0;
    Vector z = cov->to_coefficients(u);
    CHECK(z[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(z[1] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(cov->to_coefficients(Vector::Zero(3)), DimensionMismatch);
  }

  TEST_CASE("from_coefficients examples") {
    auto cov = diag_cov({4.0, 1.0});
    CHECK(cov->from_coefficients(Vector::Zero(2)).isZero(0.0));
    Vector z(2);
    z << 1.0, 3.0;
    Vector u = cov->from_coefficients(z);
    CHECK(u[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(u[1] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(cov->from_coefficients(Vector::Zero(1)), DimensionMismatch);
  }

  TEST_CASE("round trip in both directions for dense and cosine bases") {
    Gen gen(101);
    std::vector<std::shared_ptr<const SpectralCovariance>> covs;
    for (Index n : {1, 2, 3, 8, 17}) covs.push_back(random_dense_cov(n, gen));
    covs.push_back(cosine_cov(4, 4, 0));
    covs.push_back(cosine_cov(5, 3, 0));
    covs.push_back(cosine_cov(8, 8, 0));
    for (const auto& cov : covs) {
      for (int trial = 0; trial < 100; ++trial) {
        Vector u = gen.normal_vector(cov->nodal_dim());
        CHECK(rel_err(cov->from_coefficients(cov->to_coefficients(u)), u) < 1e-10);
        Vector z = gen.normal_vector(cov->dim());
        CHECK(rel_err(cov->to_coefficients(cov->from_coefficients(z)), z) < 1e-10);
      }
    }
  }

  TEST_CASE("truncated cosine basis is orthonormal on its span") {
    Gen gen(102);
    auto cov = cosine_cov(6, 5, 12);
    REQUIRE(cov->dim() == 12);
    const BasisMap& p = cov->basis();
    for (int trial = 0; trial < 100; ++trial) {
      Vector z = gen.normal_vector(12);
      CHECK(rel_err(p.apply_transpose(p.apply(z)), z) < 1e-10);
      CHECK(rel_err(cov->to_coefficients(cov->from_coefficients(z)), z) < 1e-10);
    }
    Matrix ptp = p.dense().transpose() * p.dense();
    CHECK((ptp - Matrix::Identity(12, 12)).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("P P^T is the identity for full bases") {
    Gen gen(103);
    std::vector<std::shared_ptr<const SpectralCovariance>> covs{random_dense_cov(8, gen), cosine_cov(7, 4, 0)};
    for (const auto& cov : covs) {
      const BasisMap& p = cov->basis();
      for (int trial = 0; trial < 100; ++trial) {
        Vector x = gen.normal_vector(p.nodal_dim());
        CHECK(rel_err(p.apply(p.apply_transpose(x)), x) < 1e-10);
      }
    }
  }

  TEST_CASE("cosine basis matches the closed-form DCT columns") {
    const int rows = 5, cols = 4;
    LatticeSpec lattice{rows, cols, 1.0};
    auto order = laplacian_frequency_order(lattice);
    CosineBasis basis(rows, cols, order);
    const Matrix& dense = basis.dense();
    const double pi = std::acos(-1.0);
    for (Index k = 0; k < basis.dim(); ++k) {
      const int f = order[static_cast<size_t>(k)];
      const int fr = f / cols, fc = f % cols;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const double ar = fr == 0 ? std::sqrt(1.0 / rows) : std::sqrt(2.0 / rows);
          const double ac = fc == 0 ? std::sqrt(1.0 / cols) : std::sqrt(2.0 / cols);
          const double expected = ar * ac * std::cos(pi * fr * (r + 0.5) / rows) * std::cos(pi * fc * (c + 0.5) / cols);
          CHECK(std::abs(dense(r * cols + c, k) - expected) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("covariance operators agree with dense assembly") {
    Gen gen(104);
    auto cov = random_dense_cov(6, gen);
    Matrix c = cov->dense();
    CHECK((c - c.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Matrix s = cov->dense_sqrt();
    CHECK((s * s.transpose() - c).cwiseAbs().maxCoeff() < 1e-12);
    Vector u = gen.normal_vector(6);
    CHECK(rel_err(cov->apply(u), c * u) < 1e-12);
    CHECK(rel_err(cov->apply_inverse(cov->apply(u)), u) < 1e-10);
    CHECK(rel_err(cov->whiten_gradient(u), s.transpose() * u) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(c);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }

  TEST_CASE("spectral covariance rejects invalid eigenvalues") {
    auto basis = std::make_shared<DenseBasis>(Matrix::Identity(2, 2));
    Vector increasing(2);
    increasing << 1.0, 2.0;
    CHECK_THROWS_AS(SpectralCovariance(basis, increasing), std::invalid_argument);
    Vector nonpositive(2);
    nonpositive << 1.0, 0.0;
    CHECK_THROWS_AS(SpectralCovariance(basis, nonpositive), NumericalError);
    CHECK_THROWS_AS(SpectralCovariance(basis, Vector::Ones(3)), DimensionMismatch);
  }

  TEST_CASE("sample_prior identity scaling") {
    GaussianMeasure measure{Vector::Zero(4), diag_cov({1.0, 1.0, 1.0, 1.0}), std::nullopt};
    RandomSource rng(7);
    const int n = 100000;
    Matrix draws(n, 4);
    for (int i = 0; i < n; ++i) draws.row(i) = sample_prior(measure, rng).transpose();
    Vector mean = draws.colwise().mean().transpose();
    Matrix centred = draws.rowwise() - mean.transpose();
    Matrix cov = centred.transpose() * centred / n;
    for (int k = 0; k < 4; ++k) CHECK(std::abs(cov(k, k) - 1.0) < 0.05);
    // Off-diagonal sample covariance of independent unit normals has se 1/sqrt(n).
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) CHECK(std::abs(cov(a, b)) < 4.0 / std::sqrt(n));
  }

  TEST_CASE("sample_prior scaled coordinates") {
    Vector d(4);
    d << 4.0, 1.0, 1.0, 1.0;
    Vector mean(4);
    mean << 1.0, -1.0, 0.0, 0.5;
    GaussianMeasure measure{mean, diag_cov({1.0, 1.0, 1.0, 1.0}), DiagonalScaling(d)};
    RandomSource rng(8);
    const int n = 100000;
    Matrix draws(n, 4);
    for (int i = 0; i < n; ++i) draws.row(i) = sample_prior(measure, rng).transpose();
    Vector m = draws.colwise().mean().transpose();
    Matrix centred = draws.rowwise() - m.transpose();
    Matrix cov = centred.transpose() * centred / n;
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(cov(k, k) - d[k]) < 0.05 * d[k]);
      CHECK(std::abs(m[k] - mean[k]) < 4.0 * std::sqrt(d[k] / n));
    }
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) CHECK(std::abs(cov(a, b)) < 4.0 * std::sqrt(d[a] * d[b] / n));
  }

  TEST_CASE("sample_prior is deterministic per seed") {
    GaussianMeasure measure{Vector::Zero(8), diag_cov({1, 1, 1, 1, 1, 1, 1, 1}), std::nullopt};
    RandomSource a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(sample_prior(measure, a) == sample_prior(measure, b));
  }

  TEST_CASE("equivalence_diagnostic examples and permutation invariance") {
    CHECK(equivalence_diagnostic(DiagonalScaling::identity(6)) == 0.0);
    Vector d(4);
    d << 2.0, 1.0, 1.0, 1.0;
    CHECK(equivalence_diagnostic(DiagonalScaling(d)) == doctest::Approx(1.0).epsilon(1e-15));
    d << 1.5, 0.5, 1.0, 1.0;
    CHECK(equivalence_diagnostic(DiagonalScaling(d)) == doctest::Approx(0.5).epsilon(1e-15));

    Gen gen(105);
    for (int trial = 0; trial < 100; ++trial) {
      const Index n = gen.integer(1, 12);
      Vector v = gen.uniform_vector(n, 0.01, 5.0);
      Vector w = v;
      std::shuffle(w.data(), w.data() + n, gen.engine());
      CHECK(equivalence_diagnostic(DiagonalScaling(v)) ==
            doctest::Approx(equivalence_diagnostic(DiagonalScaling(w))).epsilon(1e-13));
    }
  }

  TEST_CASE("change_of_measure_logterm examples and dense oracle") {
    Gen gen(106);
    for (int trial = 0; trial < 100; ++trial) {
      Vector z = gen.normal_vector(gen.integer(1, 10), 3.0);
      CHECK(change_of_measure_logterm(z, DiagonalScaling::identity(z.size())) == 0.0);
    }
    CHECK(change_of_measure_logterm(Vector::Constant(1, 2.0), DiagonalScaling(Vector::Constant(1, 2.0))) ==
          doctest::Approx(1.0).epsilon(1e-15));
    for (int trial = 0; trial < 100; ++trial) {
      const Index n = gen.integer(1, 10);
      Vector z = gen.normal_vector(n);
      Vector d = gen.uniform_vector(n, 0.2, 4.0);
      Matrix lambda_inv = d.cwiseInverse().asDiagonal();
      const double dense = 0.5 * z.dot((Matrix::Identity(n, n) - lambda_inv) * z);
      CHECK(std::abs(change_of_measure_logterm(z, DiagonalScaling(d)) - dense) < 1e-12);
    }
    CHECK_THROWS_AS(change_of_measure_logterm(Vector::Zero(2), DiagonalScaling::identity(3)), DimensionMismatch);
  }

  TEST_CASE("cameron_martin_norm_sq examples") {
    CHECK(cameron_martin_norm_sq(Vector::Zero(3), DiagonalScaling::identity(3)) == 0.0);
    Vector m(2);
    m << 3.0, 4.0;
    CHECK(cameron_martin_norm_sq(m, DiagonalScaling::identity(2)) == doctest::Approx(25.0).epsilon(1e-15));
    m << 2.0, 0.0;
    Vector d(2);
    d << 4.0, 1.0;
    CHECK(cameron_martin_norm_sq(m, DiagonalScaling(d)) == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("diagonal scaling clamps to the floor") {
    Vector d(3);
    d << 0.0, 1e-12, 2.0;
    DiagonalScaling s(d);
    CHECK(s[0] == kDefaultScalingFloor);
    CHECK(s[1] == kDefaultScalingFloor);
    CHECK(s[2] == 2.0);
    CHECK(DiagonalScaling::identity(4).is_identity());
    CHECK_FALSE(s.is_identity());
    Vector bad(1);
    bad << std::nan("");
    CHECK_THROWS(DiagonalScaling(bad));
  }
}
