#include "infmcmc/diagnostics/ess.hpp"
#include "infmcmc/models/lattice.hpp"
#include "infmcmc/random.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace infmcmc;

void BM_CosineRoundTrip(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto cov = matern_lattice_covariance({side, side, 1.0}, 0.3, 1.0, 2);
  RandomSource rng(1);
  const Vector z = rng.standard_normal(cov->dim());
  for (auto _ : state) {
    Vector u = cov->from_coefficients(z);
    benchmark::DoNotOptimize(cov->to_coefficients(u));
  }
  state.SetItemsProcessed(state.iterations() * cov->dim());
}
BENCHMARK(BM_CosineRoundTrip)->Arg(16)->Arg(32)->Arg(64);

void BM_DenseRoundTrip(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto cov = matern_lattice_covariance({side, side, 1.0}, 0.3, 1.0, 2);
  const Matrix S = cov->dense_sqrt();
  RandomSource rng(1);
  const Vector z = rng.standard_normal(cov->dim());
  for (auto _ : state) {
    Vector u = S * z;
    benchmark::DoNotOptimize(S.transpose() * u);
  }
}
BENCHMARK(BM_DenseRoundTrip)->Arg(16)->Arg(32);

void BM_EssAr1(benchmark::State& state) {
  const long n = state.range(0);
  RandomSource rng(7);
  Vector x(n);
  x[0] = rng.normal();
  for (long i = 1; i < n; ++i) x[i] = 0.9 * x[i - 1] + rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(ess(x));
}
BENCHMARK(BM_EssAr1)->Arg(10000)->Arg(100000);

}  // namespace
