#include "infmcmc/adaptation/adapt_state.hpp"
#include "infmcmc/models/reference_models.hpp"
#include "infmcmc/random.hpp"
#include "infmcmc/samplers/kernels.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace infmcmc;
using tsupport::Gen;

namespace {

AdaptSettings settings_with(double target = 0.2) {
  AdaptSettings s;
  s.target_accept = target;
  return s;
}

double logit(double b) {
  b = std::clamp(b, 1e-12, 1.0 - 1e-12);
  return std::log(b) - std::log1p(-b);
}

}  // namespace

TEST_SUITE("adaptation") {
  TEST_CASE("first update copies the state and clamps the variance") {
    AdaptState a(3, settings_with(), 0.5);
    CHECK(a.d_hat == Vector::Ones(3));
    Vector z(3);
    z << 0.3, -1.2, 4.0;
    update_moments(a, z);
    CHECK(a.j == 1);
    CHECK(a.m_hat == z);
    CHECK((a.d_hat.array() == a.settings.d_min).all());
  }

  TEST_CASE("constant stream drives the mean to the constant and the variance to the floor") {
    AdaptState a(2, settings_with(), 0.5);
    Vector c(2);
    c << 1.75, -0.4;
    for (int i = 0; i < 1000; ++i) update_moments(a, c);
    CHECK((a.m_hat - c).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((a.d_hat.array() == a.settings.d_min).all());
  }

  TEST_CASE("i.i.d. stream estimates mean and variance") {
    const double mu = 0.7, tau = 1.9;
    AdaptState a(1, settings_with(), 0.5);
    RandomSource rng(401);
    for (int i = 0; i < 100000; ++i) update_moments(a, Vector::Constant(1, mu + tau * rng.normal()));
    CHECK(std::abs(a.m_hat[0] - mu) < 4.0 * std::sqrt(tau * tau / a.j));
    CHECK(std::abs(a.d_hat[0] - tau * tau) < 0.1 * tau * tau);
  }

  TEST_CASE("update recursion matches the definition step by step") {
    Gen gen(402);
    AdaptState a(4, settings_with(), 0.5);
    Vector m = Vector::Zero(4), d = Vector::Ones(4);
    for (int j = 1; j <= 200; ++j) {
      Vector z = gen.normal_vector(4, 2.0);
      const double w = 1.0 / j;
      m = w * z + (1.0 - w) * m;
      d = (w * (z - m).array().square() + (1.0 - w) * d.array()).max(a.settings.d_min).matrix();
      update_moments(a, z);
      CHECK((a.m_hat - m).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((a.d_hat - d).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("truncation grows by five every thousand updates") {
    AdaptState a(40, settings_with(), 0.5);
    CHECK(a.n_trunc == 5);
    Vector z = Vector::Zero(40);
    for (int j = 1; j <= 999; ++j) {
      update_moments(a, z);
      apply_truncation(a);
    }
    CHECK(a.j == 999);
    CHECK(a.n_trunc == 5);
    update_moments(a, z);
    apply_truncation(a);
    CHECK(a.n_trunc == 10);
    apply_truncation(a);
    CHECK(a.n_trunc == 10);
    for (int j = 1001; j <= 20000; ++j) {
      update_moments(a, z);
      apply_truncation(a);
    }
    CHECK(a.n_trunc == 40);
  }

  TEST_CASE("truncated views pin the tails and the diagnostic uses the head only") {
    Gen gen(403);
    AdaptSettings s = settings_with();
    s.n_interval = 50;
    s.n0 = 2;
    s.n_increment = 3;
    AdaptState a(12, s, 0.5);
    int last_n = a.n_trunc;
    for (int j = 1; j <= 400; ++j) {
      update_moments(a, gen.normal_vector(12, 3.0) + Vector::Constant(12, 1.0));
      apply_truncation(a);
      CHECK(a.n_trunc >= last_n);
      last_n = a.n_trunc;
      const Vector mt = a.m_tilde(), dt = a.d_tilde();
      const Index n = a.n_trunc;
      CHECK((mt.tail(12 - n).array() == 0.0).all());
      CHECK((dt.tail(12 - n).array() == 1.0).all());
      CHECK(mt.head(n) == a.m_hat.head(n));
      CHECK((a.d_hat.array() >= s.d_min).all());
      double head = 0.0;
      for (Index k = 0; k < n; ++k) head += (dt[k] - 1.0) * (dt[k] - 1.0);
      CHECK(std::isfinite(a.equivalence()));
      CHECK(a.equivalence() == doctest::Approx(head).epsilon(1e-14));
      CHECK(equivalence_diagnostic(a.scaling_tilde()) == doctest::Approx(head).epsilon(1e-12));
    }
  }

  TEST_CASE("untruncated estimator exposes every coordinate") {
    AdaptSettings s = settings_with();
    s.untruncated = true;
    AdaptState a(30, s, 0.5);
    CHECK(a.n_trunc == 30);
    for (int j = 1; j <= 2000; ++j) {
      update_moments(a, Vector::Constant(30, 2.0));
      apply_truncation(a);
    }
    CHECK(a.n_trunc == 30);
    CHECK(a.m_tilde() == a.m_hat);
  }

  TEST_CASE("controller fixed points, clamps and freezing") {
    AdaptState a(2, settings_with(0.25), 0.4);
    for (int i = 0; i < 100; ++i) tune_beta(a, 0.25);
    CHECK(a.beta == 0.4);

    AdaptState up(2, settings_with(0.2), 0.9);
    for (int i = 0; i < 20000; ++i) tune_beta(up, true);
    CHECK(up.beta <= 1.0);
    CHECK(up.beta > 0.99);
    AdaptState down(2, settings_with(0.2), 0.1);
    for (int i = 0; i < 200000; ++i) tune_beta(down, false);
    CHECK(down.beta >= 1e-4);

    AdaptState f(2, settings_with(0.2), 0.37);
    f.frozen = true;
    const Vector m = f.m_hat, d = f.d_hat;
    for (int i = 0; i < 100; ++i) {
      tune_beta(f, i % 2 == 0);
      update_moments(f, Vector::Constant(2, 5.0));
      apply_truncation(f);
    }
    CHECK(f.beta == 0.37);
    CHECK(f.j == 0);
    CHECK(f.m_hat == m);
    CHECK(f.d_hat == d);
  }

  TEST_CASE("delta controller moves on the log scale") {
    AdaptSettings s = settings_with(0.5);
    s.tune_delta = true;
    AdaptState a(1, s, 0.5, 1.0);
    tune_beta(a, true);
    CHECK(a.delta == doctest::Approx(std::exp(0.5)).epsilon(1e-14));
    CHECK(a.beta == 0.5);
    tune_beta(a, false);
    CHECK(a.delta == doctest::Approx(std::exp(0.5 - 0.5 * std::pow(2.0, -0.7))).epsilon(1e-14));
  }

  TEST_CASE("controller reaches the target acceptance on a 1-d Gaussian target") {
    GaussianLikelihoodModel model(diagonal_covariance(Vector::Ones(1)), Vector::Ones(1), 0.05);
    CoefficientTarget target(model);
    AdaptState a(1, settings_with(0.2), 0.5);
    ChainRandom rng(404);
    ChainState s = make_state(target, KernelKind::kPcn, Vector::Zero(1));
    long accepted_late = 0;
    const long steps = 50000;
    for (long t = 1; t <= steps; ++t) {
      KernelConfig cfg;
      cfg.kind = KernelKind::kPcn;
      configure_kernel(a, cfg);
      StepOutcome out = step(target, cfg, s, rng);
      s = out.new_state;
      tune_beta(a, out.accepted);
      if (t > steps / 2) accepted_late += out.accepted ? 1 : 0;
    }
    const double realised = static_cast<double>(accepted_late) / (steps / 2);
    CHECK(std::abs(realised - 0.2) < 0.05);
    CHECK(std::abs(a.accept_ema - 0.2) < 0.1);
    CHECK(a.beta > 1e-4);
    CHECK(a.beta < 1.0);
  }

  TEST_CASE("configure_kernel waits for adapt_start") {
    AdaptSettings s = settings_with();
    s.adapt_start = 10;
    AdaptState a(3, s, 0.3, 2.0);
    for (int j = 1; j <= 9; ++j) update_moments(a, Vector::Constant(3, 1.0 + j));
    for (KernelKind kind : kAllKernels) {
      KernelConfig cfg;
      cfg.kind = kind;
      configure_kernel(a, cfg);
      CHECK(cfg.beta == 0.3);
      CHECK(cfg.delta == 2.0);
      CHECK(cfg.scaling.size() == 0);
      CHECK(cfg.mean.size() == 0);
    }
    update_moments(a, Vector::Constant(3, 11.0));
    for (KernelKind kind : kAllKernels) {
      CAPTURE(to_string(kind));
      KernelConfig cfg;
      cfg.kind = kind;
      configure_kernel(a, cfg);
      CHECK((cfg.scaling.size() == 3) == uses_scaling(kind));
      CHECK((cfg.mean.size() == 3) == uses_mean(kind));
      if (uses_mean(kind)) CHECK(cfg.mean == a.m_tilde());
      if (uses_scaling(kind)) CHECK(cfg.scaling.values() == a.d_tilde());
    }
  }

  TEST_CASE("diminishing adaptation over a logged run") {
    auto model = tsupport::small_logistic(3);
    CoefficientTarget target(model);
    AdaptSettings s = settings_with(0.2);
    s.untruncated = true;
    AdaptState a(3, s, 0.5);
    ChainRandom rng(405);
    ChainState state = make_state(target, KernelKind::kPcnAm, Vector::Zero(3));
    const long steps = 50000, fit = 1000;
    double c_mean = 0.0, c_var = 0.0, worst_mean = 0.0, worst_var = 0.0, worst_beta = 0.0;
    for (long t = 1; t <= steps; ++t) {
      KernelConfig cfg;
      cfg.kind = KernelKind::kPcnAm;
      configure_kernel(a, cfg);
      StepOutcome out = step(target, cfg, state, rng);
      state = out.new_state;
      const Vector m_prev = a.m_tilde(), d_prev = a.d_tilde();
      const double beta_prev = a.beta;
      update_moments(a, state.z);
      apply_truncation(a);
      tune_beta(a, out.accepted);
      const double jm = a.j * (a.m_tilde() - m_prev).cwiseAbs().maxCoeff();
      const double jd = a.j * (a.d_tilde() - d_prev).cwiseAbs().maxCoeff();
      const double jb = std::pow(static_cast<double>(a.tune_count), 0.7) * std::abs(logit(a.beta) - logit(beta_prev));
      if (t <= fit) {
        c_mean = std::max(c_mean, jm);
        c_var = std::max(c_var, jd);
      } else {
        worst_mean = std::max(worst_mean, jm);
        worst_var = std::max(worst_var, jd);
      }
      worst_beta = std::max(worst_beta, jb);
    }
    CHECK(worst_mean <= 3.0 * c_mean);
    CHECK(worst_var <= 3.0 * c_var);
    CHECK(worst_beta <= 1.0 + 1e-9);
  }
}
