#include "infmcmc/samplers/kernels.hpp"

#include "infmcmc/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace infmcmc {

namespace {

const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

Vector scaling_or_ones(const KernelConfig& cfg, Index n) {
  return cfg.scaling.size() == 0 ? Vector::Ones(n) : cfg.scaling.values();
}

Vector mean_or_zero(const KernelConfig& cfg, Index n) {
  if (cfg.kind == KernelKind::kPcnAm0 || cfg.mean.size() == 0) return Vector::Zero(n);
  return cfg.mean;
}

const Vector& gradient_of(const ChainState& s) {
  if (s.grad_z.size() == 0) throw std::logic_error("chain state is missing its cached gradient");
  return s.grad_z;
}

/// Proposal N(mean, diag(sd^2)), shared by every kernel except pcnl_hm.
struct DiagonalGaussian {
  Vector mean;
  Vector sd;
};

/// Proposal N(mean, beta^2 Q^{-1}) with Q = I + S^T H S factorised as L L^T.
struct CurvatureGaussian {
  Vector mean;
  Eigen::LLT<Matrix> llt;
  double half_logdet = 0.0;
};

struct PerCoordinate {
  Vector beta, rho, c;
};

PerCoordinate per_coordinate_steps(const KernelConfig& cfg, Index n) {
  const double delta = delta_from_beta(cfg.beta);
  const Vector d = scaling_or_ones(cfg, n);
  PerCoordinate out{Vector(n), Vector(n), Vector(n)};
  for (Index i = 0; i < n; ++i) {
    const CoordinateStep s = coordinate_step(delta * d[i]);
    out.beta[i] = s.beta;
    out.rho[i] = s.rho;
    out.c[i] = s.c;
  }
  return out;
}

Vector mgrad_variance(const Vector& sigma, double delta) {
  Vector v(sigma.size());
  for (Index i = 0; i < sigma.size(); ++i) {
    const double den = delta + 2.0 * sigma[i];
    v[i] = delta * (delta + 4.0 * sigma[i]) / (den * den);
  }
  return v;
}

DiagonalGaussian diagonal_proposal(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& from) {
  const Index n = from.z.size();
  const double beta = cfg.beta;
  const double rho = crank_rho(beta);
  const double c = crank_c(beta);
  const Vector& z = from.z;
  DiagonalGaussian q;
  switch (cfg.kind) {
    case KernelKind::kPcn:
      q.mean = rho * z;
      q.sd = Vector::Constant(n, beta);
      break;
    case KernelKind::kPcnAm0:
    case KernelKind::kPcnAm: {
      q.mean = rho * z + c * mean_or_zero(cfg, n);
      q.sd = beta * scaling_or_ones(cfg, n).cwiseSqrt();
      break;
    }
    case KernelKind::kPcnl:
      q.mean = rho * z - c * gradient_of(from);
      q.sd = Vector::Constant(n, beta);
      break;
    case KernelKind::kPcnlAm: {
      const Vector d = scaling_or_ones(cfg, n);
      const Vector M = z - d.cwiseProduct(gradient_of(from) + z);
      q.mean = rho * z + c * M;
      q.sd = beta * d.cwiseSqrt();
      break;
    }
    case KernelKind::kPcnAp: {
      const PerCoordinate p = per_coordinate_steps(cfg, n);
      q.mean = p.rho.cwiseProduct(z) + p.c.cwiseProduct(mean_or_zero(cfg, n));
      q.sd = p.beta;
      break;
    }
    case KernelKind::kPcnlAp: {
      const PerCoordinate p = per_coordinate_steps(cfg, n);
      q.mean = p.rho.cwiseProduct(z) - p.c.cwiseProduct(gradient_of(from));
      q.sd = p.beta;
      break;
    }
    case KernelKind::kMala: {
      const Vector d = scaling_or_ones(cfg, n);
      q.mean = z - 0.5 * beta * beta * d.cwiseProduct(gradient_of(from) + z);
      q.sd = beta * d.cwiseSqrt();
      break;
    }
    case KernelKind::kMgrad: {
      const Vector& sigma = target.prior().eigenvalues();
      const double delta = cfg.delta;
      q.mean.resize(n);
      const Vector& g = gradient_of(from);
      for (Index i = 0; i < n; ++i) q.mean[i] = (2.0 * sigma[i] * z[i] - delta * g[i]) / (delta + 2.0 * sigma[i]);
      q.sd = mgrad_variance(sigma, delta).cwiseSqrt();
      break;
    }
    case KernelKind::kPcnlHm:
      throw std::logic_error("pcnl_hm has no diagonal proposal");
  }
  return q;
}

CurvatureGaussian curvature_proposal(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& from) {
  if (from.hess.size() == 0) throw std::logic_error("chain state is missing its cached Hessian");
  const Matrix& S = target.dense_sqrt();
  const Index n = from.z.size();
  Matrix SHS = S.transpose() * from.hess.asDiagonal() * S;
  SHS = 0.5 * (SHS + SHS.transpose());
  const Matrix Q = Matrix::Identity(n, n) + SHS;

  CurvatureGaussian q;
  q.llt.compute(Q);
  if (q.llt.info() != Eigen::Success) throw NumericalError("pcnl_hm: I + S^T H S is not positive definite");
  for (Index i = 0; i < n; ++i) {
    const double lii = q.llt.matrixLLT()(i, i);
    if (!(lii > 0.0) || !std::isfinite(lii)) throw NumericalError("pcnl_hm: degenerate Cholesky factor");
    q.half_logdet += std::log(lii);
  }
  // Newton point of the local quadratic model of -log pi~ around z
  const Vector newton = q.llt.solve(SHS * from.z - gradient_of(from));
  q.mean = crank_rho(cfg.beta) * from.z + crank_c(cfg.beta) * newton;
  return q;
}

double log_density_diagonal(const DiagonalGaussian& q, const Vector& x) {
  double out = 0.0;
  for (Index i = 0; i < x.size(); ++i) {
    const double r = (x[i] - q.mean[i]) / q.sd[i];
    out += -0.5 * r * r - std::log(q.sd[i]) - kHalfLog2Pi;
  }
  return out;
}

double log_density_curvature(const CurvatureGaussian& q, double beta, const Vector& x) {
  const Index n = x.size();
  const Vector w = q.llt.matrixU() * (x - q.mean);
  return -0.5 * w.squaredNorm() / (beta * beta) + q.half_logdet - n * std::log(beta) - n * kHalfLog2Pi;
}

double generic_log_ratio(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& u,
                         const ChainState& v) {
  return target.log_density(v) - target.log_density(u) + log_proposal_density(target, cfg, v, u.z) -
         log_proposal_density(target, cfg, u, v.z);
}

// sum_i (c_i / beta_i^2) [a_i (v_i - rho_i u_i + c_i a_i / 2) - b_i (u_i - rho_i v_i + c_i b_i / 2)]
// with c_i / beta_i^2 evaluated as 1 / (1 + rho_i) so that beta -> 0 stays finite.
double langevin_cross_terms(const Vector& u, const Vector& v, const Vector& a, const Vector& b, const Vector& rho,
                            const Vector& c) {
  double out = 0.0;
  for (Index i = 0; i < u.size(); ++i) {
    const double forward = a[i] * (v[i] - rho[i] * u[i] + 0.5 * c[i] * a[i]);
    const double backward = b[i] * (u[i] - rho[i] * v[i] + 0.5 * c[i] * b[i]);
    out += (forward - backward) / (1.0 + rho[i]);
  }
  return out;
}

void require_capabilities(const CoefficientTarget& target, KernelKind kind) {
  const Capabilities caps = target.model().capabilities();
  if (needs_gradient(kind) && !caps.has_gradient) {
    throw UnsupportedOperation(to_string(kind) + " needs a model gradient");
  }
  if (needs_hessian(kind) && !caps.has_hessian) {
    throw UnsupportedOperation(to_string(kind) + " needs a model Hessian");
  }
}

StepOutcome checked_step(KernelKind expected, const CoefficientTarget& target, const KernelConfig& cfg,
                         const ChainState& state, ChainRandom& rng) {
  if (cfg.kind != expected) {
    throw std::invalid_argument("kernel config is " + to_string(cfg.kind) + ", expected " + to_string(expected));
  }
  return step(target, cfg, state, rng);
}

}  // namespace

bool mh_accept(double log_ratio, RandomSource& rng) {
  const double u = rng.uniform();
  if (std::isnan(log_ratio)) throw NumericalError("Metropolis-Hastings log ratio is NaN");
  return std::log(u) < log_ratio;
}

ChainState make_state(const CoefficientTarget& target, KernelKind kind, Vector z) {
  require_capabilities(target, kind);
  return target.make_state(std::move(z), needs_gradient(kind), needs_hessian(kind));
}

Vector propose(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& from, const Vector& xi) {
  require_same_size(from.z.size(), xi.size(), "proposal noise");
  if (cfg.kind == KernelKind::kPcnlHm) {
    const CurvatureGaussian q = curvature_proposal(target, cfg, from);
    return q.mean + cfg.beta * q.llt.matrixU().solve(xi);
  }
  const DiagonalGaussian q = diagonal_proposal(target, cfg, from);
  return q.mean + q.sd.cwiseProduct(xi);
}

double log_proposal_density(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& from,
                            const Vector& to) {
  require_same_size(from.z.size(), to.size(), "proposal density argument");
  if (cfg.kind == KernelKind::kPcnlHm) {
    return log_density_curvature(curvature_proposal(target, cfg, from), cfg.beta, to);
  }
  return log_density_diagonal(diagonal_proposal(target, cfg, from), to);
}

double log_ratio(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& u, const ChainState& v) {
  const Index n = u.z.size();
  require_same_size(n, v.z.size(), "log_ratio states");
  const double beta = cfg.beta;
  const double rho = crank_rho(beta);
  const double c = crank_c(beta);
  const double dphi = u.phi - v.phi;

  switch (cfg.kind) {
    case KernelKind::kPcn:
      return dphi;

    case KernelKind::kPcnl: {
      const Vector& gu = gradient_of(u);
      const Vector& gv = gradient_of(v);
      const double delta = delta_from_beta(beta);
      return dphi + 0.25 * delta * (gu.squaredNorm() - gv.squaredNorm()) + 0.5 * (v.z - u.z).dot(gu + gv) +
             0.25 * delta * (v.z + u.z).dot(gu - gv);
    }

    case KernelKind::kPcnAm0:
    case KernelKind::kPcnAm: {
      const Vector d = scaling_or_ones(cfg, n);
      const Vector m = mean_or_zero(cfg, n);
      const DiagonalScaling scaling(d, 0.0);
      return dphi + change_of_measure_logterm(u.z, scaling) - change_of_measure_logterm(v.z, scaling) -
             (v.z - u.z).dot(m.cwiseQuotient(d));
    }

    case KernelKind::kPcnlAm: {
      const Vector d = scaling_or_ones(cfg, n);
      const DiagonalScaling scaling(d, 0.0);
      const Vector Mu = u.z - d.cwiseProduct(gradient_of(u) + u.z);
      const Vector Mv = v.z - d.cwiseProduct(gradient_of(v) + v.z);
      const double k = 1.0 / (1.0 + rho);  // c_beta / beta^2
      const double forward = Mu.dot((v.z - rho * u.z - 0.5 * c * Mu).cwiseQuotient(d));
      const double backward = Mv.dot((u.z - rho * v.z - 0.5 * c * Mv).cwiseQuotient(d));
      return dphi + change_of_measure_logterm(u.z, scaling) - change_of_measure_logterm(v.z, scaling) -
             k * forward + k * backward;
    }

    case KernelKind::kPcnAp:
      return dphi - (v.z - u.z).dot(mean_or_zero(cfg, n));

    case KernelKind::kPcnlAp: {
      const PerCoordinate p = per_coordinate_steps(cfg, n);
      return dphi + langevin_cross_terms(u.z, v.z, gradient_of(u), gradient_of(v), p.rho, p.c);
    }

    case KernelKind::kPcnlHm:
    case KernelKind::kMala:
    case KernelKind::kMgrad:
      return generic_log_ratio(target, cfg, u, v);
  }
  throw std::logic_error("unhandled kernel kind");
}

StepOutcome step(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& state, ChainRandom& rng) {
  require_capabilities(target, cfg.kind);
  const Index n = state.z.size();
  const Vector xi = rng.noise.standard_normal(n);

  StepOutcome out;
  double J = -std::numeric_limits<double>::infinity();
  try {
    out.proposed_z = propose(target, cfg, state, xi);
    if (out.proposed_z.allFinite()) {
      ChainState v = make_state(target, cfg.kind, out.proposed_z);
      const bool finite_caches = std::isfinite(v.phi) && (v.grad_z.size() == 0 || v.grad_z.allFinite()) &&
                                 (v.hess.size() == 0 || v.hess.allFinite());
      if (finite_caches) J = log_ratio(target, cfg, state, v);
      out.new_state = std::move(v);
    }
  } catch (const NumericalError&) {
    if (cfg.kind != KernelKind::kPcnlHm) throw;
    out.factorisation_failed = true;
    if (out.proposed_z.size() == 0) out.proposed_z = state.z;
  }
  out.log_ratio = J;
  out.accepted = mh_accept(J, rng.accept);
  if (!out.accepted) out.new_state = state;
  return out;
}

StepOutcome pcn_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kPcn, t, c, s, r);
}
StepOutcome pcn_am0_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kPcnAm0, t, c, s, r);
}
StepOutcome pcn_am_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kPcnAm, t, c, s, r);
}
StepOutcome pcnl_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kPcnl, t, c, s, r);
}
StepOutcome pcnl_am_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kPcnlAm, t, c, s, r);
}
StepOutcome pcn_ap_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kPcnAp, t, c, s, r);
}
StepOutcome pcnl_ap_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kPcnlAp, t, c, s, r);
}
StepOutcome pcnl_hm_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kPcnlHm, t, c, s, r);
}
StepOutcome mala_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kMala, t, c, s, r);
}
StepOutcome mgrad_step(const CoefficientTarget& t, const KernelConfig& c, const ChainState& s, ChainRandom& r) {
  return checked_step(KernelKind::kMgrad, t, c, s, r);
}

}  // namespace infmcmc
