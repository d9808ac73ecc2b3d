#include "infmcmc/models/lgcp.hpp"
#include "infmcmc/models/logistic.hpp"
#include "infmcmc/models/simulate.hpp"
#include "infmcmc/samplers/kernels.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace infmcmc;

const LogisticClassifierModel& classifier() {
  static const LogisticClassifierModel model = [] {
    LogisticParams p;
    p.lengthscale = 0.5;
    p.truncation = 64;
    auto sim = simulate_classifier(200, 2, p, 11, 12);
    return LogisticClassifierModel(sim.data, p);
  }();
  return model;
}

void BM_LogisticStep(benchmark::State& state) {
  const auto kind = kAllKernels[state.range(0)];
  const auto& model = classifier();
  CoefficientTarget target(model);
  KernelConfig cfg;
  cfg.kind = kind;
  cfg.beta = 0.3;
  cfg.delta = 0.5;
  ChainRandom rng(3);
  ChainState s = make_state(target, kind, Vector::Zero(target.dim()));
  for (auto _ : state) {
    s = step(target, cfg, s, rng).new_state;
  }
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_LogisticStep)->DenseRange(0, static_cast<int>(kAllKernels.size()) - 1);

void BM_LgcpStep(benchmark::State& state) {
  const LatticeSpec lattice{32, 32, 1.0};
  LgcpParams params;
  params.tau = 8.0;
  auto sim = simulate_lgcp(lattice, params, 5, 6);
  const LGCPModel model(lattice, params, sim.data);
  CoefficientTarget target(model);
  KernelConfig cfg;
  cfg.kind = state.range(0) == 0 ? KernelKind::kPcnAm : KernelKind::kPcnlAm;
  cfg.beta = 0.2;
  ChainRandom rng(3);
  ChainState s = make_state(target, cfg.kind, Vector::Zero(target.dim()));
  for (auto _ : state) s = step(target, cfg, s, rng).new_state;
  state.SetLabel(to_string(cfg.kind));
}
BENCHMARK(BM_LgcpStep)->Arg(0)->Arg(1);

}  // namespace
