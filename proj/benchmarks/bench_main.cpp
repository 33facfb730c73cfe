#include <benchmark/benchmark.h>

#include "hypk/bessel.hpp"
#include "hypk/bounds.hpp"
#include "hypk/kernels.hpp"
#include "hypk/simulate.hpp"
#include "hypk/specfun.hpp"

using namespace hypk;

static void BM_BesselI(benchmark::State& st) {
  double z = 0.1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(specfun::bessel_i_scaled(1.7, z));
    z = z < 100 ? z * 1.1 : 0.1;
  }
}
BENCHMARK(BM_BesselI);

static void BM_BesselK(benchmark::State& st) {
  double z = 0.1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(specfun::bessel_k_scaled(0.5 + st.range(0), z));
    z = z < 100 ? z * 1.1 : 0.1;
  }
}
BENCHMARK(BM_BesselK)->Arg(0)->Arg(3);

static void BM_Theta(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(specfun::theta_hw(1.0, 0.5));
}
BENCHMARK(BM_Theta)->Unit(benchmark::kMicrosecond);

static void BM_TransitionDensity(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bessel::transition_density(-1.3, 0.7, 1.0, 1.4));
}
BENCHMARK(BM_TransitionDensity);

static void BM_LemmaIntegral(benchmark::State& st) {
  bounds::LemmaParams p;
  p.alpha = 1;
  p.beta = 1;
  p.gamma = {0.5, -0.4};
  p.a = {0.01, 3.0};
  p.b = 0.7;
  for (auto _ : st) benchmark::DoNotOptimize(bounds::lemma_lhs(p));
}
BENCHMARK(BM_LemmaIntegral)->Unit(benchmark::kMicrosecond);

static void BM_JDensity(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::j_density(0.3, 0.2, 0.6));
}
BENCHMARK(BM_JDensity);

static void BM_FirstExit(benchmark::State& st) {
  const auto dom = DomainSpec::slab(1, 1);
  sim::SimConfig cfg;
  auto rng = sim::make_path_rng(1, 0);
  const auto kind = st.range(0) == 0 ? sim::PathKind::Hbm : sim::PathKind::BrownBessel;
  for (auto _ : st) benchmark::DoNotOptimize(sim::first_exit(kind, dom, 1.0, HyperPoint{0.5, 1.5}, cfg, rng));
}
BENCHMARK(BM_FirstExit)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_SamplePath(benchmark::State& st) {
  sim::SimConfig cfg;
  cfg.t_max = 1.0;
  auto rng = sim::make_path_rng(2, 0);
  for (auto _ : st) benchmark::DoNotOptimize(sim::sample_hbm_path(1.0, HyperPoint{0.5, 1.5}, cfg, rng));
}
BENCHMARK(BM_SamplePath)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
