// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors
//
// Microbenchmarks for the hot paths: dense state-vector kernels, exact
// branch enumeration, sampled execution (both the noiseless tree path and
// the noisy trajectory path), and the rewrite pipeline.

#include <benchmark/benchmark.h>

#include "ndc/methods.hpp"
#include "ndc/noise.hpp"
#include "ndc/passes.hpp"
#include "ndc/simulator.hpp"
#include "ndc/statevector.hpp"

namespace {

constexpr double kTheta = 0.78539816339744831;  // pi/4

void BM_HadamardKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ndc::StateVector sv(n);
  for (auto _ : state) {
    for (int w = 0; w < n; ++w) sv.apply_h(w);
    benchmark::DoNotOptimize(sv.amp(0));
  }
  state.SetItemsProcessed(state.iterations() * n *
                          static_cast<std::int64_t>(sv.size()));
}
BENCHMARK(BM_HadamardKernel)->Arg(12)->Arg(16)->Arg(20);

void BM_RotationKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ndc::StateVector sv(n);
  for (auto _ : state) {
    for (int w = 0; w < n; ++w) sv.apply_ry(w, kTheta);
    benchmark::DoNotOptimize(sv.amp(0));
  }
  state.SetItemsProcessed(state.iterations() * n *
                          static_cast<std::int64_t>(sv.size()));
}
BENCHMARK(BM_RotationKernel)->Arg(12)->Arg(16)->Arg(20);

void BM_CnotKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ndc::StateVector sv(n);
  sv.apply_h(0);
  for (auto _ : state) {
    for (int w = 0; w + 1 < n; ++w) sv.apply_cnot(w, w + 1);
    benchmark::DoNotOptimize(sv.amp(0));
  }
  state.SetItemsProcessed(state.iterations() * (n - 1) *
                          static_cast<std::int64_t>(sv.size()));
}
BENCHMARK(BM_CnotKernel)->Arg(12)->Arg(16)->Arg(20);

void BM_ExactDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ndc::Circuit c =
      ndc::build_reference(ndc::MethodKind::HMethod, n, kTheta, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ndc::exact_distribution(c));
  }
}
BENCHMARK(BM_ExactDistribution)->Arg(4)->Arg(8)->Arg(12);

void BM_NoiselessTreeSampling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ndc::Circuit c =
      ndc::build_lnn(ndc::MethodKind::HMethod, n, kTheta, true);
  ndc::ShotOptions opts;
  opts.seed = 42;
  opts.shots = 4096;
  opts.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ndc::run_shots(c, opts));
    ++opts.run_index;  // fresh substream each iteration
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(opts.shots));
}
BENCHMARK(BM_NoiselessTreeSampling)->Arg(6)->Arg(10);

void BM_NoisyTrajectories(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ndc::Circuit c =
      ndc::build_lnn(ndc::MethodKind::HMethod, n, kTheta, true);
  const ndc::NoiseModel noise = ndc::NoiseModel::defaults();
  ndc::ShotOptions opts;
  opts.seed = 42;
  opts.shots = 32;
  opts.workers = 1;
  opts.noise = &noise;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ndc::run_shots(c, opts));
    ++opts.run_index;
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(opts.shots));
}
BENCHMARK(BM_NoisyTrajectories)->Arg(4)->Arg(6)->Arg(8);

void BM_TranspilePipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ndc::Circuit ref =
      ndc::build_reference(ndc::MethodKind::HMethod, n, kTheta, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ndc::transpile_lnn(ref, ndc::MethodKind::HMethod));
  }
}
BENCHMARK(BM_TranspilePipeline)->Arg(8)->Arg(16)->Arg(32);

void BM_GenerateLnn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ndc::build_lnn(ndc::MethodKind::MMethod, n, kTheta, true));
  }
}
BENCHMARK(BM_GenerateLnn)->Arg(16)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
