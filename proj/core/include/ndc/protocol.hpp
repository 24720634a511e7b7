// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors
//
// The parity no-disturbance estimator: compares the second-parity outcome
// statistics of the unmeasured ("single") and measured ("double") branches
// of a protocol circuit and summarizes the gap as the violation V.

#pragma once

#include <cstdint>
#include <vector>

#include "ndc/methods.hpp"
#include "ndc/noise.hpp"
#include "ndc/simulator.hpp"

namespace ndc {

// Closed-form noiseless violation for n data qubits at rotation angle theta.
double ideal_violation(int n, double theta);

// Closed-form noiseless probability that the first parity reads even.
double ideal_first_parity_even(int n, double theta);

struct ViolationEstimate {
  double v = 0.0;  // p_single_read - p_double_read
  double p_single_read = 0.0;  // fraction of shots whose second parity
  double p_double_read = 0.0;  // reads the violation-defining value
  std::uint64_t single_shots = 0;
  std::uint64_t double_shots = 0;
};

// Reads the second-parity bit out of two count tables (keys are bitstrings
// with classical bit 0 rightmost, as produced by the simulator) and
// differences the frequency of `read_value` between the branches. Reading
// the opposite value negates the estimate exactly.
ViolationEstimate estimate_violation(const Counts& single_counts,
                                     const Counts& double_counts, int clbits,
                                     int read_value = kViolationReadoutValue);

struct PointConfig {
  MethodKind method = MethodKind::HMethod;
  Layout layout = Layout::Linear;
  int n = 2;
  double theta = 0.0;
  int runs = 20;
  std::uint64_t shots = 4000;
  std::uint64_t seed = 1;
  int workers = 0;  // 0 = one worker per hardware thread
  NoiseModel noise;  // default-constructed model is noiseless
};

struct PointResult {
  std::vector<ViolationEstimate> per_run;
  double v_mean = 0.0;
  // Sample standard deviation of the per-run estimates (n-1 normalization);
  // zero when fewer than two runs were requested.
  double v_sigma = 0.0;
  double p_single_read_mean = 0.0;
  double p_double_read_mean = 0.0;
};

// Stable stream index for the RNG substream addressing: equal inputs give
// equal draws regardless of which other points run in the same process.
std::uint64_t circuit_stream_id(MethodKind method, Layout layout, int n,
                                double theta, bool measured);

// Runs `runs` independent repetitions of the two-branch experiment and
// aggregates the per-run estimates.
PointResult run_point(const PointConfig& config);

struct SweepPoint {
  double theta = 0.0;
  PointResult result;
};

std::vector<SweepPoint> theta_sweep(const PointConfig& base,
                                    const std::vector<double>& thetas);

}  // namespace ndc
