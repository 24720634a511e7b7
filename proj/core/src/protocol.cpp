// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/protocol.hpp"

#include <bit>
#include <cmath>

#include "ndc/errors.hpp"
#include "ndc/rng.hpp"

namespace ndc {

double ideal_violation(int n, double theta) {
  return 0.25 * (1.0 - std::pow(std::cos(2.0 * theta), n));
}

double ideal_first_parity_even(int n, double theta) {
  return 0.5 + 0.5 * std::pow(std::cos(theta), n);
}

namespace {

double read_fraction(const Counts& counts, int clbits, int bit, int value) {
  std::uint64_t total = 0;
  std::uint64_t hits = 0;
  const std::size_t pos = static_cast<std::size_t>(clbits - 1 - bit);
  const char flag = value ? '1' : '0';
  for (const auto& [key, count] : counts) {
    if (key.size() != static_cast<std::size_t>(clbits))
      throw ValidationError("estimate_violation: key width mismatch for '" +
                            key + "'");
    total += count;
    if (key[pos] == flag) hits += count;
  }
  if (total == 0)
    throw ValidationError("estimate_violation: empty count table");
  return static_cast<double>(hits) / static_cast<double>(total);
}

std::uint64_t total_shots(const Counts& counts) {
  std::uint64_t total = 0;
  for (const auto& [_, count] : counts) total += count;
  return total;
}

}  // namespace

ViolationEstimate estimate_violation(const Counts& single_counts,
                                     const Counts& double_counts, int clbits,
                                     int read_value) {
  if (clbits <= kSecondParityBit)
    throw ValidationError("estimate_violation: too few classical bits");
  if (read_value != 0 && read_value != 1)
    throw ValidationError("estimate_violation: read_value must be 0 or 1");
  ViolationEstimate est;
  est.p_single_read =
      read_fraction(single_counts, clbits, kSecondParityBit, read_value);
  est.p_double_read =
      read_fraction(double_counts, clbits, kSecondParityBit, read_value);
  est.v = est.p_single_read - est.p_double_read;
  est.single_shots = total_shots(single_counts);
  est.double_shots = total_shots(double_counts);
  return est;
}

std::uint64_t circuit_stream_id(MethodKind method, Layout layout, int n,
                                double theta, bool measured) {
  std::uint64_t h = 0x6e646362656e6368ull;  // stream domain tag
  h = mix64(h ^ static_cast<std::uint64_t>(method));
  h = mix64(h ^ static_cast<std::uint64_t>(layout));
  h = mix64(h ^ static_cast<std::uint64_t>(n));
  h = mix64(h ^ std::bit_cast<std::uint64_t>(theta));
  h = mix64(h ^ static_cast<std::uint64_t>(measured ? 1 : 0));
  return h;
}

PointResult run_point(const PointConfig& config) {
  if (config.runs < 1)
    throw ValidationError("run_point: runs must be positive");
  if (config.shots == 0)
    throw ValidationError("run_point: shots must be positive");
  config.noise.validate();

  const Circuit single = build_circuit(config.method, config.layout, config.n,
                                       config.theta, /*measured=*/false);
  const Circuit doubled = build_circuit(config.method, config.layout,
                                        config.n, config.theta,
                                        /*measured=*/true);
  ShotOptions opts;
  opts.seed = config.seed;
  opts.shots = config.shots;
  opts.workers = config.workers;
  opts.noise = &config.noise;

  PointResult result;
  result.per_run.reserve(static_cast<std::size_t>(config.runs));
  for (int r = 0; r < config.runs; ++r) {
    opts.run_index = static_cast<std::uint64_t>(r);
    opts.circuit_index = circuit_stream_id(config.method, config.layout,
                                           config.n, config.theta, false);
    const Counts single_counts = run_shots(single, opts);
    opts.circuit_index = circuit_stream_id(config.method, config.layout,
                                           config.n, config.theta, true);
    const Counts double_counts = run_shots(doubled, opts);
    result.per_run.push_back(
        estimate_violation(single_counts, double_counts, kProtocolClbits));
  }

  double v_sum = 0.0;
  double ps_sum = 0.0;
  double pd_sum = 0.0;
  for (const auto& est : result.per_run) {
    v_sum += est.v;
    ps_sum += est.p_single_read;
    pd_sum += est.p_double_read;
  }
  const double runs = static_cast<double>(config.runs);
  result.v_mean = v_sum / runs;
  result.p_single_read_mean = ps_sum / runs;
  result.p_double_read_mean = pd_sum / runs;
  if (config.runs > 1) {
    double ss = 0.0;
    for (const auto& est : result.per_run) {
      const double d = est.v - result.v_mean;
      ss += d * d;
    }
    result.v_sigma = std::sqrt(ss / (runs - 1.0));
  }
  return result;
}

std::vector<SweepPoint> theta_sweep(const PointConfig& base,
                                    const std::vector<double>& thetas) {
  std::vector<SweepPoint> points;
  points.reserve(thetas.size());
  for (double theta : thetas) {
    PointConfig config = base;
    config.theta = theta;
    points.push_back({theta, run_point(config)});
  }
  return points;
}

}  // namespace ndc
