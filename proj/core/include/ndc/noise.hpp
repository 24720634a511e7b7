// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ndc {

// Trajectory noise model.
//
// Channels, all optional (zero / infinity disables them):
//  - depolarizing after every 1-qubit gate (p1) and 2-qubit gate (p2),
//  - amplitude damping with time constant t1,
//  - pure dephasing derived from t2 via 1/t_phi = 1/t2 - 1/(2 t1),
//  - classical readout flips on recorded measurement values
//    (p01 = P(read 1 | outcome 0), p10 = P(read 0 | outcome 1)).
//
// Time is unitless: a 1-qubit gate takes dur_1q, a CNOT or swap dur_2q, a
// measurement dur_meas. Decoherence acts on every wire for every interval
// it spends idle or occupied, tracked per wire; barriers synchronise wire
// clocks, so a wire stalled behind a barrier decoheres for the stall.
//
// Optional per-wire jitter makes wires inhomogeneous: wire w gets
// t1, t2 scaled by (1 + jitter * u_w) with u_w uniform in [-1, 1) drawn
// from a stream seeded by jitter_seed, fixed per wire index.
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  double t1 = 0.0;  // 0 disables damping (treated as infinite)
  double t2 = 0.0;  // 0 disables dephasing (treated as infinite)
  double dur_1q = 1.0;
  double dur_2q = 2.0;
  double dur_meas = 76.0;
  double readout_p01 = 0.0;
  double readout_p10 = 0.0;
  double jitter = 0.0;
  std::uint64_t jitter_seed = 0;

  // No channel active at all.
  bool trivial() const;

  // Throws ValidationError on out-of-range probabilities, negative
  // durations, or t2 > 2*t1.
  void validate() const;

  // Short stable identifier of the parameters, recorded next to every
  // benchmark row: "none" for a trivial model, else 16 hex digits hashed
  // from the canonical parameter string.
  std::string fingerprint() const;

  // Defaults used by the benchmark tools: strong enough that the
  // violation decays visibly per added qubit. Calibrated, not fitted to
  // any particular device.
  static NoiseModel defaults();
};

// Per-wire exponential rates with jitter applied; 0 means disabled.
struct WireRates {
  double inv_t1 = 0.0;
  double inv_tphi = 0.0;
};

// Model resolved against a concrete wire count; consumed by the
// simulator's trajectory loop.
struct ResolvedNoise {
  double p1 = 0.0;
  double p2 = 0.0;
  double dur_1q = 1.0;
  double dur_2q = 2.0;
  double dur_meas = 76.0;
  double readout_p01 = 0.0;
  double readout_p10 = 0.0;
  std::vector<WireRates> wires;

  bool has_decoherence() const;
  bool has_readout() const { return readout_p01 > 0.0 || readout_p10 > 0.0; }
};

ResolvedNoise resolve(const NoiseModel& model, int wires);

// P(event) over an interval dt at rate 1/t: 1 - exp(-dt * inv_t).
double decay_probability(double dt, double inv_t);

}  // namespace ndc
