// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/noise.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>

#include "ndc/errors.hpp"
#include "ndc/rng.hpp"

namespace ndc {
namespace {

bool probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

bool NoiseModel::trivial() const {
  return p1 == 0.0 && p2 == 0.0 && t1 == 0.0 && t2 == 0.0 &&
         readout_p01 == 0.0 && readout_p10 == 0.0;
}

std::string NoiseModel::fingerprint() const {
  if (trivial()) return "none";
  char canonical[256];
  std::snprintf(canonical, sizeof(canonical),
                "p1=%.17g;p2=%.17g;t1=%.17g;t2=%.17g;d1=%.17g;d2=%.17g;"
                "dm=%.17g;r01=%.17g;r10=%.17g;j=%.17g;js=%llu",
                p1, p2, t1, t2, dur_1q, dur_2q, dur_meas, readout_p01,
                readout_p10, jitter,
                static_cast<unsigned long long>(jitter_seed));
  // FNV-1a, 64 bit.
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char* c = canonical; *c != '\0'; ++c) {
    hash ^= static_cast<unsigned char>(*c);
    hash *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(out);
}

void NoiseModel::validate() const {
  std::ostringstream msg;
  if (!probability(p1) || !probability(p2)) {
    msg << "depolarizing probabilities must lie in [0,1]: p1=" << p1
        << " p2=" << p2;
    throw ValidationError(msg.str());
  }
  if (!probability(readout_p01) || !probability(readout_p10)) {
    msg << "readout flip probabilities must lie in [0,1]: p01=" << readout_p01
        << " p10=" << readout_p10;
    throw ValidationError(msg.str());
  }
  if (t1 < 0.0 || t2 < 0.0)
    throw ValidationError("t1 and t2 must be non-negative (0 disables)");
  if (t1 > 0.0 && t2 > 0.0 && t2 > 2.0 * t1) {
    msg << "t2 must not exceed 2*t1, got t1=" << t1 << " t2=" << t2;
    throw ValidationError(msg.str());
  }
  if (dur_1q <= 0.0 || dur_2q <= 0.0 || dur_meas <= 0.0)
    throw ValidationError("gate and measurement durations must be positive");
  if (jitter < 0.0 || jitter >= 1.0)
    throw ValidationError("jitter must lie in [0, 1)");
}

NoiseModel NoiseModel::defaults() {
  NoiseModel m;
  m.p1 = 0.001;
  m.p2 = 0.02;
  m.t1 = 0.0;  // damping off; dephasing-limited by default
  m.t2 = 250.0;
  m.readout_p01 = 0.015;
  m.readout_p10 = 0.015;
  return m;
}

bool ResolvedNoise::has_decoherence() const {
  for (const auto& w : wires)
    if (w.inv_t1 > 0.0 || w.inv_tphi > 0.0) return true;
  return false;
}

ResolvedNoise resolve(const NoiseModel& model, int wires) {
  model.validate();
  ResolvedNoise r;
  r.p1 = model.p1;
  r.p2 = model.p2;
  r.dur_1q = model.dur_1q;
  r.dur_2q = model.dur_2q;
  r.dur_meas = model.dur_meas;
  r.readout_p01 = model.readout_p01;
  r.readout_p10 = model.readout_p10;
  r.wires.resize(static_cast<std::size_t>(wires));
  for (int w = 0; w < wires; ++w) {
    double t1 = model.t1;
    double t2 = model.t2;
    if (model.jitter > 0.0) {
      auto rng = substream(model.jitter_seed, 0x6a69747465ULL,
                           static_cast<std::uint64_t>(w), 0);
      const double f = 1.0 + model.jitter * (2.0 * rng.uniform() - 1.0);
      t1 *= f;
      t2 *= f;
    }
    auto& rates = r.wires[static_cast<std::size_t>(w)];
    const double inv_t1 = t1 > 0.0 ? 1.0 / t1 : 0.0;
    if (t2 > 0.0) {
      // 1/t_phi = 1/t2 - 1/(2 t1); t2 == 2 t1 means damping-limited only.
      const double inv_tphi = 1.0 / t2 - 0.5 * inv_t1;
      rates.inv_tphi = inv_tphi > 0.0 ? inv_tphi : 0.0;
    }
    rates.inv_t1 = inv_t1;
  }
  return r;
}

double decay_probability(double dt, double inv_t) {
  if (dt <= 0.0 || inv_t <= 0.0) return 0.0;
  return -std::expm1(-dt * inv_t);
}

}  // namespace ndc
