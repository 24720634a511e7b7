// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include <cctype>
#include <cmath>

#include "doctest.h"
#include "ndc/circuit.hpp"
#include "ndc/errors.hpp"
#include "ndc/noise.hpp"
#include "ndc/simulator.hpp"

using namespace ndc;

namespace {

// Fraction of shots whose recorded register equals `key`.
double frequency(const Circuit& c, const NoiseModel& noise, std::uint64_t seed,
                 std::uint64_t shots, const std::string& key) {
  ShotOptions opts;
  opts.seed = seed;
  opts.shots = shots;
  opts.workers = 1;
  opts.noise = &noise;
  Counts counts = run_shots(c, opts);
  return static_cast<double>(counts[key]) / static_cast<double>(shots);
}

}  // namespace

TEST_CASE("validation rejects out-of-range parameters") {
  NoiseModel m;
  m.validate();  // trivial model is fine
  m.p1 = 1.5;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m = NoiseModel{};
  m.p2 = -0.1;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m = NoiseModel{};
  m.t1 = -1.0;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m = NoiseModel{};
  m.t1 = 100.0;
  m.t2 = 201.0;  // exceeds 2*t1
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m.t2 = 200.0;
  m.validate();
  m = NoiseModel{};
  m.dur_1q = -1.0;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m = NoiseModel{};
  m.readout_p01 = 1.1;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m = NoiseModel{};
  m.jitter = 1.0;
  CHECK_THROWS_AS(m.validate(), ValidationError);
}

TEST_CASE("trivial detection and defaults") {
  CHECK(NoiseModel{}.trivial());
  NoiseModel m;
  m.dur_meas = 999.0;  // durations alone add no noise
  CHECK(m.trivial());
  m.readout_p01 = 0.01;
  CHECK_FALSE(m.trivial());

  NoiseModel d = NoiseModel::defaults();
  CHECK_FALSE(d.trivial());
  d.validate();
}

TEST_CASE("fingerprint identifies the parameter set") {
  CHECK(NoiseModel{}.fingerprint() == "none");
  NoiseModel quiet;
  quiet.dur_meas = 999.0;  // durations alone add no noise
  CHECK(quiet.fingerprint() == "none");

  const NoiseModel d = NoiseModel::defaults();
  const std::string fp = d.fingerprint();
  REQUIRE(fp.size() == 16);
  for (char c : fp) CHECK(std::isxdigit(static_cast<unsigned char>(c)));
  CHECK(fp == NoiseModel::defaults().fingerprint());  // deterministic

  NoiseModel tweaked = d;
  tweaked.p2 = d.p2 + 1e-12;
  CHECK(tweaked.fingerprint() != fp);
  NoiseModel longer_readout = d;
  longer_readout.dur_meas = 100.0;
  CHECK(longer_readout.fingerprint() != fp);
}

TEST_CASE("decay probability") {
  CHECK(decay_probability(10.0, 0.0) == 0.0);
  CHECK(decay_probability(0.0, 0.1) == 0.0);
  CHECK(decay_probability(50.0, 1.0 / 100.0) ==
        doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("resolve derives per-wire rates") {
  NoiseModel m;
  m.t1 = 100.0;
  m.t2 = 150.0;
  ResolvedNoise r = resolve(m, 3);
  REQUIRE(r.wires.size() == 3);
  CHECK(r.wires[0].inv_t1 == doctest::Approx(0.01).epsilon(1e-14));
  // 1/t_phi = 1/t2 - 1/(2 t1)
  CHECK(r.wires[0].inv_tphi ==
        doctest::Approx(1.0 / 150.0 - 1.0 / 200.0).epsilon(1e-12));
  CHECK(r.has_decoherence());

  NoiseModel pure_dephase;
  pure_dephase.t2 = 80.0;  // t1 = 0 means no damping channel
  ResolvedNoise rd = resolve(pure_dephase, 1);
  CHECK(rd.wires[0].inv_t1 == 0.0);
  CHECK(rd.wires[0].inv_tphi == doctest::Approx(1.0 / 80.0).epsilon(1e-14));

  CHECK_FALSE(resolve(NoiseModel{}, 2).has_decoherence());
}

TEST_CASE("jitter is deterministic per wire and bounded") {
  NoiseModel m;
  m.t1 = 100.0;
  m.t2 = 100.0;
  m.jitter = 0.2;
  m.jitter_seed = 12;
  ResolvedNoise a = resolve(m, 8);
  ResolvedNoise b = resolve(m, 8);
  bool all_equal = true, any_spread = false;
  for (std::size_t w = 0; w < 8; ++w) {
    all_equal = all_equal && a.wires[w].inv_t1 == b.wires[w].inv_t1 &&
                a.wires[w].inv_tphi == b.wires[w].inv_tphi;
    any_spread = any_spread || a.wires[w].inv_t1 != a.wires[0].inv_t1;
    // scaled t1 stays within (1 +- jitter) * t1
    CHECK(a.wires[w].inv_t1 > 1.0 / (100.0 * 1.2));
    CHECK(a.wires[w].inv_t1 <= 1.0 / (100.0 * 0.8));
  }
  CHECK(all_equal);
  CHECK(any_spread);

  m.jitter_seed = 13;
  ResolvedNoise c = resolve(m, 8);
  bool moved = false;
  for (std::size_t w = 0; w < 8; ++w)
    moved = moved || c.wires[w].inv_t1 != a.wires[w].inv_t1;
  CHECK(moved);
}

TEST_CASE("readout flips act on the recorded value") {
  Circuit c(1, 1);
  c.add(x(0));
  c.add(measure(0, 0));
  NoiseModel m;
  m.readout_p10 = 0.25;
  const double f0 = frequency(c, m, 21, 10000, "0");
  CHECK(f0 == doctest::Approx(0.25).epsilon(0.08));
}

TEST_CASE("amplitude damping integrates over idle and gate time") {
  // Excite wire 1, stall it behind a barrier while wire 0 is measured,
  // then read it: survival is exp(-T/t1) over the full elapsed time.
  NoiseModel m;
  m.t1 = 250.0;
  m.t2 = 0.0;
  Circuit c(2, 2);
  c.add(x(0));
  c.add(x(1));
  c.add(measure(0, 0));
  c.add(barrier());
  c.add(measure(1, 1));
  // Wire 1 timeline before its readout: dur_1q for its own gate, then the
  // barrier stall to wire 0's clock (dur_1q + dur_meas).
  const double elapsed = m.dur_1q + m.dur_meas;
  const double survival = std::exp(-elapsed / m.t1);
  double hit = 0.0;
  ShotOptions opts;
  opts.seed = 3;
  opts.shots = 20000;
  opts.workers = 1;
  opts.noise = &m;
  Counts counts = run_shots(c, opts);
  for (const auto& [key, n] : counts)
    if (key[0] == '1') hit += static_cast<double>(n);  // clbit 1 is leftmost
  CHECK(hit / 20000.0 == doctest::Approx(survival).epsilon(0.03));
}

TEST_CASE("dephasing flips the phase between two Hadamards") {
  // h - wait - h maps a z flip during the wait onto a bit flip: P(1) =
  // (1 - exp(-T/t_phi)) / 2 with T the time between the Hadamards plus
  // the trailing gate interval.
  NoiseModel m;
  m.t2 = 200.0;
  Circuit c(2, 2);
  c.add(h(0));
  c.add(x(1));
  c.add(measure(1, 1));
  c.add(barrier());
  c.add(h(0));
  c.add(measure(0, 0));
  // Coherent exposure: the interval after the first h (dur_1q) plus the
  // barrier stall to wire 1's clock (dur_meas). Flips after the second h
  // land on a basis state and drop out.
  const double elapsed = m.dur_1q + m.dur_meas;
  const double expected = 0.5 * (1.0 - std::exp(-elapsed / m.t2));
  double hit = 0.0;
  ShotOptions opts;
  opts.seed = 5;
  opts.shots = 20000;
  opts.workers = 1;
  opts.noise = &m;
  Counts counts = run_shots(c, opts);
  for (const auto& [key, n] : counts)
    if (key[1] == '1') hit += static_cast<double>(n);  // clbit 0 is rightmost
  CHECK(hit / 20000.0 == doctest::Approx(expected).epsilon(0.12));
}

TEST_CASE("uniform depolarizing randomizes a Bell measurement") {
  // cx with p2 = 1 draws one of the 15 non-identity Pauli pairs; exactly
  // {I,Z}x{I,Z}\{II} (3 of 15) leave both records untouched.
  Circuit c(2, 2);
  c.add(cx(0, 1));
  c.add(measure(0, 0));
  c.add(measure(1, 1));
  NoiseModel m;
  m.p2 = 1.0;
  const double f00 = frequency(c, m, 8, 30000, "00");
  CHECK(f00 == doctest::Approx(3.0 / 15.0).epsilon(0.05));
}

TEST_CASE("single-qubit depolarizing between two Hadamards") {
  // h - p1=1 Pauli - h - p1=1 Pauli - measure: each draw keeps the Bloch
  // component with probability 1/3, so P(1) = (1 - 1/9) / 2 = 4/9.
  Circuit c(1, 1);
  c.add(h(0));
  c.add(h(0));
  c.add(measure(0, 0));
  NoiseModel m;
  m.p1 = 1.0;
  const double f1 = frequency(c, m, 13, 30000, "1");
  CHECK(f1 == doctest::Approx(4.0 / 9.0).epsilon(0.035));
}
