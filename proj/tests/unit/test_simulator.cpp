// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "ndc/circuit.hpp"
#include "ndc/errors.hpp"
#include "ndc/rng.hpp"
#include "ndc/simulator.hpp"
#include "support/oracle.hpp"
#include "support/random_circuit.hpp"

using namespace ndc;

namespace {

double max_dist_diff(const Distribution& a, const Distribution& b) {
  double worst = 0.0;
  for (const auto& [key, p] : a) {
    const auto it = b.find(key);
    worst = std::max(worst, std::abs(p - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [key, p] : b)
    if (a.find(key) == a.end()) worst = std::max(worst, p);
  return worst;
}

}  // namespace

TEST_CASE("bits_to_key renders bit 0 rightmost") {
  CHECK(bits_to_key({1, 0, 0}) == "001");
  CHECK(bits_to_key({0, 1, 1}) == "110");
  CHECK(bits_to_key({}) == "");
}

TEST_CASE("exact distribution matches the dense oracle") {
  Xoshiro256pp rng(31337);
  for (int i = 0; i < 15; ++i) {
    Circuit c = ndctest::random_measured_circuit(rng, 4, 20);
    CHECK(max_dist_diff(exact_distribution(c), ndctest::oracle_distribution(c))
          < 1e-12);
  }
}

TEST_CASE("exact distribution handles mid-circuit measurement and cif") {
  // Measure |+>, then flip a second wire iff the record is 1: perfectly
  // correlated register.
  Circuit c(2, 2);
  c.add(h(0));
  c.add(measure(0, 0));
  c.add(cif(0, true, x(1)));
  c.add(measure(1, 1));
  Distribution d = exact_distribution(c);
  CHECK(d.size() == 2);
  CHECK(d["00"] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d["11"] == doctest::Approx(0.5).epsilon(1e-12));

  // The measured wire collapses: re-measuring gives the same record.
  Circuit r(1, 2);
  r.add(h(0));
  r.add(measure(0, 0));
  r.add(measure(0, 1));
  Distribution d2 = exact_distribution(r);
  CHECK(d2["00"] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d2["11"] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("exact distribution enforces resource limits") {
  Circuit c(2, 2);
  c.add(h(0));
  c.add(measure(0, 0));
  c.add(h(0));
  c.add(measure(0, 1));
  ExactLimits limits;
  limits.max_paths = 2;  // needs 4 branch paths
  CHECK_THROWS_AS(exact_distribution(c, limits), ResourceLimitError);
}

TEST_CASE("marginalize reduces and reorders bits") {
  Distribution d{{"01", 0.25}, {"10", 0.75}};
  Distribution m0 = marginalize(d, 2, {0});
  CHECK(m0["1"] == doctest::Approx(0.25));
  CHECK(m0["0"] == doctest::Approx(0.75));
  Distribution swapped = marginalize(d, 2, {1, 0});
  CHECK(swapped["10"] == doctest::Approx(0.25));
  CHECK(swapped["01"] == doctest::Approx(0.75));
}

TEST_CASE("run_shots is deterministic and worker-count independent") {
  Circuit c(3, 3);
  c.add(h(0));
  c.add(ry(1, 1.1));
  c.add(cx(1, 2));
  c.add(measure(0, 0));
  c.add(measure(1, 1));
  c.add(measure(2, 2));

  NoiseModel noise = NoiseModel::defaults();  // force the trajectory path
  ShotOptions opts;
  opts.seed = 99;
  opts.shots = 2000;
  opts.circuit_index = 5;
  opts.run_index = 2;
  opts.noise = &noise;

  opts.workers = 1;
  Counts serial = run_shots(c, opts);
  opts.workers = 4;
  Counts parallel = run_shots(c, opts);
  CHECK(serial == parallel);

  Counts again = run_shots(c, opts);
  CHECK(parallel == again);

  // Moving any substream coordinate changes the sample.
  opts.run_index = 3;
  CHECK(run_shots(c, opts) != serial);
}

TEST_CASE("run_shots equals a manual per-shot substream loop") {
  Circuit c(2, 2);
  c.add(ry(0, 0.77));
  c.add(cx(0, 1));
  c.add(measure(0, 0));
  c.add(measure(1, 1));

  ShotOptions opts;
  opts.seed = 4242;
  opts.shots = 500;
  opts.circuit_index = 7;
  opts.run_index = 1;
  opts.workers = 2;

  SUBCASE("noiseless (cached branch tree)") {
    Counts manual;
    for (std::uint64_t s = 0; s < opts.shots; ++s) {
      auto rng = substream(opts.seed, opts.circuit_index, opts.run_index, s);
      ++manual[bits_to_key(run_single_shot(c, rng, nullptr))];
    }
    CHECK(run_shots(c, opts) == manual);
  }

  SUBCASE("noisy trajectories") {
    NoiseModel noise = NoiseModel::defaults();
    ResolvedNoise resolved = resolve(noise, c.wires());
    Counts manual;
    for (std::uint64_t s = 0; s < opts.shots; ++s) {
      auto rng = substream(opts.seed, opts.circuit_index, opts.run_index, s);
      ++manual[bits_to_key(run_single_shot(c, rng, &resolved))];
    }
    opts.noise = &noise;
    CHECK(run_shots(c, opts) == manual);
  }
}

TEST_CASE("sampling agrees with the exact distribution (chi-square)") {
  Xoshiro256pp cgen(2718);
  for (int i = 0; i < 5; ++i) {
    Circuit c = ndctest::random_measured_circuit(cgen, 3, 15);
    Distribution exact = exact_distribution(c);
    ShotOptions opts;
    opts.seed = 1000 + static_cast<std::uint64_t>(i);
    opts.shots = 20000;
    opts.workers = 1;
    Counts counts = run_shots(c, opts);
    CHECK(ndctest::born_p_value(counts, exact) > 1e-3);
  }
}

TEST_CASE("per-shot random consumption schedule is pinned") {
  // The documented order per instruction: idle catch-up channels, then
  // measurement outcome / readout flip, then the depolarizing draw (plus
  // a Pauli index when it fires), then on-duration channels.
  SUBCASE("noiseless measurement takes exactly one draw") {
    Circuit c(1, 1);
    c.add(h(0));
    c.add(measure(0, 0));
    auto used = substream(5, 0, 0, 0);
    run_single_shot(c, used, nullptr);
    auto mirror = substream(5, 0, 0, 0);
    (void)mirror.uniform();
    CHECK(used.next() == mirror.next());
  }

  SUBCASE("readout noise adds one flip draw per measurement") {
    Circuit c(1, 1);
    c.add(x(0));
    c.add(measure(0, 0));
    NoiseModel m;
    m.readout_p01 = 0.1;
    m.readout_p10 = 0.1;
    ResolvedNoise resolved = resolve(m, 1);
    auto used = substream(6, 0, 0, 0);
    run_single_shot(c, used, &resolved);
    auto mirror = substream(6, 0, 0, 0);
    (void)mirror.uniform();  // outcome
    (void)mirror.uniform();  // flip
    CHECK(used.next() == mirror.next());
  }

  SUBCASE("a certain depolarizing event adds the fire and index draws") {
    Circuit c(1, 0);
    c.add(x(0));
    NoiseModel m;
    m.p1 = 1.0;
    ResolvedNoise resolved = resolve(m, 1);
    auto used = substream(7, 0, 0, 0);
    run_single_shot(c, used, &resolved);
    auto mirror = substream(7, 0, 0, 0);
    (void)mirror.uniform();  // fires
    (void)mirror.below(3);   // Pauli index
    CHECK(used.next() == mirror.next());
  }

  SUBCASE("decoherence consumes one draw per active channel per interval") {
    Circuit c(1, 0);
    c.add(x(0));
    NoiseModel m;
    m.t1 = 100.0;
    m.t2 = 150.0;
    ResolvedNoise resolved = resolve(m, 1);
    auto used = substream(8, 0, 0, 0);
    run_single_shot(c, used, &resolved);
    auto mirror = substream(8, 0, 0, 0);
    (void)mirror.uniform();  // damping over the gate duration
    (void)mirror.uniform();  // dephasing over the gate duration
    CHECK(used.next() == mirror.next());
  }
}

TEST_CASE("wire cap is enforced") {
  ShotOptions opts;
  CHECK_THROWS_AS(run_shots(Circuit(27, 0), opts), ResourceLimitError);
}
