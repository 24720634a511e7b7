// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ndc/circuit.hpp"
#include "ndc/noise.hpp"
#include "ndc/rng.hpp"

namespace ndc {

// Histogram of recorded classical registers. Keys render classical bit 0
// as the rightmost character.
using Counts = std::map<std::string, std::uint64_t>;
using Distribution = std::map<std::string, double>;

std::string bits_to_key(const std::vector<std::uint8_t>& bits);

struct ShotOptions {
  std::uint64_t seed = 0;
  std::uint64_t shots = 1024;
  // Substream address: every (seed, circuit_index, run_index, shot) tuple
  // gets an independent random stream, so results do not depend on the
  // worker count and are bit-reproducible for a given seed.
  std::uint64_t circuit_index = 0;
  std::uint64_t run_index = 0;
  int workers = 0;  // 0 = hardware concurrency
  const NoiseModel* noise = nullptr;  // null or trivial() = noiseless
};

// Samples `shots` shots. Noiseless circuits are served from a cached
// branch tree (states snapshotted at each measurement), which is
// bit-identical to replaying the full simulation per shot.
Counts run_shots(const Circuit& circuit, const ShotOptions& options);

// One full trajectory with a caller-supplied stream; exposed so tests
// can pin the per-shot random consumption schedule.
std::vector<std::uint8_t> run_single_shot(const Circuit& circuit,
                                          Xoshiro256pp& rng,
                                          const ResolvedNoise* noise);

struct ExactLimits {
  int max_wires = 26;
  std::size_t max_paths = std::size_t{1} << 20;
  double prune_below = 1e-14;
};

// Noiseless distribution over classical registers, enumerating every
// measurement branch. Throws ResourceLimitError past the limits.
Distribution exact_distribution(const Circuit& circuit,
                                const ExactLimits& limits = {});

// Marginalizes a distribution onto a subset of classical bits, given in
// the order they should appear in the reduced register (element 0 of
// `bits` becomes reduced clbit 0, i.e. the rightmost key character).
Distribution marginalize(const Distribution& dist, int clbits,
                         const std::vector<int>& bits);

Distribution counts_to_distribution(const Counts& counts);

}  // namespace ndc
