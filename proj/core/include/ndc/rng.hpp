// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#pragma once

#include <array>
#include <cstdint>

namespace ndc {

// Stateless 64-bit finalizer used for seed derivation (SplitMix64 core).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// SplitMix64 sequence generator; used only to expand seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256++ with a fixed, platform-independent output sequence.
// All randomness in the library flows through this engine so that runs
// are bit-reproducible across machines for a given seed.
class Xoshiro256pp {
 public:
  // Expands a single 64-bit seed into the full state via SplitMix64.
  explicit Xoshiro256pp(std::uint64_t seed);

  std::uint64_t next();

  // Uniform double in [0, 1): top 53 bits scaled by 2^-53.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); uses rejection to avoid modulo bias.
  std::uint64_t below(std::uint64_t n);

 private:
  std::array<std::uint64_t, 4> s_{};
};

// Derives the engine for an addressed substream. Independent addresses
// give statistically independent streams; identical addresses give
// identical streams. Used as (seed, circuit_index, run, shot).
Xoshiro256pp substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c);

}  // namespace ndc
