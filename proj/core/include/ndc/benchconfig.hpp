// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors
//
// Sweep configuration: a small "key = value" text format with `#` comments.
// Angles accept plain numbers or pi fractions ("pi", "pi/4", "3pi/4").

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ndc/methods.hpp"
#include "ndc/noise.hpp"

namespace ndc {

struct BenchConfig {
  std::vector<MethodKind> methods{MethodKind::HMethod};
  Layout layout = Layout::Linear;
  int n_min = 2;
  int n_max = 8;
  std::vector<double> thetas;
  double theta_ndc;  // working angle used when deriving the metric
  double theta_cd;   // classical-disturbance control angle
  int runs = 20;
  std::uint64_t shots = 4000;
  // When taper_start > 0 the per-run shot budget halves for every size
  // beyond it, never dropping below the floor.
  std::uint64_t shots_floor = 100;
  int shots_taper_start = 0;
  std::uint64_t seed = 1;
  int workers = 0;
  NoiseModel noise;
  std::string output;

  BenchConfig();

  std::uint64_t shots_for(int n) const;
  void validate() const;
};

// Parses an angle token: decimal literal, "pi", "pi/D", "Npi/D", "N*pi/D",
// with an optional leading minus.
double parse_angle(const std::string& token);

BenchConfig parse_config(std::istream& in);
BenchConfig parse_config_string(const std::string& text);
BenchConfig parse_config_file(const std::string& path);

std::string emit_config(const BenchConfig& config);

}  // namespace ndc
