// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors
//
// Sweep execution and the CSV result format.
//
// CSV columns (header required, doubles printed with %.17g so equal seeds
// reproduce byte-identical files):
//   method,layout,n,theta,runs,shots,seed,v_mean,v_sigma,
//   p_single_read,p_double_read,noise
// The final column is the noise-model fingerprint ("none" for noiseless
// rows, "external" for ingested records).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ndc/benchconfig.hpp"
#include "ndc/metric.hpp"

namespace ndc {

struct SweepRow {
  std::string method;
  std::string layout;
  int n = 0;
  double theta = 0.0;
  int runs = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  double v_mean = 0.0;
  double v_sigma = 0.0;
  double p_single_read = 0.0;
  double p_double_read = 0.0;
  std::string noise = "none";
};

// Runs every (method, n, theta) combination in deterministic order.
// When `progress` is non-null a one-line note per point is written to it.
std::vector<SweepRow> run_sweep(const BenchConfig& config,
                                std::ostream* progress = nullptr);

std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(std::istream& in);
std::vector<SweepRow> parse_csv_string(const std::string& text);
std::vector<SweepRow> parse_csv_file(const std::string& path);
void write_csv_file(const std::string& path,
                    const std::vector<SweepRow>& rows);

// Pairs rows taken at the working angle with rows taken at the control
// angle (matched within `angle_tolerance`) for one method, producing the
// per-size inputs of the quantumness metric.
std::vector<MetricPoint> metric_points_from_rows(
    const std::vector<SweepRow>& rows, const std::string& method,
    double theta_ndc, double theta_cd, double angle_tolerance = 1e-9);

}  // namespace ndc
