// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors
//
// The size-based quantumness metric N_NDC: the largest system size at
// which the no-disturbance violation still clears its
// classical-disturbance control by three combined standard deviations.

#pragma once

#include <string>
#include <vector>

namespace ndc {

struct MetricPoint {
  int n = 0;
  double v_ndc = 0.0;   // violation at the working angle
  double sigma_ndc = 0.0;
  double v_cd = 0.0;    // violation at the classical-disturbance angle
  double sigma_cd = 0.0;
};

// v_ndc - |v_cd| - 3 * sqrt(sigma_ndc^2 + sigma_cd^2): non-negative means
// the quantum signal clears the disturbance control with three combined
// standard deviations to spare.
double metric_discriminant(const MetricPoint& point);

struct MetricOptions {
  // Take n_ndc as the end of the unbroken passing streak from the
  // smallest measured size instead of the largest passing size outright.
  // Statistical dips can fail an intermediate size even though larger
  // ones pass; the default keeps those larger sizes.
  bool require_contiguous = false;
};

struct MetricReport {
  std::string method;  // label carried into emitted reports; may be empty
  // Largest n whose discriminant is >= 0 (see MetricOptions); 0 when no
  // measured size qualifies ("none").
  int n_ndc = 0;
  // True when every measured size passes; n_ndc is then only a lower
  // bound set by the sweep range.
  bool saturated = false;
  // Sorted by n; discriminants aligned with points.
  std::vector<MetricPoint> points;
  std::vector<double> discriminants;
  std::string note;
};

// Points must cover a contiguous range of sizes once sorted; gaps are an
// error, never interpolated.
MetricReport compute_n_ndc(std::vector<MetricPoint> points,
                           const MetricOptions& options = {});

// Cross-report comparison ratio a.n_ndc / b.n_ndc; throws when b has no
// passing size.
double n_ndc_ratio(const MetricReport& a, const MetricReport& b);

// Per-size rows as CSV: method,n,v_ndc,sigma_ndc,v_cd,sigma_cd,
// discriminant,pass.
std::string metric_report_csv(const MetricReport& report);

// Human-readable summary: one line per size, the resulting n_ndc, and
// the statistical caveat of the three-sigma rule.
std::string metric_report_text(const MetricReport& report);

}  // namespace ndc
