// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ndc/errors.hpp"

namespace ndc {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

bool passes(double discriminant) { return discriminant >= 0.0; }

}  // namespace

double metric_discriminant(const MetricPoint& point) {
  const double spread = std::sqrt(point.sigma_ndc * point.sigma_ndc +
                                  point.sigma_cd * point.sigma_cd);
  return point.v_ndc - std::abs(point.v_cd) - 3.0 * spread;
}

MetricReport compute_n_ndc(std::vector<MetricPoint> points,
                           const MetricOptions& options) {
  if (points.empty())
    throw ValidationError("compute_n_ndc: no points supplied");
  std::sort(points.begin(), points.end(),
            [](const MetricPoint& a, const MetricPoint& b) {
              return a.n < b.n;
            });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].n == points[i - 1].n)
      throw ValidationError("compute_n_ndc: duplicate size n=" +
                            std::to_string(points[i].n));
    if (points[i].n != points[i - 1].n + 1)
      throw ValidationError("compute_n_ndc: sizes must be contiguous, gap "
                            "between n=" +
                            std::to_string(points[i - 1].n) + " and n=" +
                            std::to_string(points[i].n));
  }

  MetricReport report;
  report.discriminants.reserve(points.size());
  bool streak = true;
  bool all_pass = true;
  for (const auto& point : points) {
    const double d = metric_discriminant(point);
    report.discriminants.push_back(d);
    if (passes(d)) {
      if (!options.require_contiguous || streak) report.n_ndc = point.n;
    } else {
      streak = false;
      all_pass = false;
    }
  }
  report.points = std::move(points);
  report.saturated = all_pass;
  if (report.saturated) {
    report.note =
        "every measured size passed; the metric is bounded by the sweep "
        "range and larger sizes may still pass";
  } else if (report.n_ndc == 0) {
    report.note = "no measured size clears the disturbance control";
  }
  return report;
}

double n_ndc_ratio(const MetricReport& a, const MetricReport& b) {
  if (b.n_ndc == 0)
    throw ValidationError("n_ndc_ratio: denominator report has no passing "
                          "size");
  return static_cast<double>(a.n_ndc) / static_cast<double>(b.n_ndc);
}

std::string metric_report_csv(const MetricReport& report) {
  std::ostringstream out;
  out << "method,n,v_ndc,sigma_ndc,v_cd,sigma_cd,discriminant,pass\n";
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const MetricPoint& p = report.points[i];
    out << report.method << "," << p.n << "," << fmt_double(p.v_ndc) << ","
        << fmt_double(p.sigma_ndc) << "," << fmt_double(p.v_cd) << ","
        << fmt_double(p.sigma_cd) << ","
        << fmt_double(report.discriminants[i]) << ","
        << (passes(report.discriminants[i]) ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string metric_report_text(const MetricReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.points.size(); ++i)
    out << "n=" << report.points[i].n
        << " discriminant=" << fmt_double(report.discriminants[i])
        << (passes(report.discriminants[i]) ? " pass" : " fail") << "\n";
  out << "n_ndc=";
  if (report.n_ndc == 0)
    out << "none";
  else
    out << report.n_ndc;
  out << " saturated=" << (report.saturated ? "yes" : "no") << "\n";
  if (!report.note.empty()) out << "note: " << report.note << "\n";
  out << "note: the three-sigma rule assumes Gaussian run-to-run "
         "statistics\n";
  return out.str();
}

}  // namespace ndc
