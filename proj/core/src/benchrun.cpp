// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/benchrun.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "ndc/errors.hpp"
#include "ndc/protocol.hpp"

namespace ndc {
namespace {

constexpr const char* kCsvHeader =
    "method,layout,n,theta,runs,shots,seed,v_mean,v_sigma,p_single_read,"
    "p_double_read,noise";

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

std::vector<SweepRow> run_sweep(const BenchConfig& config,
                                std::ostream* progress) {
  config.validate();
  const std::string noise_fp = config.noise.fingerprint();
  std::vector<SweepRow> rows;
  for (MethodKind method : config.methods) {
    for (int n = config.n_min; n <= config.n_max; ++n) {
      require_n(method, n);
      const std::uint64_t shots = config.shots_for(n);
      // Buffer one size so a mid-size failure never leaves a size with
      // rows at only one angle (the metric pairing needs both).
      std::vector<SweepRow> size_rows;
      try {
        for (double theta : config.thetas) {
          PointConfig point;
          point.method = method;
          point.layout = config.layout;
          point.n = n;
          point.theta = theta;
          point.runs = config.runs;
          point.shots = shots;
          point.seed = config.seed;
          point.workers = config.workers;
          point.noise = config.noise;
          if (progress)
            *progress << "point method=" << method_name(method) << " n=" << n
                      << " theta=" << fmt_double(theta) << " shots=" << shots
                      << "\n";
          const PointResult result = run_point(point);
          SweepRow row;
          row.method = method_name(method);
          row.layout = layout_name(config.layout);
          row.n = n;
          row.theta = theta;
          row.runs = config.runs;
          row.shots = shots;
          row.seed = config.seed;
          row.v_mean = result.v_mean;
          row.v_sigma = result.v_sigma;
          row.p_single_read = result.p_single_read_mean;
          row.p_double_read = result.p_double_read_mean;
          row.noise = noise_fp;
          size_rows.push_back(std::move(row));
        }
      } catch (const ResourceLimitError& e) {
        // Larger sizes for this method can only be more expensive, so skip
        // them; other methods still get their chance.
        if (progress)
          *progress << "note: method=" << method_name(method) << " n=" << n
                    << " hit the resource ceiling (" << e.what()
                    << "); skipping larger sizes for this method\n";
        break;
      }
      for (SweepRow& row : size_rows) rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const SweepRow& row : rows) {
    out << row.method << "," << row.layout << "," << row.n << ","
        << fmt_double(row.theta) << "," << row.runs << "," << row.shots << ","
        << row.seed << "," << fmt_double(row.v_mean) << ","
        << fmt_double(row.v_sigma) << "," << fmt_double(row.p_single_read)
        << "," << fmt_double(row.p_double_read) << "," << row.noise << "\n";
  }
  return out.str();
}

std::vector<SweepRow> parse_csv(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line))
    throw ParseError("csv: empty input");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader)
    throw ParseError("csv: unexpected header '" + line + "'");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 12)
      throw ParseError("csv line " + std::to_string(lineno) + ": expected 12 "
                       "fields, got " + std::to_string(fields.size()));
    try {
      SweepRow row;
      row.method = fields[0];
      if (!method_from_name(row.method))
        throw ParseError("csv line " + std::to_string(lineno) +
                         ": unknown method '" + row.method + "'");
      row.layout = fields[1];
      if (!layout_from_name(row.layout))
        throw ParseError("csv line " + std::to_string(lineno) +
                         ": unknown layout '" + row.layout + "'");
      row.n = std::stoi(fields[2]);
      row.theta = std::stod(fields[3]);
      row.runs = std::stoi(fields[4]);
      row.shots = std::stoull(fields[5]);
      row.seed = std::stoull(fields[6]);
      row.v_mean = std::stod(fields[7]);
      row.v_sigma = std::stod(fields[8]);
      row.p_single_read = std::stod(fields[9]);
      row.p_double_read = std::stod(fields[10]);
      row.noise = fields[11];
      if (row.noise.empty())
        throw ParseError("csv line " + std::to_string(lineno) +
                         ": empty noise fingerprint");
      rows.push_back(std::move(row));
    } catch (const ParseError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ParseError("csv line " + std::to_string(lineno) + ": " +
                       e.what());
    } catch (const std::exception&) {
      throw ParseError("csv line " + std::to_string(lineno) +
                       ": malformed field");
    }
  }
  return rows;
}

std::vector<SweepRow> parse_csv_string(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

std::vector<SweepRow> parse_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open csv file '" + path + "'");
  return parse_csv(in);
}

void write_csv_file(const std::string& path,
                    const std::vector<SweepRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write csv file '" + path + "'");
  out << rows_to_csv(rows);
}

std::vector<MetricPoint> metric_points_from_rows(
    const std::vector<SweepRow>& rows, const std::string& method,
    double theta_ndc, double theta_cd, double angle_tolerance) {
  if (std::abs(theta_ndc - theta_cd) <= 2.0 * angle_tolerance)
    throw ValidationError(
        "metric: working and control angles must be distinct");
  std::map<int, MetricPoint> by_n;
  std::map<int, std::pair<bool, bool>> seen;  // (working, control)
  for (const SweepRow& row : rows) {
    if (row.method != method) continue;
    const bool is_ndc = std::abs(row.theta - theta_ndc) <= angle_tolerance;
    const bool is_cd = std::abs(row.theta - theta_cd) <= angle_tolerance;
    if (!is_ndc && !is_cd) continue;
    MetricPoint& point = by_n[row.n];
    point.n = row.n;
    auto& flags = seen[row.n];
    if (is_ndc) {
      if (flags.first)
        throw ValidationError("metric: duplicate working-angle row for n=" +
                              std::to_string(row.n));
      point.v_ndc = row.v_mean;
      point.sigma_ndc = row.v_sigma;
      flags.first = true;
    }
    if (is_cd) {
      if (flags.second)
        throw ValidationError("metric: duplicate control-angle row for n=" +
                              std::to_string(row.n));
      point.v_cd = row.v_mean;
      point.sigma_cd = row.v_sigma;
      flags.second = true;
    }
  }
  if (by_n.empty())
    throw ValidationError("metric: no rows match method '" + method +
                          "' at the requested angles");
  std::vector<MetricPoint> points;
  points.reserve(by_n.size());
  for (const auto& [n, point] : by_n) {
    const auto& flags = seen[n];
    if (!flags.first || !flags.second)
      throw ValidationError(
          "metric: n=" + std::to_string(n) + " lacks a row at the " +
          (flags.first ? "control" : "working") + " angle");
    points.push_back(point);
  }
  return points;
}

}  // namespace ndc
