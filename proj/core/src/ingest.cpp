// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/ingest.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "ndc/errors.hpp"
#include "ndc/protocol.hpp"

namespace ndc {
namespace {

using nlohmann::json;

struct PointKey {
  std::string method;
  std::string layout;
  int n;
  double theta;

  bool operator<(const PointKey& other) const {
    return std::tie(method, layout, n, theta) <
           std::tie(other.method, other.layout, other.n, other.theta);
  }
};

Counts parse_counts(const json& node, const std::string& where) {
  if (!node.is_object())
    throw ParseError(where + ": 'counts' must be an object");
  Counts counts;
  for (const auto& [key, value] : node.items()) {
    if (key.size() != static_cast<std::size_t>(kProtocolClbits))
      throw ParseError(where + ": key '" + key + "' must have " +
                       std::to_string(kProtocolClbits) + " bits");
    for (char c : key)
      if (c != '0' && c != '1')
        throw ParseError(where + ": key '" + key + "' is not a bitstring");
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0)
      throw ParseError(where + ": count for '" + key +
                       "' must be a positive integer");
    counts[key] = value.get<std::uint64_t>();
  }
  if (counts.empty()) throw ParseError(where + ": empty count table");
  return counts;
}

}  // namespace

std::vector<SweepRow> ingest_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("ingest: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("experiments") ||
      !doc["experiments"].is_array())
    throw ParseError("ingest: expected an object with an 'experiments' array");

  // point -> run index -> (single counts, double counts)
  std::map<PointKey, std::map<int, std::pair<Counts, Counts>>> grouped;
  std::vector<PointKey> order;

  std::size_t index = 0;
  for (const auto& entry : doc["experiments"]) {
    const std::string where = "experiment " + std::to_string(index++);
    if (!entry.is_object())
      throw ParseError(where + ": expected an object");
    for (const char* field : {"method", "n", "theta", "branch", "run",
                              "counts"})
      if (!entry.contains(field))
        throw ParseError(where + ": missing field '" + field + "'");

    PointKey key;
    key.method = entry["method"].get<std::string>();
    if (!method_from_name(key.method))
      throw ParseError(where + ": unknown method '" + key.method + "'");
    key.layout = entry.value("layout", std::string("linear"));
    if (!layout_from_name(key.layout))
      throw ParseError(where + ": unknown layout '" + key.layout + "'");
    if (!entry["n"].is_number_integer())
      throw ParseError(where + ": 'n' must be an integer");
    key.n = entry["n"].get<int>();
    if (key.n < 1) throw ParseError(where + ": 'n' must be positive");
    if (!entry["theta"].is_number())
      throw ParseError(where + ": 'theta' must be a number");
    key.theta = entry["theta"].get<double>();

    const std::string branch = entry["branch"].get<std::string>();
    if (branch != "single" && branch != "double")
      throw ParseError(where + ": 'branch' must be 'single' or 'double'");
    if (!entry["run"].is_number_integer() || entry["run"].get<int>() < 0)
      throw ParseError(where + ": 'run' must be a non-negative integer");
    const int run = entry["run"].get<int>();

    if (grouped.find(key) == grouped.end()) order.push_back(key);
    auto& slot = grouped[key][run];
    Counts& target = branch == "single" ? slot.first : slot.second;
    if (!target.empty())
      throw ParseError(where + ": duplicate " + branch + " counts for run " +
                       std::to_string(run));
    target = parse_counts(entry["counts"], where);
  }
  if (grouped.empty()) throw ParseError("ingest: no experiments supplied");

  std::vector<SweepRow> rows;
  rows.reserve(order.size());
  for (const PointKey& key : order) {
    const auto& runs = grouped[key];
    std::vector<ViolationEstimate> estimates;
    estimates.reserve(runs.size());
    std::uint64_t shots = 0;
    for (const auto& [run, pair] : runs) {
      if (pair.first.empty() || pair.second.empty())
        throw ParseError("ingest: method " + key.method + " n=" +
                         std::to_string(key.n) + " run " +
                         std::to_string(run) + " lacks its " +
                         (pair.first.empty() ? "single" : "double") +
                         "-branch counts");
      estimates.push_back(
          estimate_violation(pair.first, pair.second, kProtocolClbits));
      if (shots == 0) shots = estimates.back().single_shots;
    }
    SweepRow row;
    row.method = key.method;
    row.layout = key.layout;
    row.n = key.n;
    row.theta = key.theta;
    row.runs = static_cast<int>(estimates.size());
    row.shots = shots;
    row.seed = 0;            // external data carries no seed
    row.noise = "external";  // and no simulator noise fingerprint
    double v_sum = 0.0;
    double ps_sum = 0.0;
    double pd_sum = 0.0;
    for (const auto& est : estimates) {
      v_sum += est.v;
      ps_sum += est.p_single_read;
      pd_sum += est.p_double_read;
    }
    const double count = static_cast<double>(estimates.size());
    row.v_mean = v_sum / count;
    row.p_single_read = ps_sum / count;
    row.p_double_read = pd_sum / count;
    if (estimates.size() > 1) {
      double ss = 0.0;
      for (const auto& est : estimates) {
        const double d = est.v - row.v_mean;
        ss += d * d;
      }
      row.v_sigma = std::sqrt(ss / (count - 1.0));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> ingest_json_string(const std::string& text) {
  std::istringstream in(text);
  return ingest_json(in);
}

std::vector<SweepRow> ingest_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open json file '" + path + "'");
  return ingest_json(in);
}

}  // namespace ndc
