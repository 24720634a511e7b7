// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/benchconfig.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ndc/errors.hpp"

namespace ndc {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double to_double(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" +
                     token + "'");
  }
}

std::int64_t to_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad integer '" +
                     token + "'");
  }
}

std::uint64_t to_uint(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(token, &used);
    if (used != token.size() || token.front() == '-')
      throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) +
                     ": bad unsigned integer '" + token + "'");
  }
}

MethodKind to_method(const std::string& name, int line) {
  const auto kind = method_from_name(name);
  if (!kind)
    throw ParseError("line " + std::to_string(line) + ": unknown method '" +
                     name + "'");
  return *kind;
}

Layout to_layout(const std::string& name, int line) {
  const auto layout = layout_from_name(name);
  if (!layout)
    throw ParseError("line " + std::to_string(line) + ": unknown layout '" +
                     name + "'");
  return *layout;
}

}  // namespace

double parse_angle(const std::string& raw) {
  const std::string token = trim(raw);
  if (token.empty()) throw ParseError("empty angle token");
  const auto pi_pos = token.find("pi");
  if (pi_pos == std::string::npos) {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size())
      throw ParseError("bad angle token '" + token + "'");
    return v;
  }
  double sign = 1.0;
  std::string head = trim(token.substr(0, pi_pos));
  if (!head.empty() && head.front() == '-') {
    sign = -1.0;
    head = trim(head.substr(1));
  }
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  double numerator = 1.0;
  if (!head.empty()) {
    std::size_t used = 0;
    numerator = std::stod(head, &used);
    if (used != head.size())
      throw ParseError("bad angle token '" + token + "'");
  }
  double denominator = 1.0;
  std::string tail = trim(token.substr(pi_pos + 2));
  if (!tail.empty()) {
    if (tail.front() != '/')
      throw ParseError("bad angle token '" + token + "'");
    tail = trim(tail.substr(1));
    std::size_t used = 0;
    denominator = std::stod(tail, &used);
    if (used != tail.size() || denominator == 0.0)
      throw ParseError("bad angle token '" + token + "'");
  }
  return sign * numerator * kPi / denominator;
}

BenchConfig::BenchConfig()
    : theta_ndc(kPi / 4.0), theta_cd(kPi) {
  thetas = {theta_ndc, theta_cd};
}

std::uint64_t BenchConfig::shots_for(int n) const {
  if (shots_taper_start <= 0) return shots;
  const int excess = n - shots_taper_start;
  if (excess <= 0) return shots;
  const std::uint64_t tapered = excess >= 63 ? 0 : shots >> excess;
  return std::max(shots_floor, tapered);
}

void BenchConfig::validate() const {
  if (methods.empty()) throw ValidationError("config: no methods selected");
  if (n_min < 1 || n_max < n_min)
    throw ValidationError("config: need 1 <= n_min <= n_max");
  if (thetas.empty()) throw ValidationError("config: no angles selected");
  if (runs < 1) throw ValidationError("config: runs must be positive");
  if (shots == 0) throw ValidationError("config: shots must be positive");
  if (shots_floor == 0)
    throw ValidationError("config: shots_floor must be positive");
  if (workers < 0) throw ValidationError("config: workers must be >= 0");
  noise.validate();
}

BenchConfig parse_config(std::istream& in) {
  BenchConfig config;
  bool saw_thetas = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'key = value'");

    if (key == "methods") {
      config.methods.clear();
      for (const auto& item : split_list(value))
        config.methods.push_back(to_method(item, lineno));
      if (config.methods.empty())
        throw ParseError("line " + std::to_string(lineno) +
                         ": empty method list");
    } else if (key == "layout") {
      config.layout = to_layout(value, lineno);
    } else if (key == "n_min") {
      config.n_min = static_cast<int>(to_int(value, lineno));
    } else if (key == "n_max") {
      config.n_max = static_cast<int>(to_int(value, lineno));
    } else if (key == "thetas") {
      config.thetas.clear();
      for (const auto& item : split_list(value))
        config.thetas.push_back(parse_angle(item));
      saw_thetas = true;
    } else if (key == "theta_ndc") {
      config.theta_ndc = parse_angle(value);
    } else if (key == "theta_cd") {
      config.theta_cd = parse_angle(value);
    } else if (key == "runs") {
      config.runs = static_cast<int>(to_int(value, lineno));
    } else if (key == "shots") {
      config.shots = to_uint(value, lineno);
    } else if (key == "shots_floor") {
      config.shots_floor = to_uint(value, lineno);
    } else if (key == "shots_taper_start") {
      config.shots_taper_start = static_cast<int>(to_int(value, lineno));
    } else if (key == "seed") {
      config.seed = to_uint(value, lineno);
    } else if (key == "workers") {
      config.workers = static_cast<int>(to_int(value, lineno));
    } else if (key == "output") {
      config.output = value;
    } else if (key == "noise.preset") {
      if (value == "none")
        config.noise = NoiseModel{};
      else if (value == "default")
        config.noise = NoiseModel::defaults();
      else
        throw ParseError("line " + std::to_string(lineno) +
                         ": unknown noise preset '" + value + "'");
    } else if (key == "noise.p1") {
      config.noise.p1 = to_double(value, lineno);
    } else if (key == "noise.p2") {
      config.noise.p2 = to_double(value, lineno);
    } else if (key == "noise.t1") {
      config.noise.t1 = to_double(value, lineno);
    } else if (key == "noise.t2") {
      config.noise.t2 = to_double(value, lineno);
    } else if (key == "noise.dur_1q") {
      config.noise.dur_1q = to_double(value, lineno);
    } else if (key == "noise.dur_2q") {
      config.noise.dur_2q = to_double(value, lineno);
    } else if (key == "noise.dur_meas") {
      config.noise.dur_meas = to_double(value, lineno);
    } else if (key == "noise.readout_p01") {
      config.noise.readout_p01 = to_double(value, lineno);
    } else if (key == "noise.readout_p10") {
      config.noise.readout_p10 = to_double(value, lineno);
    } else if (key == "noise.jitter") {
      config.noise.jitter = to_double(value, lineno);
    } else if (key == "noise.jitter_seed") {
      config.noise.jitter_seed = to_uint(value, lineno);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" +
                       key + "'");
    }
  }
  if (!saw_thetas) config.thetas = {config.theta_ndc, config.theta_cd};
  config.validate();
  return config;
}

BenchConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

BenchConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string emit_config(const BenchConfig& config) {
  std::ostringstream out;
  auto num = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  out << "methods = ";
  for (std::size_t i = 0; i < config.methods.size(); ++i) {
    if (i) out << ",";
    out << method_name(config.methods[i]);
  }
  out << "\n";
  out << "layout = " << layout_name(config.layout) << "\n";
  out << "n_min = " << config.n_min << "\n";
  out << "n_max = " << config.n_max << "\n";
  out << "thetas = ";
  for (std::size_t i = 0; i < config.thetas.size(); ++i) {
    if (i) out << ",";
    out << num(config.thetas[i]);
  }
  out << "\n";
  out << "theta_ndc = " << num(config.theta_ndc) << "\n";
  out << "theta_cd = " << num(config.theta_cd) << "\n";
  out << "runs = " << config.runs << "\n";
  out << "shots = " << config.shots << "\n";
  out << "shots_floor = " << config.shots_floor << "\n";
  out << "shots_taper_start = " << config.shots_taper_start << "\n";
  out << "seed = " << config.seed << "\n";
  out << "workers = " << config.workers << "\n";
  out << "noise.p1 = " << num(config.noise.p1) << "\n";
  out << "noise.p2 = " << num(config.noise.p2) << "\n";
  out << "noise.t1 = " << num(config.noise.t1) << "\n";
  out << "noise.t2 = " << num(config.noise.t2) << "\n";
  out << "noise.dur_1q = " << num(config.noise.dur_1q) << "\n";
  out << "noise.dur_2q = " << num(config.noise.dur_2q) << "\n";
  out << "noise.dur_meas = " << num(config.noise.dur_meas) << "\n";
  out << "noise.readout_p01 = " << num(config.noise.readout_p01) << "\n";
  out << "noise.readout_p10 = " << num(config.noise.readout_p10) << "\n";
  out << "noise.jitter = " << num(config.noise.jitter) << "\n";
  out << "noise.jitter_seed = " << config.noise.jitter_seed << "\n";
  if (!config.output.empty()) out << "output = " << config.output << "\n";
  return out.str();
}

}  // namespace ndc
