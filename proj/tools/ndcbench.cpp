// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors
//
// ndcbench: build, transpile, verify, simulate, and summarize parity
// no-disturbance protocol circuits.
//
// Exit codes: 0 success; 1 usage error (bad invocation); 2 validation
// error (invalid values or file contents, a failed check, a rewrite that
// does not apply); 3 resource ceiling or internal error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ndc/benchconfig.hpp"
#include "ndc/benchrun.hpp"
#include "ndc/circuit_text.hpp"
#include "ndc/equivalence.hpp"
#include "ndc/errors.hpp"
#include "ndc/ingest.hpp"
#include "ndc/metric.hpp"
#include "ndc/methods.hpp"
#include "ndc/passes.hpp"
#include "ndc/protocol.hpp"
#include "ndc/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;

// Invocation-shape problems CLI11 cannot express (e.g. mutually required
// option groups); reported as usage errors, not validation errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ndc::MethodKind method_arg(const std::string& name) {
  const auto kind = ndc::method_from_name(name);
  if (!kind) throw ndc::ValidationError("unknown method '" + name + "'");
  return *kind;
}

ndc::Layout layout_arg(const std::string& name) {
  const auto layout = ndc::layout_from_name(name);
  if (!layout) throw ndc::ValidationError("unknown layout '" + name + "'");
  return *layout;
}

bool branch_arg(const std::string& name) {
  if (name == "double") return true;   // intermediate parity measured
  if (name == "single") return false;  // intermediate measurement disabled
  throw ndc::ValidationError("unknown branch '" + name + "'");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ndc::Error("cannot write '" + path + "'");
  out << text;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

struct NoiseArgs {
  std::string preset = "none";
  ndc::NoiseModel model;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--noise-preset", preset,
                    "Noise preset applied before individual overrides")
        ->check(CLI::IsMember({"none", "default"}))
        ->capture_default_str();
    cmd->add_option("--p1", model.p1, "Depolarizing probability after 1q gates");
    cmd->add_option("--p2", model.p2, "Depolarizing probability after 2q gates");
    cmd->add_option("--t1", model.t1, "Amplitude damping time (0 disables)");
    cmd->add_option("--t2", model.t2, "Coherence time (0 disables)");
    cmd->add_option("--dur-1q", model.dur_1q, "1q gate duration");
    cmd->add_option("--dur-2q", model.dur_2q, "2q gate duration");
    cmd->add_option("--dur-meas", model.dur_meas, "Measurement duration");
    cmd->add_option("--readout-p01", model.readout_p01,
                    "Probability of reading 1 as 0");
    cmd->add_option("--readout-p10", model.readout_p10,
                    "Probability of reading 0 as 1");
    cmd->add_option("--jitter", model.jitter,
                    "Per-wire duration jitter amplitude in [0,1)");
    cmd->add_option("--jitter-seed", model.jitter_seed,
                    "Seed of the per-wire jitter substream");
  }

  // Overrides were written straight into `model`, so presets must be
  // resolved before CLI11 runs; callers pass preset defaults up front.
  ndc::NoiseModel resolve(const CLI::App* cmd) const {
    ndc::NoiseModel base =
        preset == "default" ? ndc::NoiseModel::defaults() : ndc::NoiseModel{};
    auto take = [&](const char* name, auto member) {
      if (cmd->count(name) > 0) base.*member = model.*member;
    };
    take("--p1", &ndc::NoiseModel::p1);
    take("--p2", &ndc::NoiseModel::p2);
    take("--t1", &ndc::NoiseModel::t1);
    take("--t2", &ndc::NoiseModel::t2);
    take("--dur-1q", &ndc::NoiseModel::dur_1q);
    take("--dur-2q", &ndc::NoiseModel::dur_2q);
    take("--dur-meas", &ndc::NoiseModel::dur_meas);
    take("--readout-p01", &ndc::NoiseModel::readout_p01);
    take("--readout-p10", &ndc::NoiseModel::readout_p10);
    take("--jitter", &ndc::NoiseModel::jitter);
    take("--jitter-seed", &ndc::NoiseModel::jitter_seed);
    base.validate();
    return base;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Benchmarking toolkit for parity no-disturbance protocol circuits"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- build ---------------------------------------------------------
  auto* build = app.add_subcommand(
      "build", "Construct a protocol circuit and print it");
  {
    static std::string method = "h";
    static std::string layout = "linear";
    static std::string branch = "double";
    static std::string theta = "pi/4";
    static int n = 4;
    static std::string output;
    build->add_option("--method", method, "Protocol variant")
        ->check(CLI::IsMember({"h", "m", "naive-h", "naive-m"}))
        ->capture_default_str();
    build->add_option("--layout", layout, "Connectivity layout")
        ->check(CLI::IsMember({"reference", "linear"}))
        ->capture_default_str();
    build->add_option("-n,--data-qubits", n, "Number of data qubits")
        ->capture_default_str();
    build->add_option("--theta", theta, "Rotation angle (number or pi "
                      "fraction like pi/4)")
        ->capture_default_str();
    build->add_option("--branch", branch,
                      "single (measurement disabled) or double (measured)")
        ->check(CLI::IsMember({"single", "double"}))
        ->capture_default_str();
    build->add_option("-o,--output", output, "Output file ('-' = stdout)");
    build->callback([&] {
      action = [] {
        const ndc::Circuit c =
            ndc::build_circuit(method_arg(method), layout_arg(layout), n,
                               ndc::parse_angle(theta), branch_arg(branch));
        write_text(output, ndc::emit_circuit(c));
        return kExitOk;
      };
    });
  }

  // ---- transpile -----------------------------------------------------
  auto* transpile = app.add_subcommand(
      "transpile", "Rewrite a reference circuit to nearest-neighbour form");
  {
    static std::string method = "h";
    static std::string branch = "double";
    static std::string theta = "pi/4";
    static std::string input;
    static std::string output;
    static int n = 4;
    static bool keep_first = false;
    transpile->add_option("--method", method,
                          "Which rewrite driver to apply")
        ->check(CLI::IsMember({"h", "m"}))
        ->capture_default_str();
    transpile->add_option("--input", input,
                          "Reference circuit file (omit to build one)");
    transpile->add_option("-n,--data-qubits", n,
                          "Data qubits when building the reference")
        ->capture_default_str();
    transpile->add_option("--theta", theta,
                          "Angle when building the reference")
        ->capture_default_str();
    transpile->add_option("--branch", branch,
                          "Branch when building the reference")
        ->check(CLI::IsMember({"single", "double"}))
        ->capture_default_str();
    transpile->add_flag("--keep-first-readout", keep_first,
                        "Keep the first parity readout instead of eliding "
                        "it (only meaningful for the h driver)");
    transpile->add_option("-o,--output", output,
                          "Output file ('-' = stdout)");
    transpile->callback([&] {
      action = [] {
        const ndc::MethodKind kind = method_arg(method);
        const ndc::Circuit reference =
            input.empty()
                ? ndc::build_reference(kind, n, ndc::parse_angle(theta),
                                       branch_arg(branch))
                : ndc::parse_circuit_file(input);
        const ndc::Circuit lnn =
            ndc::transpile_lnn(reference, kind, keep_first);
        write_text(output, ndc::emit_circuit(lnn));
        return kExitOk;
      };
    });
  }

  // ---- verify --------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Check distribution equivalence between circuits");
  {
    static std::string file_a;
    static std::string file_b;
    static std::vector<int> bits;
    static double tolerance = 1e-10;
    static bool structural = false;
    static std::string method;
    static std::string branch = "double";
    static std::string theta = "pi/4";
    static int n = 4;
    verify->add_option("--a", file_a, "First circuit file");
    verify->add_option("--b", file_b, "Second circuit file");
    verify->add_option("--bits", bits,
                       "Classical bits to compare (default: all protocol "
                       "bits)");
    verify->add_option("--tolerance", tolerance,
                       "Max allowed probability deviation")
        ->capture_default_str();
    verify->add_flag("--structural", structural,
                     "Additionally require instruction-level equality up "
                     "to commuting reorders");
    verify->add_option("--method", method,
                       "Pipeline self-check: build the reference, rewrite "
                       "it, compare against reference and generator")
        ->check(CLI::IsMember({"h", "m"}));
    verify->add_option("-n,--data-qubits", n, "Self-check size")
        ->capture_default_str();
    verify->add_option("--theta", theta, "Self-check angle")
        ->capture_default_str();
    verify->add_option("--branch", branch, "Self-check branch")
        ->check(CLI::IsMember({"single", "double"}));
    verify->callback([&] {
      action = [] {
        if (!method.empty()) {
          const ndc::MethodKind kind = method_arg(method);
          const double angle = ndc::parse_angle(theta);
          const bool measured = branch_arg(branch);
          const ndc::Circuit reference =
              ndc::build_reference(kind, n, angle, measured);
          const ndc::Circuit pipeline = ndc::transpile_lnn(reference, kind);
          const ndc::Circuit generator =
              ndc::build_lnn(kind, n, angle, measured);
          const std::vector<int> compare_bits =
              kind == ndc::MethodKind::HMethod
                  ? std::vector<int>{ndc::kSecondParityBit}
                  : std::vector<int>{ndc::kFirstParityBit,
                                     ndc::kSecondParityBit};
          const auto report =
              ndc::check_equivalence(reference, pipeline, compare_bits,
                                     tolerance);
          const bool matches = ndc::structurally_equal(generator, pipeline);
          std::cout << "distribution: "
                    << (report.ok ? "equivalent" : "DIFFERENT")
                    << " max_abs_diff=" << fmt(report.max_abs_diff) << "\n";
          if (!report.ok) std::cout << "  " << report.diagnostic << "\n";
          std::cout << "generator structural match: "
                    << (matches ? "yes" : "NO") << "\n";
          return report.ok && matches ? kExitOk : kExitValidation;
        }
        if (file_a.empty() || file_b.empty())
          throw UsageError("verify needs either --method or both --a and "
                           "--b");
        const ndc::Circuit a = ndc::parse_circuit_file(file_a);
        const ndc::Circuit b = ndc::parse_circuit_file(file_b);
        std::vector<int> compare_bits = bits;
        if (compare_bits.empty())
          for (int i = 0; i < std::min(a.clbits(), b.clbits()); ++i)
            compare_bits.push_back(i);
        const auto report =
            ndc::check_equivalence(a, b, compare_bits, tolerance);
        std::cout << "distribution: "
                  << (report.ok ? "equivalent" : "DIFFERENT")
                  << " max_abs_diff=" << fmt(report.max_abs_diff) << "\n";
        if (!report.ok) std::cout << "  " << report.diagnostic << "\n";
        bool ok = report.ok;
        if (structural) {
          const bool matches = ndc::structurally_equal(a, b);
          std::cout << "structural match: " << (matches ? "yes" : "NO")
                    << "\n";
          ok = ok && matches;
        }
        return ok ? kExitOk : kExitValidation;
      };
    });
  }

  // ---- run -----------------------------------------------------------
  auto* run = app.add_subcommand(
      "run", "Estimate the violation at one parameter point");
  {
    static std::string method = "h";
    static std::string layout = "linear";
    static std::string theta = "pi/4";
    static int n = 4;
    static int runs = 20;
    static std::uint64_t shots = 4000;
    static std::uint64_t seed = 1;
    static int workers = 0;
    static NoiseArgs noise;
    run->add_option("--method", method, "Protocol variant")
        ->check(CLI::IsMember({"h", "m", "naive-h", "naive-m"}))
        ->capture_default_str();
    run->add_option("--layout", layout, "Connectivity layout")
        ->check(CLI::IsMember({"reference", "linear"}))
        ->capture_default_str();
    run->add_option("-n,--data-qubits", n, "Number of data qubits")
        ->capture_default_str();
    run->add_option("--theta", theta, "Rotation angle")
        ->capture_default_str();
    run->add_option("--runs", runs, "Independent repetitions")
        ->capture_default_str();
    run->add_option("--shots", shots, "Shots per branch per run")
        ->capture_default_str();
    run->add_option("--seed", seed, "Master seed")->capture_default_str();
    run->add_option("--workers", workers, "Worker threads (0 = auto)")
        ->capture_default_str();
    noise.add_options(run);
    run->callback([&] {
      action = [&] {
        ndc::PointConfig config;
        config.method = method_arg(method);
        config.layout = layout_arg(layout);
        config.n = n;
        config.theta = ndc::parse_angle(theta);
        config.runs = runs;
        config.shots = shots;
        config.seed = seed;
        config.workers = workers;
        config.noise = noise.resolve(run);
        const ndc::PointResult result = ndc::run_point(config);
        std::cout << "method=" << method << " layout=" << layout
                  << " n=" << n << " theta=" << fmt(config.theta) << "\n"
                  << "runs=" << runs << " shots=" << shots
                  << " seed=" << seed << "\n"
                  << "v_mean=" << fmt(result.v_mean)
                  << " v_sigma=" << fmt(result.v_sigma)
                  << " ideal_v=" << fmt(ndc::ideal_violation(n, config.theta))
                  << "\n"
                  << "p_single_read=" << fmt(result.p_single_read_mean)
                  << " p_double_read=" << fmt(result.p_double_read_mean)
                  << "\n";
        return kExitOk;
      };
    });
  }

  // ---- sweep ---------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "Run a (method, size, angle) grid and emit CSV");
  {
    static std::string config_path;
    static std::string output;
    static std::vector<std::string> methods;
    static std::string layout;
    static int n_min = -1;
    static int n_max = -1;
    static std::vector<std::string> thetas;
    static int runs = -1;
    static std::int64_t shots = -1;
    static std::int64_t shots_floor = -1;
    static int taper = -1;
    static std::int64_t seed = -1;
    static int workers = -1;
    static bool progress = false;
    static NoiseArgs noise;
    sweep->add_option("--config", config_path,
                      "Sweep config file (key = value); command line "
                      "options override it");
    sweep->add_option("-o,--output", output,
                      "CSV output ('-' = stdout; overrides config)");
    sweep->add_option("--methods", methods, "Protocol variants");
    sweep->add_option("--layout", layout, "Connectivity layout")
        ->check(CLI::IsMember({"reference", "linear"}));
    sweep->add_option("--n-min", n_min, "Smallest size");
    sweep->add_option("--n-max", n_max, "Largest size");
    sweep->add_option("--thetas", thetas, "Angle list");
    sweep->add_option("--runs", runs, "Independent repetitions per point");
    sweep->add_option("--shots", shots, "Shots per branch per run");
    sweep->add_option("--shots-floor", shots_floor,
                      "Lower bound of the tapered shot schedule");
    sweep->add_option("--shots-taper-start", taper,
                      "Size beyond which shots halve per extra qubit "
                      "(0 disables)");
    sweep->add_option("--seed", seed, "Master seed");
    sweep->add_option("--workers", workers, "Worker threads (0 = auto)");
    sweep->add_flag("--progress", progress, "Write progress to stderr");
    noise.add_options(sweep);
    sweep->callback([&] {
      action = [&] {
        ndc::BenchConfig config;
        if (!config_path.empty())
          config = ndc::parse_config_file(config_path);
        if (!methods.empty()) {
          config.methods.clear();
          for (const auto& name : methods)
            config.methods.push_back(method_arg(name));
        }
        if (!layout.empty()) config.layout = layout_arg(layout);
        if (n_min >= 0) config.n_min = n_min;
        if (n_max >= 0) config.n_max = n_max;
        if (!thetas.empty()) {
          config.thetas.clear();
          for (const auto& token : thetas)
            config.thetas.push_back(ndc::parse_angle(token));
        }
        if (runs >= 0) config.runs = runs;
        if (shots >= 0) config.shots = static_cast<std::uint64_t>(shots);
        if (shots_floor >= 0)
          config.shots_floor = static_cast<std::uint64_t>(shots_floor);
        if (taper >= 0) config.shots_taper_start = taper;
        if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
        if (workers >= 0) config.workers = workers;
        if (sweep->count("--noise-preset") || sweep->count("--p1") ||
            sweep->count("--p2") || sweep->count("--t1") ||
            sweep->count("--t2") || sweep->count("--dur-1q") ||
            sweep->count("--dur-2q") || sweep->count("--dur-meas") ||
            sweep->count("--readout-p01") ||
            sweep->count("--readout-p10") || sweep->count("--jitter") ||
            sweep->count("--jitter-seed"))
          config.noise = noise.resolve(sweep);
        if (!output.empty()) config.output = output;
        config.validate();
        const auto rows =
            ndc::run_sweep(config, progress ? &std::cerr : nullptr);
        write_text(config.output, ndc::rows_to_csv(rows));
        return kExitOk;
      };
    });
  }

  // ---- metric --------------------------------------------------------
  auto* metric = app.add_subcommand(
      "metric", "Compute the size metric from a sweep CSV");
  {
    static std::string input;
    static std::string output;
    static std::string method = "h";
    static std::string theta_ndc = "pi/4";
    static std::string theta_cd = "pi";
    static bool contiguous = false;
    metric->add_option("--input", input, "Sweep CSV file")->required();
    metric->add_option("-o,--output", output,
                       "Also write the per-size report as CSV");
    metric->add_option("--method", method, "Method to evaluate")
        ->check(CLI::IsMember({"h", "m", "naive-h", "naive-m"}))
        ->capture_default_str();
    metric->add_option("--theta-ndc", theta_ndc, "Working angle")
        ->capture_default_str();
    metric->add_option("--theta-cd", theta_cd,
                       "Classical-disturbance control angle")
        ->capture_default_str();
    metric->add_flag("--require-contiguous", contiguous,
                     "Demand an unbroken passing streak from the smallest "
                     "size instead of the largest passing size");
    metric->callback([&] {
      action = [] {
        const auto rows = ndc::parse_csv_file(input);
        const auto points = ndc::metric_points_from_rows(
            rows, method, ndc::parse_angle(theta_ndc),
            ndc::parse_angle(theta_cd));
        ndc::MetricOptions options;
        options.require_contiguous = contiguous;
        ndc::MetricReport report = ndc::compute_n_ndc(points, options);
        report.method = method;
        std::cout << ndc::metric_report_text(report);
        if (!output.empty())
          write_text(output, ndc::metric_report_csv(report));
        return kExitOk;
      };
    });
  }

  // ---- ingest --------------------------------------------------------
  auto* ingest = app.add_subcommand(
      "ingest", "Convert externally collected counts (JSON) to sweep CSV");
  {
    static std::string input;
    static std::string output;
    ingest->add_option("--input", input, "JSON counts file")->required();
    ingest->add_option("-o,--output", output,
                       "CSV output ('-' = stdout)");
    ingest->callback([&] {
      action = [] {
        const auto rows = ndc::ingest_json_file(input);
        write_text(output, ndc::rows_to_csv(rows));
        return kExitOk;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ndc::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ndc::Error& e) {
    // Parse, validation, and rewrite errors: the inputs are at fault.
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitResource;
  }
}
