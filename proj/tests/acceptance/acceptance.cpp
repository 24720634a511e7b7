// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors
//
// End-to-end acceptance gate. Each check prints exactly one PASS/FAIL
// line with its measured margin; the process exits nonzero if any check
// fails. The statistical checks run at fixed seeds, so a passing build
// passes forever.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "ndc/benchrun.hpp"
#include "ndc/equivalence.hpp"
#include "ndc/metric.hpp"
#include "ndc/methods.hpp"
#include "ndc/passes.hpp"
#include "ndc/protocol.hpp"
#include "ndc/simulator.hpp"
#include "support/oracle.hpp"
#include "support/random_circuit.hpp"

using namespace ndc;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kSeed = 20260814;

int g_failures = 0;
int g_index = 0;

void report(bool ok, const std::string& name, const std::string& detail,
            double seconds) {
  ++g_index;
  if (!ok) ++g_failures;
  std::printf("[%2d/10] %s %s: %s [%.1fs]\n", g_index, ok ? "PASS" : "FAIL",
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
}

template <typename F>
void criterion(const std::string& name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(ok, name, detail, seconds);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Exact P(second parity reads 1) difference between the branches.
double exact_violation(MethodKind kind, Layout layout, int n, double theta) {
  auto read_one = [&](bool measured) {
    Circuit c = build_circuit(kind, layout, n, theta, measured);
    Distribution m =
        marginalize(exact_distribution(c), c.clbits(), {kSecondParityBit});
    const auto it = m.find("1");
    return it == m.end() ? 0.0 : it->second;
  };
  return read_one(false) - read_one(true);
}

double exact_first_parity_even(MethodKind kind, Layout layout, int n,
                               double theta) {
  Circuit c = build_circuit(kind, layout, n, theta, true);
  Distribution m =
      marginalize(exact_distribution(c), c.clbits(), {kFirstParityBit});
  const auto it = m.find("0");
  return it == m.end() ? 0.0 : it->second;
}

PointResult measure_point(MethodKind method, int n, double theta, int runs,
                          std::uint64_t shots, const NoiseModel& noise) {
  PointConfig config;
  config.method = method;
  config.layout = Layout::Linear;
  config.n = n;
  config.theta = theta;
  config.runs = runs;
  config.shots = shots;
  config.seed = kSeed;
  config.workers = 1;
  config.noise = noise;
  return run_point(config);
}

// Shot budget for the noisy size scan: statevector cost doubles per added
// qubit, so the budget tapers to keep the scan inside the time box. The
// signal crosses the metric's detection floor around N ~ 10, so the
// starved tail only has to stay statistically flat, not resolve anything.
struct SizeBudget {
  int runs;
  std::uint64_t shots;
};

SizeBudget budget_for(int n) {
  if (n <= 8) return {12, 4000};
  if (n == 9) return {12, 3000};
  if (n == 10) return {12, 2000};
  if (n == 11) return {12, 1000};
  if (n == 12) return {12, 500};
  if (n == 13) return {12, 250};
  if (n == 14) return {12, 125};
  if (n == 15) return {10, 64};
  if (n == 16) return {10, 48};
  if (n == 17) return {8, 32};
  if (n <= 19) return {8, 16};
  return {6, 16};
}

}  // namespace

int main() {
  criterion("ideal-violation-constant-at-pi/4", [](std::string& detail) {
    double worst = 0.0;
    for (int n = 2; n <= 16; ++n) {
      for (MethodKind kind : {MethodKind::HMethod, MethodKind::MMethod}) {
        for (Layout layout : {Layout::Reference, Layout::Linear}) {
          const double v = exact_violation(kind, layout, n, kPi / 4);
          worst = std::max(worst, std::abs(v - 0.25));
        }
      }
    }
    detail = "N=2..16, both methods, both layouts: max |V - 1/4| = " +
             fmt(worst);
    return worst < 1e-12;
  });

  criterion("first-parity-marginal-closed-form", [](std::string& detail) {
    double worst = 0.0;
    for (int k = 0; k <= 8; ++k) {
      const double theta = k * kPi / 8.0;
      for (int n = 1; n <= 16; ++n) {
        const double expected = 0.5 + 0.5 * std::pow(std::cos(theta), n);
        worst = std::max(
            worst, std::abs(exact_first_parity_even(
                         MethodKind::HMethod, Layout::Reference, n, theta) -
                     expected));
        if (n >= 2) {
          worst = std::max(
              worst, std::abs(exact_first_parity_even(
                           MethodKind::MMethod, Layout::Reference, n, theta) -
                       expected));
          worst = std::max(
              worst, std::abs(exact_first_parity_even(
                           MethodKind::MMethod, Layout::Linear, n, theta) -
                       expected));
        }
      }
    }
    detail = "9 angles x N=1..16: max |P(even) - (1/2 + cos^N/2)| = " +
             fmt(worst);
    return worst < 1e-12;
  });

  criterion("sampled-angle-sweep-shape", [](std::string& detail) {
    const int grid = 16;  // theta_k = k pi/16
    std::vector<double> v(grid + 1, 0.0);
    for (int k = 0; k <= grid; ++k) {
      PointResult r = measure_point(MethodKind::HMethod, 6, k * kPi / grid, 1,
                                    4000, NoiseModel{});
      v[k] = r.v_mean;
    }
    auto argmax = [&](int lo, int hi) {
      int best = lo;
      for (int k = lo; k <= hi; ++k)
        if (v[k] > v[best]) best = k;
      return best;
    };
    const int left = argmax(0, grid / 2);
    const int right = argmax(grid / 2, grid);
    const double null0 = std::abs(v[0]);
    const double null8 = std::abs(v[grid / 2]);
    const double null16 = std::abs(v[grid]);

    PointResult odd = measure_point(MethodKind::HMethod, 5, kPi / 2, 1, 4000,
                                    NoiseModel{});
    const double odd_err = std::abs(odd.v_mean - 0.5);

    std::ostringstream out;
    out << "peaks at k=" << left << "," << right
        << " (k of pi/4 is 4, of 3pi/4 is 12); |V| at 0,pi/2,pi = "
        << fmt(null0) << "," << fmt(null8) << "," << fmt(null16)
        << "; N=5 |V(pi/2)-1/2| = " << fmt(odd_err);
    detail = out.str();
    const bool peaks_ok = std::abs(left - 4) <= 1 && std::abs(right - 12) <= 1;
    const bool nulls_ok = null0 < 0.02 && null8 < 0.02 && null16 < 0.02;
    return peaks_ok && nulls_ok && odd_err <= 0.03;
  });

  criterion("reference-vs-nearest-neighbour-equivalence",
            [](std::string& detail) {
    double worst = 0.0;
    bool ok = true;

    // Hadamard-mitigated form vs its restructured linear circuit at N=4,
    // on the recorded second parity, both branches.
    for (bool measured : {true, false}) {
      Circuit ref = build_reference(MethodKind::HMethod, 4, 0.7, measured);
      Circuit lnn = build_lnn(MethodKind::HMethod, 4, 0.7, measured);
      EquivalenceReport r = check_equivalence(
          ref, {kSecondParityBit}, lnn, {kSecondParityBit}, 1e-10);
      ok = ok && r.ok;
      worst = std::max(worst, r.max_abs_diff);
    }

    // Mid-measurement form vs the full rewrite pipeline at N=8, on the
    // whole register.
    {
      Circuit ref = build_reference(MethodKind::MMethod, 8, 0.7, true);
      Circuit piped = transpile_lnn(ref, MethodKind::MMethod);
      EquivalenceReport r = check_equivalence(ref, {0, 1}, piped, {0, 1},
                                              1e-10);
      ok = ok && r.ok;
      worst = std::max(worst, r.max_abs_diff);
    }

    // Pipeline output matches the direct generator structurally.
    bool structural = true;
    for (int n : {4, 8}) {
      for (bool measured : {true, false}) {
        Circuit ref = build_reference(MethodKind::HMethod, n, 0.7, measured);
        structural = structural &&
                     structurally_equal(transpile_lnn(ref, MethodKind::HMethod),
                                        build_lnn(MethodKind::HMethod, n, 0.7,
                                                  measured));
      }
      Circuit mref = build_reference(MethodKind::MMethod, n, 0.7, true);
      structural = structural &&
                   structurally_equal(transpile_lnn(mref, MethodKind::MMethod),
                                      build_lnn(MethodKind::MMethod, n, 0.7,
                                                true));
    }

    detail = "max distribution deviation = " + fmt(worst) +
             std::string(structural ? "; generator/pipeline structurally equal"
                                    : "; STRUCTURAL MISMATCH");
    return ok && structural;
  });

  criterion("nearest-neighbour-scaling-laws", [](std::string& detail) {
    bool cnots_ok = true, h_depth_ok = true, m_depth_ok = true;
    for (int n = 6; n <= 19; ++n) {
      const auto h0 = build_lnn(MethodKind::HMethod, n, 0.4, true);
      const auto h1 = build_lnn(MethodKind::HMethod, n + 1, 0.4, true);
      cnots_ok = cnots_ok && h1.count_cnots() - h0.count_cnots() == 3;
      h_depth_ok = h_depth_ok && h1.depth() - h0.depth() == 1;
      const auto m0 = build_lnn(MethodKind::MMethod, n, 0.4, true);
      const auto m1 = build_lnn(MethodKind::MMethod, n + 1, 0.4, true);
      cnots_ok = cnots_ok && m1.count_cnots() - m0.count_cnots() == 3;
    }
    for (int n = 6; n <= 18; ++n) {
      const auto m0 = build_lnn(MethodKind::MMethod, n, 0.4, true);
      const auto m2 = build_lnn(MethodKind::MMethod, n + 2, 0.4, true);
      m_depth_ok = m_depth_ok && m2.depth() - m0.depth() == 3;
    }
    detail = std::string("N=6..20: +3 CNOTs/qubit both methods ") +
             (cnots_ok ? "ok" : "VIOLATED") + "; depth +1/qubit (H) " +
             (h_depth_ok ? "ok" : "VIOLATED") + ", +3/2 qubits (M) " +
             (m_depth_ok ? "ok" : "VIOLATED");
    return cnots_ok && h_depth_ok && m_depth_ok;
  });

  criterion("noiseless-control-angle-null", [](std::string& detail) {
    double worst = 0.0;
    for (MethodKind kind : {MethodKind::HMethod, MethodKind::MMethod,
                            MethodKind::NaiveH, MethodKind::NaiveM}) {
      for (int n : {4, 8, 12}) {
        PointResult r = measure_point(kind, n, kPi, 20, 4000, NoiseModel{});
        const double sem = r.v_sigma / std::sqrt(20.0);
        const double excess = std::abs(r.v_mean) - 3.0 * sem;
        worst = std::max(worst, excess);
      }
    }
    detail = "all four variants, N in {4,8,12}, 20x4000: max(|V| - 3 sem) = " +
             fmt(worst);
    return worst <= 1e-12;
  });

  criterion("noisy-violation-decay-and-size-metric", [](std::string& detail) {
    const NoiseModel noise = NoiseModel::defaults();
    struct Scan {
      std::vector<MetricPoint> points;
      std::vector<double> sigmas;
      bool monotone = true;
    };
    auto scan_method = [&](MethodKind kind) {
      Scan scan;
      for (int n = 2; n <= 20; ++n) {
        const SizeBudget budget = budget_for(n);
        PointResult ndc =
            measure_point(kind, n, kPi / 4, budget.runs, budget.shots, noise);
        PointResult cd =
            measure_point(kind, n, kPi, budget.runs, budget.shots, noise);
        MetricPoint p;
        p.n = n;
        p.v_ndc = ndc.v_mean;
        p.sigma_ndc = ndc.v_sigma;
        p.v_cd = cd.v_mean;
        p.sigma_cd = cd.v_sigma;
        scan.points.push_back(p);
        // A per-run estimate is quantized in steps of 1/shots, so the
        // sample deviation carries a half-step resolution floor.
        scan.sigmas.push_back(std::max(ndc.v_sigma,
                                     0.5 / double(budget.shots)));
      }
      for (std::size_t i = 0; i + 1 < scan.points.size(); ++i) {
        const double slack = std::sqrt(scan.sigmas[i] * scan.sigmas[i] +
                                       scan.sigmas[i + 1] * scan.sigmas[i + 1]);
        if (scan.points[i + 1].v_ndc > scan.points[i].v_ndc + slack)
          scan.monotone = false;
      }
      return scan;
    };

    Scan h = scan_method(MethodKind::HMethod);
    Scan m = scan_method(MethodKind::MMethod);
    MetricReport h_metric = compute_n_ndc(h.points);
    MetricReport m_metric = compute_n_ndc(m.points);

    std::ostringstream out;
    out << "default noise, N=2..20: decay monotone within 1 sigma (h:"
        << (h.monotone ? "yes" : "NO") << ", m:" << (m.monotone ? "yes" : "NO")
        << "); largest passing size h=" << h_metric.n_ndc
        << " m=" << m_metric.n_ndc << (h_metric.saturated ? " (saturated!)" : "");
    detail = out.str();
    const bool finite = !h_metric.saturated && !m_metric.saturated &&
                        h_metric.n_ndc >= 2 && m_metric.n_ndc >= 2;
    return h.monotone && m.monotone && finite &&
           m_metric.n_ndc <= h_metric.n_ndc;
  });

  criterion("unmitigated-disturbance-separation", [](std::string& detail) {
    // Long readout (38x the 2q gate) and finite coherence time: skipping
    // the disabled work must show up as classical disturbance at the
    // control angle, while the schedule-matched variant stays clean.
    const NoiseModel noise = NoiseModel::defaults();
    double worst_margin = 1e300;
    std::ostringstream per_n;
    for (int n : {8, 10, 12}) {
      PointResult mitigated =
          measure_point(MethodKind::HMethod, n, kPi, 10, 1500, noise);
      PointResult naive =
          measure_point(MethodKind::NaiveH, n, kPi, 10, 1500, noise);
      const double gap =
          std::abs(naive.v_mean) - std::abs(mitigated.v_mean);
      const double sigma =
          std::sqrt(naive.v_sigma * naive.v_sigma +
                    mitigated.v_sigma * mitigated.v_sigma);
      worst_margin = std::min(worst_margin, gap - 3.0 * sigma);
      per_n << " N=" << n << ": gap=" << fmt(gap) << " (3s=" << fmt(3 * sigma)
            << ")";
    }
    detail = "|V_cd(naive-h)| - |V_cd(h)| vs 3 combined sigma:" + per_n.str();
    return worst_margin >= 0.0;
  });

  criterion("byte-identical-repeat-runs", [](std::string& detail) {
    BenchConfig config;
    config.methods = {MethodKind::HMethod, MethodKind::MMethod};
    config.layout = Layout::Linear;
    config.n_min = 2;
    config.n_max = 4;
    config.thetas = {kPi / 4, kPi};
    config.runs = 4;
    config.shots = 400;
    config.seed = kSeed;
    config.workers = 3;  // exercise the threaded path
    config.noise = NoiseModel::defaults();
    const std::string a = rows_to_csv(run_sweep(config));
    const std::string b = rows_to_csv(run_sweep(config));
    const std::string c = rows_to_csv(parse_csv_string(a));
    detail = "noisy 12-point sweep, 3 workers: " +
             std::to_string(a.size()) + " bytes, repeat identical: " +
             (a == b ? "yes" : "NO") + ", csv roundtrip: " +
             (a == c ? "yes" : "NO");
    return a == b && a == c;
  });

  criterion("sampling-matches-exact-distribution", [](std::string& detail) {
    Xoshiro256pp gen(kSeed);
    double min_p = 1.0;
    double worst_oracle = 0.0;
    for (int i = 0; i < 10; ++i) {
      Circuit c =
          i < 8 ? ndctest::random_measured_circuit(gen, 3 + (i & 1), 15)
                : [&] {
                    // Mid-circuit measurement with a classically
                    // controlled correction.
                    Circuit mid(2, 2);
                    mid.add(ry(0, 0.9 + i));
                    mid.add(h(1));
                    mid.add(cx(1, 0));
                    mid.add(measure(0, 0));
                    mid.add(cif(0, true, x(1)));
                    mid.add(ry(1, 0.4));
                    mid.add(measure(1, 1));
                    return mid;
                  }();
      Distribution exact = exact_distribution(c);
      if (i < 8) {
        Distribution oracle = ndctest::oracle_distribution(c);
        for (const auto& [key, p] : exact) {
          const auto it = oracle.find(key);
          worst_oracle = std::max(
              worst_oracle,
              std::abs(p - (it == oracle.end() ? 0.0 : it->second)));
        }
      }
      ShotOptions opts;
      opts.seed = kSeed + 100 + static_cast<std::uint64_t>(i);
      opts.shots = 100000;
      opts.workers = 1;
      min_p = std::min(min_p, ndctest::born_p_value(run_shots(c, opts), exact));
    }
    detail = "10 circuits x 1e5 shots: min chi-square p = " + fmt(min_p) +
             "; exact vs dense oracle max diff = " + fmt(worst_oracle);
    return min_p >= 0.001 && worst_oracle < 1e-10;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 10 checks passed\n");
    return 0;
  }
  std::printf("acceptance: %d of 10 checks FAILED\n", g_failures);
  return 1;
}
