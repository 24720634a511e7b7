// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/equivalence.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "ndc/errors.hpp"
#include "ndc/passes.hpp"
#include "ndc/simulator.hpp"

namespace ndc {

EquivalenceReport check_equivalence(const Circuit& a,
                                    const std::vector<int>& clbits_a,
                                    const Circuit& b,
                                    const std::vector<int>& clbits_b,
                                    double tolerance) {
  if (clbits_a.size() != clbits_b.size())
    throw ValidationError(
        "check_equivalence: bit selections must have equal length");
  const Distribution da = marginalize(exact_distribution(a), a.clbits(),
                                      clbits_a);
  const Distribution db = marginalize(exact_distribution(b), b.clbits(),
                                      clbits_b);
  std::set<std::string> keys;
  for (const auto& [k, _] : da) keys.insert(k);
  for (const auto& [k, _] : db) keys.insert(k);

  EquivalenceReport report;
  std::string worst;
  for (const auto& key : keys) {
    const auto ia = da.find(key);
    const auto ib = db.find(key);
    const double pa = ia == da.end() ? 0.0 : ia->second;
    const double pb = ib == db.end() ? 0.0 : ib->second;
    const double diff = std::abs(pa - pb);
    if (diff > report.max_abs_diff) {
      report.max_abs_diff = diff;
      worst = key;
    }
  }
  report.ok = report.max_abs_diff <= tolerance;
  if (!report.ok) {
    std::ostringstream os;
    os << "outcome " << worst << " differs by " << report.max_abs_diff
       << " (tolerance " << tolerance << ")";
    report.diagnostic = os.str();
  }
  return report;
}

EquivalenceReport check_equivalence(const Circuit& a, const Circuit& b,
                                    const std::vector<int>& clbits,
                                    double tolerance) {
  return check_equivalence(a, clbits, b, clbits, tolerance);
}

bool structurally_equal(const Circuit& a, const Circuit& b) {
  if (a.wires() != b.wires() || a.clbits() != b.clbits()) return false;
  const Circuit na = normalize_commuting_order(a);
  const Circuit nb = normalize_commuting_order(b);
  return na.instructions() == nb.instructions();
}

}  // namespace ndc
