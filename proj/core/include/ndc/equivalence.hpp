// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors
//
// Distribution-level and structural equivalence checks between circuits.

#pragma once

#include <string>
#include <vector>

#include "ndc/circuit.hpp"

namespace ndc {

struct EquivalenceReport {
  bool ok = false;
  // Largest absolute probability difference over the compared outcomes.
  double max_abs_diff = 0.0;
  // Human-readable note naming the worst outcome when the check fails.
  std::string diagnostic;
};

// Compares the exact noiseless outcome distributions of two circuits after
// marginalizing each onto the listed classical bits (index i of the list
// becomes bit i of the compared keys). The circuits may differ in wire
// count, layout, and classical register width.
EquivalenceReport check_equivalence(const Circuit& a,
                                    const std::vector<int>& clbits_a,
                                    const Circuit& b,
                                    const std::vector<int>& clbits_b,
                                    double tolerance = 1e-10);

// Shorthand for comparing on the same classical bits on both sides.
EquivalenceReport check_equivalence(const Circuit& a, const Circuit& b,
                                    const std::vector<int>& clbits,
                                    double tolerance = 1e-10);

// True when both circuits contain exactly the same instructions up to
// reordering of provably commuting neighbours (barriers are ignored).
bool structurally_equal(const Circuit& a, const Circuit& b);

}  // namespace ndc
