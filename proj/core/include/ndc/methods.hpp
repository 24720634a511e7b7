// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndc/circuit.hpp"

namespace ndc {

// Sequential-parity test circuits. Every variant prepares n data qubits
// with ry(theta), accumulates their parity onto a first ancilla, then
// rotates again and accumulates parity onto a second ancilla which is
// read out. The `measured` flag selects the branch: whether the first
// parity is actually measured or the first measurement is disabled.
//
//  - HMethod: the first measurement is disabled by a Hadamard on the
//    first ancilla before the parity fan-in (a CNOT into |+> does
//    nothing), so both branches run the same schedule and differ by a
//    single gate. In the linear layout the first readout is elided
//    altogether; only the second parity is recorded.
//  - MMethod: a genuine mid-circuit measurement, uncomputed afterwards.
//    The unmeasured branch measures a dedicated idle wire instead, so
//    both branches stall for the full measurement duration.
//  - NaiveH / NaiveM: same measured branch, but the unmeasured branch
//    skips the disabled work (NaiveH) or skips the idle-wire measurement
//    (NaiveM), so the two branches run different schedules.
enum class MethodKind { HMethod, MMethod, NaiveH, NaiveM };

enum class Layout { Reference, Linear };

const char* method_name(MethodKind kind);
std::optional<MethodKind> method_from_name(const std::string& name);
const char* layout_name(Layout layout);
std::optional<Layout> layout_from_name(const std::string& name);

// Classical register convention, identical across variants and layouts.
inline constexpr int kFirstParityBit = 0;
inline constexpr int kSecondParityBit = 1;
inline constexpr int kProtocolClbits = 2;
// The parity fan-in XORs the data bits onto a fresh ancilla, so readout
// value 0 flags even parity.
inline constexpr int kEvenParityValue = 0;
// Readout value of the second parity whose probability difference defines
// the violation. Normalization makes the two choices exact negatives of
// each other; reading the odd outcome is the convention under which the
// ideal violation (1 - cos^n(2 theta))/4 is non-negative.
inline constexpr int kViolationReadoutValue = 1;

struct MethodShape {
  int wires = 0;
  std::vector<int> data;   // wires carrying the n data qubits
  int first_ancilla = -1;
  int second_ancilla = -1;
  int idle_wire = -1;      // measured instead of the ancilla when the
                           // branch is unmeasured (MMethod family)
};

// Throws ValidationError when n is below the method's minimum size
// (the mid-measurement family needs n >= 2, the rest n >= 1).
void require_n(MethodKind kind, int n);

MethodShape method_shape(MethodKind kind, Layout layout, int n);

Circuit build_circuit(MethodKind kind, Layout layout, int n, double theta,
                      bool measured);

inline Circuit build_reference(MethodKind kind, int n, double theta,
                               bool measured) {
  return build_circuit(kind, Layout::Reference, n, theta, measured);
}
inline Circuit build_lnn(MethodKind kind, int n, double theta,
                         bool measured) {
  return build_circuit(kind, Layout::Linear, n, theta, measured);
}

}  // namespace ndc
