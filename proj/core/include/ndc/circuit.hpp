// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ndc {

enum class GateKind {
  RotY,
  RotZ,
  Hadamard,
  PauliX,
  SqrtX,
  TGate,
  Cnot,
  Swap,
  Measure,
  Barrier,
  ClassicallyControlled,
};

const char* gate_name(GateKind kind);

// One circuit operation. Layout is flat so instructions stay copyable:
// a ClassicallyControlled instruction stores its inner gate in `inner`
// plus the usual wire/angle fields; inner gates are never themselves
// conditioned, never Measure and never Barrier.
struct Instruction {
  GateKind kind = GateKind::Barrier;
  GateKind inner = GateKind::Hadamard;  // meaningful only for cif
  int w0 = -1;                          // first wire (control for Cnot)
  int w1 = -1;                          // second wire (target for Cnot)
  double angle = 0.0;                   // RotY / RotZ
  int clbit = -1;   // Measure destination, or cif condition bit
  bool required_value = false;  // cif fires when clbit equals this

  bool is_two_wire() const;
  bool is_unitary() const;  // anything but Measure / Barrier
  bool touches(int wire) const;
  // The gate actually applied to the state (unwraps cif).
  GateKind effective_kind() const {
    return kind == GateKind::ClassicallyControlled ? inner : kind;
  }
  bool uses_angle() const {
    GateKind k = effective_kind();
    return k == GateKind::RotY || k == GateKind::RotZ;
  }

  bool operator==(const Instruction& other) const;
};

// Factory helpers; all wire/bit validation happens in Circuit::add.
Instruction ry(int w, double theta);
Instruction rz(int w, double phi);
Instruction h(int w);
Instruction x(int w);
Instruction sx(int w);
Instruction t(int w);
Instruction cx(int control, int target);
Instruction swap_gate(int a, int b);
Instruction measure(int w, int clbit);
Instruction barrier();
Instruction cif(int clbit, bool required_value, Instruction inner);

class Circuit {
 public:
  Circuit(int wires, int clbits);

  int wires() const { return wires_; }
  int clbits() const { return clbits_; }
  const std::vector<Instruction>& instructions() const { return ins_; }
  std::size_t size() const { return ins_.size(); }
  const Instruction& at(std::size_t i) const { return ins_.at(i); }

  // Appends after validating wire and classical-bit indices.
  void add(Instruction ins);
  void add_all(const std::vector<Instruction>& ins);

  // Greedy as-soon-as-possible depth. An instruction occupies its wires
  // (plus its classical bit for Measure and cif) for one slot; barriers
  // contribute no slot but force everything after them to start on a
  // fresh slot.
  int depth() const;

  int count_cnots() const;
  // Nearest-neighbour CNOT-equivalents: adjacent Cnot counts 1, adjacent
  // Swap counts 3 (its CNOT decomposition). Non-adjacent two-wire gates
  // are not counted here; see cnot_distance_histogram.
  int count_lnn_cnots() const;
  // Wire distance |w0-w1| -> number of Cnot instructions at that distance.
  std::map<int, int> cnot_distance_histogram() const;

  bool is_lnn() const;
  // Throws ValidationError naming the first offending instruction.
  void validate_lnn() const;

  bool operator==(const Circuit& other) const;

 private:
  void validate(const Instruction& ins) const;

  int wires_;
  int clbits_;
  std::vector<Instruction> ins_;
};

}  // namespace ndc
