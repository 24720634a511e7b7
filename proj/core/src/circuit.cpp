// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "ndc/errors.hpp"

namespace ndc {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RotY: return "ry";
    case GateKind::RotZ: return "rz";
    case GateKind::Hadamard: return "h";
    case GateKind::PauliX: return "x";
    case GateKind::SqrtX: return "sx";
    case GateKind::TGate: return "t";
    case GateKind::Cnot: return "cx";
    case GateKind::Swap: return "swap";
    case GateKind::Measure: return "meas";
    case GateKind::Barrier: return "barrier";
    case GateKind::ClassicallyControlled: return "cif";
  }
  return "?";
}

bool Instruction::is_two_wire() const {
  GateKind k = effective_kind();
  return k == GateKind::Cnot || k == GateKind::Swap;
}

bool Instruction::is_unitary() const {
  return kind != GateKind::Measure && kind != GateKind::Barrier;
}

bool Instruction::touches(int wire) const {
  if (kind == GateKind::Barrier) return true;
  return w0 == wire || (is_two_wire() && w1 == wire);
}

bool Instruction::operator==(const Instruction& other) const {
  if (kind != other.kind || w0 != other.w0 || clbit != other.clbit)
    return false;
  if (is_two_wire() && w1 != other.w1) return false;
  if (uses_angle() && angle != other.angle) return false;
  if (kind == GateKind::ClassicallyControlled &&
      (inner != other.inner || required_value != other.required_value))
    return false;
  return true;
}

Instruction ry(int w, double theta) {
  Instruction ins;
  ins.kind = GateKind::RotY;
  ins.w0 = w;
  ins.angle = theta;
  return ins;
}

Instruction rz(int w, double phi) {
  Instruction ins;
  ins.kind = GateKind::RotZ;
  ins.w0 = w;
  ins.angle = phi;
  return ins;
}

Instruction h(int w) {
  Instruction ins;
  ins.kind = GateKind::Hadamard;
  ins.w0 = w;
  return ins;
}

Instruction x(int w) {
  Instruction ins;
  ins.kind = GateKind::PauliX;
  ins.w0 = w;
  return ins;
}

Instruction sx(int w) {
  Instruction ins;
  ins.kind = GateKind::SqrtX;
  ins.w0 = w;
  return ins;
}

Instruction t(int w) {
  Instruction ins;
  ins.kind = GateKind::TGate;
  ins.w0 = w;
  return ins;
}

Instruction cx(int control, int target) {
  Instruction ins;
  ins.kind = GateKind::Cnot;
  ins.w0 = control;
  ins.w1 = target;
  return ins;
}

Instruction swap_gate(int a, int b) {
  Instruction ins;
  ins.kind = GateKind::Swap;
  ins.w0 = a;
  ins.w1 = b;
  return ins;
}

Instruction measure(int w, int clbit) {
  Instruction ins;
  ins.kind = GateKind::Measure;
  ins.w0 = w;
  ins.clbit = clbit;
  return ins;
}

Instruction barrier() {
  Instruction ins;
  ins.kind = GateKind::Barrier;
  return ins;
}

Instruction cif(int clbit, bool required_value, Instruction inner) {
  if (inner.kind == GateKind::ClassicallyControlled ||
      inner.kind == GateKind::Measure || inner.kind == GateKind::Barrier) {
    throw ValidationError("cif inner gate must be a plain unitary, got " +
                          std::string(gate_name(inner.kind)));
  }
  Instruction ins = inner;
  ins.kind = GateKind::ClassicallyControlled;
  ins.inner = inner.kind;
  ins.clbit = clbit;
  ins.required_value = required_value;
  return ins;
}

Circuit::Circuit(int wires, int clbits) : wires_(wires), clbits_(clbits) {
  if (wires < 1) throw ValidationError("circuit needs at least one wire");
  if (clbits < 0) throw ValidationError("negative classical bit count");
}

void Circuit::validate(const Instruction& ins) const {
  auto check_wire = [&](int w) {
    if (w < 0 || w >= wires_) {
      std::ostringstream msg;
      msg << gate_name(ins.kind) << ": wire " << w << " out of range [0, "
          << wires_ << ")";
      throw ValidationError(msg.str());
    }
  };
  auto check_bit = [&](int b) {
    if (b < 0 || b >= clbits_) {
      std::ostringstream msg;
      msg << gate_name(ins.kind) << ": classical bit " << b
          << " out of range [0, " << clbits_ << ")";
      throw ValidationError(msg.str());
    }
  };
  if (ins.kind == GateKind::Barrier) return;
  check_wire(ins.w0);
  if (ins.is_two_wire()) {
    check_wire(ins.w1);
    if (ins.w0 == ins.w1) {
      throw ValidationError(std::string(gate_name(ins.kind)) +
                            ": the two wires must differ");
    }
  }
  if (ins.kind == GateKind::Measure ||
      ins.kind == GateKind::ClassicallyControlled) {
    check_bit(ins.clbit);
  }
  if (ins.uses_angle() && !std::isfinite(ins.angle)) {
    throw ValidationError(std::string(gate_name(ins.kind)) +
                          ": angle must be finite");
  }
}

void Circuit::add(Instruction ins) {
  validate(ins);
  ins_.push_back(ins);
}

void Circuit::add_all(const std::vector<Instruction>& ins) {
  for (const auto& i : ins) add(i);
}

int Circuit::depth() const {
  std::vector<int> wire_free(static_cast<std::size_t>(wires_), 0);
  std::vector<int> bit_free(static_cast<std::size_t>(clbits_), 0);
  int depth = 0;
  for (const auto& ins : ins_) {
    if (ins.kind == GateKind::Barrier) {
      int fence = 0;
      for (int f : wire_free) fence = std::max(fence, f);
      for (auto& f : wire_free) f = fence;
      continue;
    }
    int start = wire_free[static_cast<std::size_t>(ins.w0)];
    if (ins.is_two_wire())
      start = std::max(start, wire_free[static_cast<std::size_t>(ins.w1)]);
    if (ins.clbit >= 0)
      start = std::max(start, bit_free[static_cast<std::size_t>(ins.clbit)]);
    const int end = start + 1;
    wire_free[static_cast<std::size_t>(ins.w0)] = end;
    if (ins.is_two_wire())
      wire_free[static_cast<std::size_t>(ins.w1)] = end;
    if (ins.clbit >= 0) bit_free[static_cast<std::size_t>(ins.clbit)] = end;
    depth = std::max(depth, end);
  }
  return depth;
}

int Circuit::count_cnots() const {
  int n = 0;
  for (const auto& ins : ins_)
    if (ins.effective_kind() == GateKind::Cnot) ++n;
  return n;
}

int Circuit::count_lnn_cnots() const {
  int n = 0;
  for (const auto& ins : ins_) {
    if (!ins.is_two_wire()) continue;
    if (std::abs(ins.w0 - ins.w1) != 1) continue;
    n += (ins.effective_kind() == GateKind::Swap) ? 3 : 1;
  }
  return n;
}

std::map<int, int> Circuit::cnot_distance_histogram() const {
  std::map<int, int> hist;
  for (const auto& ins : ins_)
    if (ins.effective_kind() == GateKind::Cnot)
      ++hist[std::abs(ins.w0 - ins.w1)];
  return hist;
}

bool Circuit::is_lnn() const {
  for (const auto& ins : ins_)
    if (ins.is_two_wire() && std::abs(ins.w0 - ins.w1) != 1) return false;
  return true;
}

void Circuit::validate_lnn() const {
  for (std::size_t i = 0; i < ins_.size(); ++i) {
    const auto& ins = ins_[i];
    if (ins.is_two_wire() && std::abs(ins.w0 - ins.w1) != 1) {
      std::ostringstream msg;
      msg << "instruction " << i << " (" << gate_name(ins.kind) << " "
          << ins.w0 << " " << ins.w1 << ") spans non-adjacent wires";
      throw ValidationError(msg.str());
    }
  }
}

bool Circuit::operator==(const Circuit& other) const {
  return wires_ == other.wires_ && clbits_ == other.clbits_ &&
         ins_ == other.ins_;
}

}  // namespace ndc
