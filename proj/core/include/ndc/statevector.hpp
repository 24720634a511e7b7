// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ndc {

using cplx = std::complex<double>;

// Dense state vector over `wires` qubits, little endian: wire 0 is the
// least significant bit of the amplitude index. Hard-capped at 26 wires
// (1 GiB of amplitudes) to fail fast instead of thrashing.
class StateVector {
 public:
  static constexpr int kMaxWires = 26;

  explicit StateVector(int wires);

  int wires() const { return wires_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<cplx>& amps() const { return amps_; }
  cplx amp(std::size_t i) const { return amps_[i]; }

  void reset();  // back to |0...0>
  // Overwrite with the basis state `idx` carrying a phase factor.
  void set_basis(std::size_t idx, cplx phase);

  // Row-major 2x2 matrix {m00, m01, m10, m11}.
  void apply_1q(int w, const cplx m[4]);
  void apply_diag(int w, cplx d0, cplx d1);
  void apply_ry(int w, double theta);
  void apply_h(int w);
  void apply_x(int w);
  void apply_cnot(int control, int target);
  void apply_swap(int a, int b);

  double prob_one(int w) const;
  // Collapse wire w to `outcome`, scaling by 1/sqrt(prob). `prob` must be
  // the probability of that outcome as previously computed.
  void project(int w, int outcome, double prob);
  // Amplitude-damping jump: |1> population on w relaxes to |0>.
  // `pop_one` is prob_one(w) before the jump.
  void amp_damp_jump(int w, double pop_one);
  // Amplitude-damping no-jump back-action with strength p, given the
  // pre-channel |1> population.
  void amp_damp_nojump(int w, double p, double pop_one);

  double norm_sq() const;

  bool operator==(const StateVector& other) const = default;

 private:
  int wires_;
  std::vector<cplx> amps_;
};

}  // namespace ndc
