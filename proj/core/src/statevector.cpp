// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/statevector.hpp"

#include <cmath>

#include "ndc/errors.hpp"

namespace ndc {
namespace {

// Expands a compact index by inserting a zero bit at position w.
inline std::size_t insert_bit(std::size_t k, int w) {
  const std::size_t low = k & ((std::size_t{1} << w) - 1);
  return ((k >> w) << (w + 1)) | low;
}

}  // namespace

StateVector::StateVector(int wires) : wires_(wires) {
  if (wires < 1) throw ValidationError("state vector needs at least one wire");
  if (wires > kMaxWires)
    throw ResourceLimitError("state vector capped at " +
                             std::to_string(kMaxWires) + " wires, got " +
                             std::to_string(wires));
  amps_.assign(std::size_t{1} << wires, cplx{0.0, 0.0});
  amps_[0] = cplx{1.0, 0.0};
}

void StateVector::reset() {
  std::fill(amps_.begin(), amps_.end(), cplx{0.0, 0.0});
  amps_[0] = cplx{1.0, 0.0};
}

void StateVector::set_basis(std::size_t idx, cplx phase) {
  if (idx >= amps_.size())
    throw ValidationError("basis index out of range");
  std::fill(amps_.begin(), amps_.end(), cplx{0.0, 0.0});
  amps_[idx] = phase;
}

void StateVector::apply_1q(int w, const cplx m[4]) {
  const std::size_t stride = std::size_t{1} << w;
  const std::size_t half = amps_.size() >> 1;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_bit(k, w);
    const std::size_t i1 = i0 | stride;
    const cplx a0 = amps_[i0];
    const cplx a1 = amps_[i1];
    amps_[i0] = m[0] * a0 + m[1] * a1;
    amps_[i1] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply_diag(int w, cplx d0, cplx d1) {
  const std::size_t stride = std::size_t{1} << w;
  const std::size_t half = amps_.size() >> 1;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_bit(k, w);
    amps_[i0] *= d0;
    amps_[i0 | stride] *= d1;
  }
}

void StateVector::apply_ry(int w, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const std::size_t stride = std::size_t{1} << w;
  const std::size_t half = amps_.size() >> 1;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_bit(k, w);
    const std::size_t i1 = i0 | stride;
    const cplx a0 = amps_[i0];
    const cplx a1 = amps_[i1];
    amps_[i0] = c * a0 - s * a1;
    amps_[i1] = s * a0 + c * a1;
  }
}

void StateVector::apply_h(int w) {
  constexpr double inv_sqrt2 = 0.70710678118654752;
  const std::size_t stride = std::size_t{1} << w;
  const std::size_t half = amps_.size() >> 1;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_bit(k, w);
    const std::size_t i1 = i0 | stride;
    const cplx a0 = amps_[i0];
    const cplx a1 = amps_[i1];
    amps_[i0] = (a0 + a1) * inv_sqrt2;
    amps_[i1] = (a0 - a1) * inv_sqrt2;
  }
}

void StateVector::apply_x(int w) {
  const std::size_t stride = std::size_t{1} << w;
  const std::size_t half = amps_.size() >> 1;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_bit(k, w);
    std::swap(amps_[i0], amps_[i0 | stride]);
  }
}

void StateVector::apply_cnot(int control, int target) {
  const std::size_t cm = std::size_t{1} << control;
  const std::size_t tm = std::size_t{1} << target;
  const int lo = control < target ? control : target;
  const int hi = control < target ? target : control;
  const std::size_t quarter = amps_.size() >> 2;
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t i = insert_bit(insert_bit(k, lo), hi);
    std::swap(amps_[i | cm], amps_[i | cm | tm]);
  }
}

void StateVector::apply_swap(int a, int b) {
  const std::size_t am = std::size_t{1} << a;
  const std::size_t bm = std::size_t{1} << b;
  const int lo = a < b ? a : b;
  const int hi = a < b ? b : a;
  const std::size_t quarter = amps_.size() >> 2;
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t i = insert_bit(insert_bit(k, lo), hi);
    std::swap(amps_[i | am], amps_[i | bm]);
  }
}

double StateVector::prob_one(int w) const {
  const std::size_t stride = std::size_t{1} << w;
  const std::size_t half = amps_.size() >> 1;
  double p = 0.0;
  for (std::size_t k = 0; k < half; ++k) {
    const cplx a = amps_[insert_bit(k, w) | stride];
    p += a.real() * a.real() + a.imag() * a.imag();
  }
  return p;
}

void StateVector::project(int w, int outcome, double prob) {
  if (prob <= 0.0)
    throw ValidationError("projection onto a zero-probability outcome");
  const double scale = 1.0 / std::sqrt(prob);
  const std::size_t stride = std::size_t{1} << w;
  const std::size_t half = amps_.size() >> 1;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_bit(k, w);
    const std::size_t i1 = i0 | stride;
    if (outcome == 0) {
      amps_[i0] *= scale;
      amps_[i1] = cplx{0.0, 0.0};
    } else {
      amps_[i0] = cplx{0.0, 0.0};
      amps_[i1] *= scale;
    }
  }
}

void StateVector::amp_damp_jump(int w, double pop_one) {
  if (pop_one <= 0.0)
    throw ValidationError("damping jump with zero excited population");
  const double scale = 1.0 / std::sqrt(pop_one);
  const std::size_t stride = std::size_t{1} << w;
  const std::size_t half = amps_.size() >> 1;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_bit(k, w);
    const std::size_t i1 = i0 | stride;
    amps_[i0] = amps_[i1] * scale;
    amps_[i1] = cplx{0.0, 0.0};
  }
}

void StateVector::amp_damp_nojump(int w, double p, double pop_one) {
  const double keep = 1.0 - p * pop_one;
  if (keep <= 0.0)
    throw ValidationError("damping no-jump branch has zero probability");
  const double scale = 1.0 / std::sqrt(keep);
  apply_diag(w, cplx{scale, 0.0}, cplx{scale * std::sqrt(1.0 - p), 0.0});
}

double StateVector::norm_sq() const {
  double n = 0.0;
  for (const cplx& a : amps_)
    n += a.real() * a.real() + a.imag() * a.imag();
  return n;
}

}  // namespace ndc
