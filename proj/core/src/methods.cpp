// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/methods.hpp"

#include <algorithm>

#include "ndc/errors.hpp"

namespace ndc {

void require_n(MethodKind kind, int n) {
  const int least =
      (kind == MethodKind::MMethod || kind == MethodKind::NaiveM) ? 2 : 1;
  if (n < least)
    throw ValidationError(std::string(method_name(kind)) +
                          " requires at least " + std::to_string(least) +
                          " data qubits, got " + std::to_string(n));
}

namespace {

// --- reference (all-to-all) builders ---------------------------------

Circuit reference_h(int n, double theta, bool measured, bool naive) {
  const int a1 = 0;
  const int a2 = n + 1;
  Circuit c(n + 2, kProtocolClbits);
  if (!measured && naive) {
    // Without mitigation the disabled branch runs only the second half,
    // with both rotation layers merged.
    for (int q = 1; q <= n; ++q) c.add(ry(q, 2.0 * theta));
    for (int q = 1; q <= n; ++q) c.add(cx(q, a2));
    c.add(measure(a2, kSecondParityBit));
    return c;
  }
  if (!measured) c.add(h(a1));  // CNOTs into |+> are inert
  for (int q = 1; q <= n; ++q) c.add(ry(q, theta));
  for (int q = 1; q <= n; ++q) c.add(cx(q, a1));
  c.add(measure(a1, kFirstParityBit));
  c.add(barrier());
  for (int q = 1; q <= n; ++q) c.add(ry(q, theta));
  for (int q = 1; q <= n; ++q) c.add(cx(q, a2));
  c.add(measure(a2, kSecondParityBit));
  return c;
}

Circuit reference_m(int n, double theta, bool measured, bool naive) {
  const int a1 = 0;
  const int a2 = n + 1;
  const int idle = n + 2;
  Circuit c(n + 3, kProtocolClbits);
  for (int q = 1; q <= n; ++q) c.add(ry(q, theta));
  for (int q = 1; q <= n; ++q) c.add(cx(q, a1));
  c.add(barrier());
  if (measured) {
    c.add(measure(a1, kFirstParityBit));
  } else if (!naive) {
    // Measure an idle wire so the branch stalls for the same duration.
    c.add(measure(idle, kFirstParityBit));
  }
  c.add(barrier());
  for (int q = n; q >= 1; --q) c.add(cx(q, a1));
  for (int q = 1; q <= n; ++q) c.add(ry(q, theta));
  for (int q = 1; q <= n; ++q) c.add(cx(q, a2));
  c.add(measure(a2, kSecondParityBit));
  return c;
}

// --- nearest-neighbour generators -------------------------------------

// Slot-scheduled emission: instructions are appended slot by slot (then
// by wire) so the textual form reads like the scheduled circuit.
struct SlotEmitter {
  std::vector<std::tuple<int, int, Instruction>> items;

  void add(int slot, const Instruction& ins) {
    const int wire_key = ins.is_two_wire() ? std::min(ins.w0, ins.w1) : ins.w0;
    items.emplace_back(slot, wire_key, ins);
  }

  void flush(Circuit& c) {
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& lhs, const auto& rhs) {
                       if (std::get<0>(lhs) != std::get<0>(rhs))
                         return std::get<0>(lhs) < std::get<0>(rhs);
                       return std::get<1>(lhs) < std::get<1>(rhs);
                     });
    for (const auto& [slot, wire, ins] : items) c.add(ins);
  }
};

// Restructured parity ladder: one CNOT per slot along the line. The
// first ancilla sits on wire 0 and the second parity accumulates onto
// wire n+1; only the second ancilla is read out, the first readout being
// redundant in this form. Depth n+9, 3n+2 nearest-neighbour CNOTs.
Circuit linear_h(int n, double theta, bool measured) {
  const int a2 = n + 1;
  Circuit c(n + 2, kProtocolClbits);
  SlotEmitter em;
  if (!measured) em.add(0, h(0));
  for (int q = 1; q <= n; ++q) em.add(0, ry(q, theta));
  for (int i = 1; i <= n; ++i) em.add(i, cx(i - 1, i));
  for (int i = 0; i <= n - 1; ++i) em.add(i + 3, cx(i + 1, i));
  for (int w = 0; w <= n - 1; ++w) em.add(w + 4, ry(w, theta));
  for (int i = 1; i <= n - 1; ++i) em.add(i + 5, cx(i - 1, i));
  em.add(n + 5, cx(n, n - 1));
  em.add(n + 6, cx(n - 1, n));
  em.add(n + 7, cx(n, a2));
  em.add(n + 8, measure(a2, kSecondParityBit));
  em.flush(c);
  return c;
}

// Chain-parity fallback for the unmitigated disabled branch.
Circuit linear_naive_h_unmeasured(int n, double theta) {
  Circuit c(n + 2, kProtocolClbits);
  for (int q = 1; q <= n; ++q) c.add(ry(q, 2.0 * theta));
  for (int q = 1; q <= n; ++q) c.add(cx(q, q + 1));
  c.add(measure(n + 1, kSecondParityBit));
  return c;
}

// Split layout: the ancilla pair sits mid-line between the two halves of
// the data register. Three CNOTs hop over an ancilla (distance 2); all
// others are nearest-neighbour. 3n CNOTs total.
Circuit linear_m(int n, double theta, bool measured, bool naive) {
  const int half = (n + 1) / 2;
  const int a1 = half;
  const int a2 = half + 1;
  const int idle = n + 2;
  Circuit c(n + 3, kProtocolClbits);
  auto data_wires = [&] {
    std::vector<int> w;
    for (int q = 0; q < half; ++q) w.push_back(q);
    for (int q = half + 2; q <= n + 1; ++q) w.push_back(q);
    return w;
  }();

  for (int w : data_wires) c.add(ry(w, theta));
  // First parity fan-in.
  for (int i = 0; i < half; ++i) c.add(cx(i, i + 1));
  for (int j = n + 1; j >= half + 3; --j) c.add(cx(j, j - 1));
  c.add(cx(half + 2, a1));
  c.add(barrier());
  if (measured) {
    c.add(measure(a1, kFirstParityBit));
  } else if (!naive) {
    c.add(measure(idle, kFirstParityBit));
  }
  c.add(barrier());
  // Uncompute, reversed.
  c.add(cx(half + 2, a1));
  for (int i = half - 1; i >= 0; --i) c.add(cx(i, i + 1));
  for (int j = half + 3; j <= n + 1; ++j) c.add(cx(j, j - 1));
  for (int w : data_wires) c.add(ry(w, theta));
  // Second parity fan-in onto the other ancilla.
  for (int i = 0; i < half - 1; ++i) c.add(cx(i, i + 1));
  c.add(cx(half - 1, a2));
  for (int j = n + 1; j >= half + 3; --j) c.add(cx(j, j - 1));
  c.add(cx(half + 2, a2));
  c.add(measure(a2, kSecondParityBit));
  return c;
}

}  // namespace

const char* method_name(MethodKind kind) {
  switch (kind) {
    case MethodKind::HMethod: return "h";
    case MethodKind::MMethod: return "m";
    case MethodKind::NaiveH: return "naive-h";
    case MethodKind::NaiveM: return "naive-m";
  }
  return "?";
}

std::optional<MethodKind> method_from_name(const std::string& name) {
  if (name == "h") return MethodKind::HMethod;
  if (name == "m") return MethodKind::MMethod;
  if (name == "naive-h") return MethodKind::NaiveH;
  if (name == "naive-m") return MethodKind::NaiveM;
  return std::nullopt;
}

const char* layout_name(Layout layout) {
  return layout == Layout::Reference ? "reference" : "linear";
}

std::optional<Layout> layout_from_name(const std::string& name) {
  if (name == "reference") return Layout::Reference;
  if (name == "linear") return Layout::Linear;
  return std::nullopt;
}

MethodShape method_shape(MethodKind kind, Layout layout, int n) {
  require_n(kind, n);
  MethodShape shape;
  const bool m_family =
      kind == MethodKind::MMethod || kind == MethodKind::NaiveM;
  if (m_family && layout == Layout::Linear) {
    const int half = (n + 1) / 2;
    shape.wires = n + 3;
    for (int q = 0; q < half; ++q) shape.data.push_back(q);
    for (int q = half + 2; q <= n + 1; ++q) shape.data.push_back(q);
    shape.first_ancilla = half;
    shape.second_ancilla = half + 1;
    shape.idle_wire = n + 2;
    return shape;
  }
  shape.wires = m_family ? n + 3 : n + 2;
  for (int q = 1; q <= n; ++q) shape.data.push_back(q);
  shape.first_ancilla = 0;
  shape.second_ancilla = n + 1;
  shape.idle_wire = m_family ? n + 2 : -1;
  return shape;
}

Circuit build_circuit(MethodKind kind, Layout layout, int n, double theta,
                      bool measured) {
  require_n(kind, n);
  switch (kind) {
    case MethodKind::HMethod:
      return layout == Layout::Reference
                 ? reference_h(n, theta, measured, false)
                 : linear_h(n, theta, measured);
    case MethodKind::NaiveH:
      if (measured) {
        return layout == Layout::Reference
                   ? reference_h(n, theta, true, true)
                   : linear_h(n, theta, true);
      }
      return layout == Layout::Reference
                 ? reference_h(n, theta, false, true)
                 : linear_naive_h_unmeasured(n, theta);
    case MethodKind::MMethod:
      return layout == Layout::Reference
                 ? reference_m(n, theta, measured, false)
                 : linear_m(n, theta, measured, false);
    case MethodKind::NaiveM:
      return layout == Layout::Reference
                 ? reference_m(n, theta, measured, true)
                 : linear_m(n, theta, measured, true);
  }
  throw Error("unreachable method kind");
}

}  // namespace ndc
