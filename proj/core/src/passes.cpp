// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/passes.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>

#include "ndc/errors.hpp"

namespace ndc {
namespace {

std::vector<int> instruction_wires(const Instruction& ins) {
  if (ins.kind == GateKind::Barrier) return {};
  if (ins.is_two_wire()) return {ins.w0, ins.w1};
  return {ins.w0};
}

bool touches_any(const Instruction& ins, int a, int b) {
  if (ins.kind == GateKind::Barrier) return false;
  return ins.touches(a) || ins.touches(b);
}

// Transparent for cancellation scans: barriers always, anything else
// only when it avoids both wires.
bool transparent_between(const Instruction& ins, int a, int b) {
  if (ins.kind == GateKind::Barrier) return true;
  return !touches_any(ins, a, b);
}

Instruction remap_wires(Instruction ins, const std::vector<int>& perm) {
  if (ins.kind == GateKind::Barrier) return ins;
  ins.w0 = perm[static_cast<std::size_t>(ins.w0)];
  if (ins.is_two_wire()) ins.w1 = perm[static_cast<std::size_t>(ins.w1)];
  return ins;
}

Instruction swap_pair_in(Instruction ins, int a, int b) {
  auto flip = [&](int w) { return w == a ? b : (w == b ? a : w); };
  if (ins.kind == GateKind::Barrier) return ins;
  ins.w0 = flip(ins.w0);
  if (ins.is_two_wire()) ins.w1 = flip(ins.w1);
  return ins;
}

Circuit rebuild(const Circuit& base, std::vector<Instruction> ins) {
  Circuit out(base.wires(), base.clbits());
  for (auto& i : ins) out.add(i);
  return out;
}

bool is_diag_1q(const Instruction& ins) {
  const GateKind k = ins.kind;  // cif is conservative, never diagonal here
  return k == GateKind::RotZ || k == GateKind::TGate;
}

}  // namespace

Circuit commute_measurement_to_end(const Circuit& c) {
  const auto& ins = c.instructions();
  std::vector<Instruction> body;
  std::vector<Instruction> tail;
  for (std::size_t i = 0; i < ins.size(); ++i) {
    const Instruction& m = ins[i];
    if (m.kind != GateKind::Measure) {
      body.push_back(m);
      continue;
    }
    bool movable = true;
    std::string why;
    for (std::size_t j = i + 1; j < ins.size() && movable; ++j) {
      const Instruction& later = ins[j];
      if (later.kind == GateKind::Barrier) continue;
      if (later.touches(m.w0)) {
        movable = false;
        why = "wire " + std::to_string(m.w0) + " is used at instruction " +
              std::to_string(j);
      } else if (later.clbit == m.clbit &&
                 (later.kind == GateKind::Measure ||
                  later.kind == GateKind::ClassicallyControlled)) {
        movable = false;
        why = "classical bit " + std::to_string(m.clbit) +
              " is used at instruction " + std::to_string(j);
      }
    }
    if (!movable)
      throw PassError("commute_measurement_to_end: measurement at " +
                      std::to_string(i) + " cannot move: " + why);
    tail.push_back(m);
  }
  body.insert(body.end(), tail.begin(), tail.end());
  return rebuild(c, std::move(body));
}

Circuit insert_swap_chains(const Circuit& c, std::size_t begin,
                           std::size_t end,
                           const std::vector<std::pair<int, int>>& chain) {
  if (begin > end || end > c.size())
    throw PassError("insert_swap_chains: invalid region [" +
                    std::to_string(begin) + ", " + std::to_string(end) + ")");
  std::vector<int> perm(static_cast<std::size_t>(c.wires()));
  for (int w = 0; w < c.wires(); ++w) perm[static_cast<std::size_t>(w)] = w;
  for (const auto& [a, b] : chain) {
    if (a < 0 || b < 0 || a >= c.wires() || b >= c.wires() || a == b)
      throw PassError("insert_swap_chains: bad swap pair");
    for (auto& p : perm) {
      if (p == a)
        p = b;
      else if (p == b)
        p = a;
    }
  }
  std::vector<Instruction> out;
  const auto& ins = c.instructions();
  for (std::size_t i = 0; i < begin; ++i) out.push_back(ins[i]);
  for (const auto& [a, b] : chain) out.push_back(swap_gate(a, b));
  for (std::size_t i = begin; i < end; ++i)
    out.push_back(remap_wires(ins[i], perm));
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    out.push_back(swap_gate(it->first, it->second));
  for (std::size_t i = end; i < ins.size(); ++i) out.push_back(ins[i]);
  return rebuild(c, std::move(out));
}

Circuit commute_cnot_through_swaps(const Circuit& c) {
  std::vector<Instruction> out;
  for (const Instruction& ins : c.instructions()) {
    if (ins.kind != GateKind::Swap) {
      out.push_back(ins);
      continue;
    }
    const int a = ins.w0;
    const int b = ins.w1;
    std::size_t stop = out.size();
    while (stop > 0) {
      const Instruction& prev = out[stop - 1];
      if (prev.kind == GateKind::Barrier || prev.kind == GateKind::Swap)
        break;
      const bool ta = prev.touches(a);
      const bool tb = prev.touches(b);
      if (prev.kind == GateKind::Measure) {
        if (ta || tb) break;
      } else if (ta && tb) {
        break;
      }
      --stop;
    }
    for (std::size_t i = stop; i < out.size(); ++i)
      out[i] = swap_pair_in(out[i], a, b);
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(stop), ins);
  }
  return rebuild(c, std::move(out));
}

namespace {

void expand_identity4(std::vector<Instruction>& out, int control, int target) {
  const int dist = std::abs(control - target);
  if (dist <= 1) {
    out.push_back(cx(control, target));
    return;
  }
  const int mid = control + (target > control ? 1 : -1);
  out.push_back(cx(control, mid));
  expand_identity4(out, mid, target);
  out.push_back(cx(control, mid));
  expand_identity4(out, mid, target);
}

void emit_swap_route(std::vector<Instruction>& out, int control, int target) {
  const int dir = target > control ? 1 : -1;
  std::vector<std::pair<int, int>> route;
  int pos = control;
  while (std::abs(target - pos) > 1) {
    route.emplace_back(pos, pos + dir);
    pos += dir;
  }
  for (const auto& [x, y] : route) out.push_back(swap_gate(x, y));
  out.push_back(cx(pos, target));
  for (auto it = route.rbegin(); it != route.rend(); ++it)
    out.push_back(swap_gate(it->first, it->second));
}

// One side of a shared-target run: controls are sorted furthest-first
// and must be contiguous. Emits ladder, hop onto the target, unwind.
void emit_side(std::vector<Instruction>& out, std::vector<int> controls,
               int target, const ExpandOptions& options) {
  if (controls.empty()) return;
  const bool below = controls.front() < target;
  std::sort(controls.begin(), controls.end());
  if (!below) std::reverse(controls.begin(), controls.end());
  for (std::size_t i = 0; i + 1 < controls.size(); ++i) {
    if (std::abs(controls[i + 1] - controls[i]) != 1)
      throw PassError(
          "expand_long_range_cnot: controls on one side of wire " +
          std::to_string(target) + " are not contiguous");
  }
  const int nearest = controls.back();
  const int dist = std::abs(target - nearest);

  std::vector<Instruction> ladder;
  for (std::size_t i = 0; i + 1 < controls.size(); ++i)
    ladder.push_back(cx(controls[i], controls[i + 1]));

  out.insert(out.end(), ladder.begin(), ladder.end());
  if (dist == 1 || options.final_hop == FinalHopPolicy::Keep) {
    out.push_back(cx(nearest, target));
  } else if (controls.size() == 1 &&
             options.singleton == SingletonPolicy::Identity4) {
    expand_identity4(out, nearest, target);
  } else {
    emit_swap_route(out, nearest, target);
  }
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it)
    out.push_back(*it);
}

}  // namespace

Circuit expand_long_range_cnot(const Circuit& c,
                               const ExpandOptions& options) {
  const auto& ins = c.instructions();
  std::vector<Instruction> out;
  std::size_t i = 0;
  while (i < ins.size()) {
    const Instruction& cur = ins[i];
    if (cur.kind == GateKind::Swap && std::abs(cur.w0 - cur.w1) != 1)
      throw PassError(
          "expand_long_range_cnot: long-range swap at instruction " +
          std::to_string(i) + " is not supported");
    if (cur.kind != GateKind::Cnot) {
      out.push_back(cur);
      ++i;
      continue;
    }
    const int target = cur.w1;
    std::size_t j = i;
    bool any_long = false;
    while (j < ins.size() && ins[j].kind == GateKind::Cnot &&
           ins[j].w1 == target) {
      any_long = any_long || std::abs(ins[j].w0 - target) != 1;
      ++j;
    }
    if (!any_long) {
      for (std::size_t k = i; k < j; ++k) out.push_back(ins[k]);
      i = j;
      continue;
    }
    std::set<int> seen;
    std::vector<int> below;
    std::vector<int> above;
    for (std::size_t k = i; k < j; ++k) {
      const int ctrl = ins[k].w0;
      if (!seen.insert(ctrl).second)
        throw PassError(
            "expand_long_range_cnot: duplicate control wire " +
            std::to_string(ctrl) + " in the run at instruction " +
            std::to_string(i));
      (ctrl < target ? below : above).push_back(ctrl);
    }
    emit_side(out, below, target, options);
    emit_side(out, above, target, options);
    i = j;
  }
  return rebuild(c, std::move(out));
}

namespace {

// Nearest instruction in `list` touching wire a or b, scanning from
// `from` in direction `step`; everything else is skipped.
std::optional<std::size_t> nearest_touching(
    const std::vector<Instruction>& list, std::ptrdiff_t from,
    std::ptrdiff_t step, int a, int b) {
  for (std::ptrdiff_t i = from; i >= 0 &&
       i < static_cast<std::ptrdiff_t>(list.size()); i += step) {
    if (touches_any(list[static_cast<std::size_t>(i)], a, b))
      return static_cast<std::size_t>(i);
  }
  return std::nullopt;
}

void cancel_identical_pairs(std::vector<Instruction>& out) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.size() && !changed; ++i) {
      if (out[i].kind != GateKind::Cnot) continue;
      const int a = out[i].w0;
      const int b = out[i].w1;
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (out[j] == out[i]) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!transparent_between(out[j], a, b)) break;
      }
    }
  }
}

}  // namespace

Circuit decompose_swaps_and_cancel(const Circuit& c) {
  const auto& ins = c.instructions();
  std::vector<Instruction> out;
  for (std::size_t idx = 0; idx < ins.size(); ++idx) {
    const Instruction& cur = ins[idx];
    if (cur.kind != GateKind::Swap) {
      out.push_back(cur);
      continue;
    }
    const int a = cur.w0;
    const int b = cur.w1;
    int lead_control = std::min(a, b);
    // Orient so an identical neighbour cancels: prefer matching the
    // nearest earlier CNOT on exactly this pair, else matching the
    // control of the nearest later gate on these wires.
    auto prior = nearest_touching(
        out, static_cast<std::ptrdiff_t>(out.size()) - 1, -1, a, b);
    bool oriented = false;
    if (prior) {
      const Instruction& p = out[*prior];
      if (p.kind == GateKind::Cnot &&
          ((p.w0 == a && p.w1 == b) || (p.w0 == b && p.w1 == a))) {
        lead_control = p.w0;
        oriented = true;
      }
    }
    if (!oriented) {
      // Search the not-yet-emitted remainder.
      std::vector<Instruction> rest(ins.begin() +
                                        static_cast<std::ptrdiff_t>(idx) + 1,
                                    ins.end());
      auto later = nearest_touching(rest, 0, 1, a, b);
      if (later) {
        const Instruction& q = rest[*later];
        if (q.kind == GateKind::Cnot && (q.w0 == a || q.w0 == b))
          lead_control = q.w0;
      }
    }
    const int other = lead_control == a ? b : a;
    out.push_back(cx(lead_control, other));
    out.push_back(cx(other, lead_control));
    out.push_back(cx(lead_control, other));
  }
  cancel_identical_pairs(out);
  return rebuild(c, std::move(out));
}

namespace {

// Exact commutation used by the sink test in the elision pass.
bool commutes_past(const Instruction& u, const Instruction& later) {
  if (later.kind == GateKind::Barrier) return true;
  const auto uw = instruction_wires(u);
  bool disjoint = true;
  for (int w : uw)
    if (later.touches(w)) disjoint = false;
  if (disjoint) return true;
  if (later.kind == GateKind::Measure) {
    // A CNOT commutes with a measurement of its control; diagonal gates
    // commute with any measurement on their wire.
    if (u.kind == GateKind::Cnot && u.w0 == later.w0 &&
        !later.touches(u.w1))
      return true;
    return is_diag_1q(u);
  }
  if (u.kind == GateKind::Cnot && later.kind == GateKind::Cnot)
    return u.w0 == later.w0 || u.w1 == later.w1;
  if (is_diag_1q(u) && is_diag_1q(later)) return true;
  return false;
}

}  // namespace

Circuit elide_post_final_measurement_gates(
    const Circuit& c, const std::vector<int>& keep_bits) {
  for (int b : keep_bits)
    if (b < 0 || b >= c.clbits())
      throw PassError("elide: classical bit " + std::to_string(b) +
                      " out of range");
  std::vector<Instruction> out(c.instructions().begin(),
                               c.instructions().end());
  bool changed = true;
  while (changed) {
    changed = false;

    // Backward liveness over wires and classical bits.
    std::vector<bool> live_wire(static_cast<std::size_t>(c.wires()), false);
    std::vector<bool> live_bit(static_cast<std::size_t>(c.clbits()), false);
    for (int b : keep_bits) live_bit[static_cast<std::size_t>(b)] = true;
    std::vector<Instruction> kept;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      const Instruction& ins = *it;
      if (ins.kind == GateKind::Barrier) {
        kept.push_back(ins);
        continue;
      }
      if (ins.kind == GateKind::Measure) {
        const auto bit = static_cast<std::size_t>(ins.clbit);
        if (live_bit[bit] || live_wire[static_cast<std::size_t>(ins.w0)]) {
          live_bit[bit] = false;  // this write defines the bit
          live_wire[static_cast<std::size_t>(ins.w0)] = true;
          kept.push_back(ins);
        } else {
          changed = true;
        }
        continue;
      }
      bool needed = false;
      for (int w : instruction_wires(ins))
        needed = needed || live_wire[static_cast<std::size_t>(w)];
      if (!needed) {
        changed = true;
        continue;
      }
      for (int w : instruction_wires(ins))
        live_wire[static_cast<std::size_t>(w)] = true;
      if (ins.kind == GateKind::ClassicallyControlled)
        live_bit[static_cast<std::size_t>(ins.clbit)] = true;
      kept.push_back(ins);
    }
    std::reverse(kept.begin(), kept.end());
    out = std::move(kept);

    // Drop unitaries that commute with everything after them.
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Instruction& ins = out[i];
      if (!ins.is_unitary() || ins.kind == GateKind::ClassicallyControlled)
        continue;
      bool sinks = true;
      for (std::size_t j = i + 1; j < out.size() && sinks; ++j)
        sinks = commutes_past(ins, out[j]);
      if (sinks) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  while (!out.empty() && out.back().kind == GateKind::Barrier) out.pop_back();
  return rebuild(c, std::move(out));
}

namespace {

bool shares_resource(const Instruction& a, const Instruction& b) {
  for (int w : instruction_wires(a))
    if (b.touches(w)) return true;
  if (a.clbit >= 0 && a.clbit == b.clbit) {
    const bool a_reads = a.kind == GateKind::ClassicallyControlled;
    const bool b_reads = b.kind == GateKind::ClassicallyControlled;
    if (!(a_reads && b_reads)) return true;  // read-read is free
  }
  return false;
}

bool commute_for_normalize(const Instruction& a, const Instruction& b) {
  if (!shares_resource(a, b)) return true;
  if (a.kind == GateKind::Cnot && b.kind == GateKind::Cnot)
    return a.w0 == b.w0 || a.w1 == b.w1;
  if (is_diag_1q(a) && is_diag_1q(b)) return true;
  return false;
}

int kind_rank(GateKind k) { return static_cast<int>(k); }

struct SortKey {
  int w_min;
  int w_max;
  int rank;
  std::uint64_t angle_bits;
  int clbit;
  std::size_t index;

  bool operator<(const SortKey& other) const {
    if (w_min != other.w_min) return w_min < other.w_min;
    if (w_max != other.w_max) return w_max < other.w_max;
    if (rank != other.rank) return rank < other.rank;
    if (angle_bits != other.angle_bits) return angle_bits < other.angle_bits;
    if (clbit != other.clbit) return clbit < other.clbit;
    return index < other.index;
  }
};

SortKey make_key(const Instruction& ins, std::size_t index) {
  SortKey key{};
  const auto wires = instruction_wires(ins);
  key.w_min = wires.empty() ? -1 : *std::min_element(wires.begin(), wires.end());
  key.w_max = wires.empty() ? -1 : *std::max_element(wires.begin(), wires.end());
  key.rank = kind_rank(ins.kind) * 16 + kind_rank(ins.inner);
  key.angle_bits = ins.uses_angle() ? std::bit_cast<std::uint64_t>(ins.angle)
                                    : std::uint64_t{0};
  key.clbit = ins.clbit;
  key.index = index;
  return key;
}

}  // namespace

Circuit normalize_commuting_order(const Circuit& c) {
  std::vector<Instruction> gates;
  for (const Instruction& ins : c.instructions())
    if (ins.kind != GateKind::Barrier) gates.push_back(ins);

  const std::size_t n = gates.size();
  std::vector<std::vector<std::size_t>> successors(n);
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!commute_for_normalize(gates[i], gates[j])) {
        successors[i].push_back(j);
        ++pending[j];
      }
    }
  }
  std::set<std::pair<SortKey, std::size_t>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (pending[i] == 0) ready.emplace(make_key(gates[i], i), i);

  std::vector<Instruction> out;
  out.reserve(n);
  while (!ready.empty()) {
    const auto [key, i] = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(gates[i]);
    for (std::size_t j : successors[i])
      if (--pending[j] == 0) ready.emplace(make_key(gates[j], j), j);
  }
  return rebuild(c, std::move(out));
}

Circuit permute_wires(const Circuit& c, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(c.wires()))
    throw PassError("permute_wires: permutation size mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= c.wires() || hit[static_cast<std::size_t>(p)])
      throw PassError("permute_wires: not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Instruction> out;
  out.reserve(c.size());
  for (const Instruction& ins : c.instructions())
    out.push_back(remap_wires(ins, perm));
  return rebuild(c, std::move(out));
}

namespace {

Circuit transpile_lnn_h(const Circuit& reference, bool keep_first_bit) {
  const int n = reference.wires() - 2;
  if (n < 1 || reference.clbits() != kProtocolClbits)
    throw PassError("transpile_lnn: unexpected register shape");
  Circuit staged = commute_measurement_to_end(reference);
  std::ptrdiff_t last_fanin = -1;
  for (std::size_t i = 0; i < staged.size(); ++i) {
    const auto& ins = staged.at(i);
    if (ins.kind == GateKind::Cnot && ins.w1 == 0)
      last_fanin = static_cast<std::ptrdiff_t>(i);
  }
  if (last_fanin < 0)
    throw PassError(
        "transpile_lnn: no parity fan-in onto the first ancilla found");
  std::vector<std::pair<int, int>> chain;
  for (int i = 0; i < n; ++i) chain.emplace_back(i, i + 1);
  staged = insert_swap_chains(staged, static_cast<std::size_t>(last_fanin) + 1,
                              staged.size(), chain);
  staged = commute_cnot_through_swaps(staged);
  ExpandOptions options;
  options.final_hop = FinalHopPolicy::SwapSandwich;
  options.singleton = SingletonPolicy::SwapSandwich;
  staged = expand_long_range_cnot(staged, options);
  staged = decompose_swaps_and_cancel(staged);
  std::vector<int> keep = keep_first_bit
                              ? std::vector<int>{kFirstParityBit,
                                                 kSecondParityBit}
                              : std::vector<int>{kSecondParityBit};
  return elide_post_final_measurement_gates(staged, keep);
}

Circuit transpile_lnn_m(const Circuit& reference) {
  const int n = reference.wires() - 3;
  if (n < 2 || reference.clbits() != kProtocolClbits)
    throw PassError("transpile_lnn: unexpected register shape");
  const int half = (n + 1) / 2;
  std::vector<int> perm(static_cast<std::size_t>(reference.wires()));
  perm[0] = half;
  for (int q = 1; q <= half; ++q) perm[static_cast<std::size_t>(q)] = q - 1;
  for (int q = half + 1; q <= n; ++q)
    perm[static_cast<std::size_t>(q)] = q + 1;
  perm[static_cast<std::size_t>(n + 1)] = half + 1;
  perm[static_cast<std::size_t>(n + 2)] = n + 2;
  Circuit staged = permute_wires(reference, perm);
  ExpandOptions options;
  options.final_hop = FinalHopPolicy::Keep;
  staged = expand_long_range_cnot(staged, options);
  staged = decompose_swaps_and_cancel(staged);
  return elide_post_final_measurement_gates(
      staged, {kFirstParityBit, kSecondParityBit});
}

}  // namespace

Circuit transpile_lnn(const Circuit& reference, MethodKind kind,
                      bool keep_first_bit) {
  switch (kind) {
    case MethodKind::HMethod:
      return transpile_lnn_h(reference, keep_first_bit);
    case MethodKind::MMethod:
      return transpile_lnn_m(reference);
    default:
      throw PassError(
          "transpile_lnn: drivers exist for the mitigated methods only");
  }
}

}  // namespace ndc
