// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ndc/circuit.hpp"
#include "ndc/methods.hpp"

namespace ndc {

// Rewrite passes. Every pass returns a circuit whose noiseless joint
// distribution over the classical register equals the input's (exactly,
// as a unitary/measurement identity); passes that cannot establish this
// for a given input throw PassError with a diagnostic.

// Relocates measurements to the tail. Legal only when the measured wire
// is untouched afterwards and the classical bit is neither read by a
// later cif nor overwritten.
Circuit commute_measurement_to_end(const Circuit& c);

// Conjugation: inserts `chain` at `begin`, relabels wires of every
// instruction in [begin, end) through the chain's permutation, and
// appends the inverse chain at `end`.
Circuit insert_swap_chains(const Circuit& c, std::size_t begin,
                           std::size_t end,
                           const std::vector<std::pair<int, int>>& chain);

// Bubbles each swap leftwards past gates sharing at most one wire
// (relabeling them), stopping at anything touching both swap wires, at
// barriers, at other swaps, and at measurements on either wire.
Circuit commute_cnot_through_swaps(const Circuit& c);

enum class FinalHopPolicy { Keep, SwapSandwich };
enum class SingletonPolicy { Identity4, SwapSandwich };

struct ExpandOptions {
  FinalHopPolicy final_hop = FinalHopPolicy::Keep;
  SingletonPolicy singleton = SingletonPolicy::SwapSandwich;
};

// Rewrites runs of CNOTs sharing a target into nearest-neighbour
// ladders (the shared-target pair identity applied recursively), with
// the residual hop onto the target either kept or routed through swaps.
// Lone long-range CNOTs follow the singleton policy. Controls on each
// side of the target must be contiguous.
Circuit expand_long_range_cnot(const Circuit& c,
                               const ExpandOptions& options = {});

// Replaces swaps by three CNOTs (orientation chosen so neighbouring
// identical CNOTs cancel), then greedily removes identical CNOT pairs
// separated only by instructions disjoint from both wires (barriers are
// always transparent).
Circuit decompose_swaps_and_cancel(const Circuit& c);

// Removes operations that cannot influence the kept classical bits:
// backward liveness over wires and bits, plus dropping unitaries that
// commute with everything after them. Barriers are preserved except at
// the tail.
Circuit elide_post_final_measurement_gates(const Circuit& c,
                                           const std::vector<int>& keep_bits);

// Canonical order for structural comparison: strips barriers and
// topologically sorts under exact commutation (disjoint resources,
// shared-control or shared-target CNOT pairs, diagonal gates on one
// wire) with a deterministic tie-break.
Circuit normalize_commuting_order(const Circuit& c);

// Plain wire relabeling (layout assignment); perm[old] = new.
Circuit permute_wires(const Circuit& c, const std::vector<int>& perm);

// Full reference-to-linear drivers, composed from the passes above.
// For HMethod both branches transpile; by default the first readout is
// elided (the second-parity marginal is unaffected by it), which is the
// canonical nearest-neighbour form; keep_first_bit retains it. For
// MMethod the measured branch is the interesting one (the unmeasured
// branch differs only in which wire the first readout touches) and
// keep_first_bit is ignored.
Circuit transpile_lnn(const Circuit& reference, MethodKind kind,
                      bool keep_first_bit = false);

}  // namespace ndc
