// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <thread>

#include "ndc/errors.hpp"
#include "ndc/statevector.hpp"

namespace ndc {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr cplx kImag{0.0, 1.0};

// ---------------------------------------------------------------------
// Hybrid trajectory state. Circuits that only move population between
// basis states (X, CNOT, swap, diagonal gates, rotations by multiples of
// pi, and every noise event on such states) evolve as a single indexed
// amplitude; anything else promotes to the dense vector.

struct TrajState {
  explicit TrajState(int wires) : wires(wires) {}

  int wires;
  bool is_basis = true;
  std::size_t idx = 0;
  cplx phase{1.0, 0.0};
  std::unique_ptr<StateVector> vec;

  void promote() {
    if (!is_basis) return;
    vec = std::make_unique<StateVector>(wires);
    vec->set_basis(idx, phase);
    is_basis = false;
  }

  int bit(int w) const { return static_cast<int>((idx >> w) & 1u); }

  double prob_one(int w) const {
    return is_basis ? static_cast<double>(bit(w)) : vec->prob_one(w);
  }

  void project(int w, int outcome, double prob) {
    if (!is_basis) vec->project(w, outcome, prob);
    // A basis state is already an eigenstate of every wire.
  }

  void apply_x(int w) {
    if (is_basis) {
      idx ^= std::size_t{1} << w;
    } else {
      vec->apply_x(w);
    }
  }

  void apply_y(int w) {
    if (is_basis) {
      phase *= bit(w) ? -kImag : kImag;
      idx ^= std::size_t{1} << w;
    } else {
      const cplx m[4] = {0.0, -kImag, kImag, 0.0};
      vec->apply_1q(w, m);
    }
  }

  void apply_z(int w) {
    if (is_basis) {
      if (bit(w)) phase = -phase;
    } else {
      vec->apply_diag(w, cplx{1.0, 0.0}, cplx{-1.0, 0.0});
    }
  }

  void apply_diag(int w, cplx d0, cplx d1) {
    if (is_basis) {
      phase *= bit(w) ? d1 : d0;
    } else {
      vec->apply_diag(w, d0, d1);
    }
  }

  void apply_ry(int w, double theta) {
    if (is_basis) {
      if (theta == 0.0) return;
      if (theta == kPi || theta == -kPi) {
        // ry(pi) maps |0> -> |1>, |1> -> -|0>; ry(-pi) the transpose.
        const int b = bit(w);
        if ((theta > 0.0) == (b == 1)) phase = -phase;
        idx ^= std::size_t{1} << w;
        return;
      }
      if (theta == 2.0 * kPi || theta == -2.0 * kPi) {
        phase = -phase;  // a full turn is -I
        return;
      }
      promote();
    }
    vec->apply_ry(w, theta);
  }

  void apply_h(int w) {
    promote();
    vec->apply_h(w);
  }

  void apply_sx(int w) {
    promote();
    const cplx m[4] = {cplx{0.5, 0.5}, cplx{0.5, -0.5}, cplx{0.5, -0.5},
                       cplx{0.5, 0.5}};
    vec->apply_1q(w, m);
  }

  void apply_cnot(int c, int t) {
    if (is_basis) {
      if (bit(c)) idx ^= std::size_t{1} << t;
    } else {
      vec->apply_cnot(c, t);
    }
  }

  void apply_swap(int a, int b) {
    if (is_basis) {
      if (bit(a) != bit(b)) idx ^= (std::size_t{1} << a) | (std::size_t{1} << b);
    } else {
      vec->apply_swap(a, b);
    }
  }

  void amp_damp_jump(int w, double pop_one) {
    if (is_basis) {
      // Only reachable with the wire excited; relaxation clears the bit.
      idx &= ~(std::size_t{1} << w);
    } else {
      vec->amp_damp_jump(w, pop_one);
    }
  }

  void amp_damp_nojump(int w, double p, double pop_one) {
    // On a basis state the no-jump back-action is a pure renormalization.
    if (!is_basis) vec->amp_damp_nojump(w, p, pop_one);
  }
};

void apply_unitary(TrajState& st, GateKind kind, const Instruction& ins) {
  switch (kind) {
    case GateKind::RotY:
      st.apply_ry(ins.w0, ins.angle);
      break;
    case GateKind::RotZ: {
      const double half = ins.angle / 2.0;
      st.apply_diag(ins.w0, std::exp(-kImag * half), std::exp(kImag * half));
      break;
    }
    case GateKind::Hadamard:
      st.apply_h(ins.w0);
      break;
    case GateKind::PauliX:
      st.apply_x(ins.w0);
      break;
    case GateKind::SqrtX:
      st.apply_sx(ins.w0);
      break;
    case GateKind::TGate:
      st.apply_diag(ins.w0, cplx{1.0, 0.0},
                    std::exp(kImag * (kPi / 4.0)));
      break;
    case GateKind::Cnot:
      st.apply_cnot(ins.w0, ins.w1);
      break;
    case GateKind::Swap:
      st.apply_swap(ins.w0, ins.w1);
      break;
    default:
      throw Error("apply_unitary: non-unitary instruction");
  }
}

void apply_unitary_dense(StateVector& v, GateKind kind,
                         const Instruction& ins) {
  switch (kind) {
    case GateKind::RotY:
      v.apply_ry(ins.w0, ins.angle);
      break;
    case GateKind::RotZ: {
      const double half = ins.angle / 2.0;
      v.apply_diag(ins.w0, std::exp(-kImag * half), std::exp(kImag * half));
      break;
    }
    case GateKind::Hadamard:
      v.apply_h(ins.w0);
      break;
    case GateKind::PauliX:
      v.apply_x(ins.w0);
      break;
    case GateKind::SqrtX: {
      const cplx m[4] = {cplx{0.5, 0.5}, cplx{0.5, -0.5}, cplx{0.5, -0.5},
                         cplx{0.5, 0.5}};
      v.apply_1q(ins.w0, m);
      break;
    }
    case GateKind::TGate:
      v.apply_diag(ins.w0, cplx{1.0, 0.0}, std::exp(kImag * (kPi / 4.0)));
      break;
    case GateKind::Cnot:
      v.apply_cnot(ins.w0, ins.w1);
      break;
    case GateKind::Swap:
      v.apply_swap(ins.w0, ins.w1);
      break;
    default:
      throw Error("apply_unitary: non-unitary instruction");
  }
}

// Runs unitaries (honouring cif against the given register) from `pos`
// until the next measurement or the end; returns the new position.
std::size_t run_segment(const Circuit& circuit, StateVector& state,
                        const std::vector<std::uint8_t>& clbits,
                        std::size_t pos) {
  while (pos < circuit.size()) {
    const auto& ins = circuit.at(pos);
    if (ins.kind == GateKind::Measure) break;
    if (ins.kind != GateKind::Barrier) {
      bool fired = true;
      if (ins.kind == GateKind::ClassicallyControlled) {
        fired = clbits[static_cast<std::size_t>(ins.clbit)] ==
                static_cast<std::uint8_t>(ins.required_value ? 1 : 0);
      }
      if (fired) apply_unitary_dense(state, ins.effective_kind(), ins);
    }
    ++pos;
  }
  return pos;
}

// ---------------------------------------------------------------------
// Trajectory execution. The per-shot random consumption schedule is
// fixed and documented (README): for every instruction, first the idle
// catch-up channels on its wires in instruction order (one draw per
// active damping channel, one per active dephasing channel), then the
// measurement outcome draw / readout flip draw if applicable, then the
// depolarizing draw (plus one Pauli index draw when it fires), then the
// on-duration channels. Channels with zero probability draw nothing.

class Trajectory {
 public:
  Trajectory(const Circuit& circuit, Xoshiro256pp& rng,
             const ResolvedNoise* noise)
      : circuit_(circuit),
        rng_(rng),
        noise_(noise),
        st_(circuit.wires()),
        clbits_(static_cast<std::size_t>(circuit.clbits()), 0),
        wire_time_(static_cast<std::size_t>(circuit.wires()), 0.0) {}

  std::vector<std::uint8_t> run() {
    for (const auto& ins : circuit_.instructions()) step(ins);
    return clbits_;
  }

 private:
  void channels(int w, double dt) {
    if (noise_ == nullptr || dt <= 0.0) return;
    const auto& rates = noise_->wires[static_cast<std::size_t>(w)];
    if (rates.inv_t1 > 0.0) {
      const double p_ad = decay_probability(dt, rates.inv_t1);
      if (p_ad > 0.0) {
        const double pop_one = st_.prob_one(w);
        const double u = rng_.uniform();
        if (u < p_ad * pop_one) {
          st_.amp_damp_jump(w, pop_one);
        } else {
          st_.amp_damp_nojump(w, p_ad, pop_one);
        }
      }
    }
    if (rates.inv_tphi > 0.0) {
      const double p_z = 0.5 * decay_probability(dt, rates.inv_tphi);
      if (p_z > 0.0 && rng_.uniform() < p_z) st_.apply_z(w);
    }
  }

  void catch_up(int w, double t0) {
    channels(w, t0 - wire_time_[static_cast<std::size_t>(w)]);
  }

  void depolarize_1q(int w) {
    if (noise_ == nullptr || noise_->p1 <= 0.0) return;
    if (rng_.uniform() >= noise_->p1) return;
    switch (rng_.below(3)) {
      case 0: st_.apply_x(w); break;
      case 1: st_.apply_y(w); break;
      default: st_.apply_z(w); break;
    }
  }

  void apply_pauli(int w, int code) {
    switch (code) {
      case 1: st_.apply_x(w); break;
      case 2: st_.apply_y(w); break;
      case 3: st_.apply_z(w); break;
      default: break;
    }
  }

  void depolarize_2q(int w0, int w1) {
    if (noise_ == nullptr || noise_->p2 <= 0.0) return;
    if (rng_.uniform() >= noise_->p2) return;
    const int code = static_cast<int>(rng_.below(15)) + 1;
    apply_pauli(w0, code & 3);
    apply_pauli(w1, code >> 2);
  }

  void finish(int w, double t0, double dur) {
    channels(w, dur);
    wire_time_[static_cast<std::size_t>(w)] = t0 + dur;
  }

  void step(const Instruction& ins) {
    if (ins.kind == GateKind::Barrier) {
      double fence = 0.0;
      for (double t : wire_time_) fence = std::max(fence, t);
      for (int w = 0; w < circuit_.wires(); ++w) {
        catch_up(w, fence);
        wire_time_[static_cast<std::size_t>(w)] = fence;
      }
      return;
    }

    if (ins.kind == GateKind::Measure) {
      const int w = ins.w0;
      const double t0 = wire_time_[static_cast<std::size_t>(w)];
      const double pop_one = st_.prob_one(w);
      const double u = rng_.uniform();
      const int outcome = u < pop_one ? 1 : 0;
      st_.project(w, outcome, outcome ? pop_one : 1.0 - pop_one);
      int recorded = outcome;
      if (noise_ != nullptr && noise_->has_readout()) {
        const double flip = outcome ? noise_->readout_p10 : noise_->readout_p01;
        if (rng_.uniform() < flip) recorded ^= 1;
      }
      clbits_[static_cast<std::size_t>(ins.clbit)] =
          static_cast<std::uint8_t>(recorded);
      finish(w, t0, noise_ ? noise_->dur_meas : 0.0);
      return;
    }

    const GateKind kind = ins.effective_kind();
    const bool two = ins.is_two_wire();
    const double dur =
        noise_ ? (two ? noise_->dur_2q : noise_->dur_1q) : 0.0;
    double t0 = wire_time_[static_cast<std::size_t>(ins.w0)];
    if (two)
      t0 = std::max(t0, wire_time_[static_cast<std::size_t>(ins.w1)]);
    catch_up(ins.w0, t0);
    if (two) catch_up(ins.w1, t0);

    bool fired = true;
    if (ins.kind == GateKind::ClassicallyControlled) {
      fired = clbits_[static_cast<std::size_t>(ins.clbit)] ==
              static_cast<std::uint8_t>(ins.required_value ? 1 : 0);
    }
    if (fired) {
      apply_unitary(st_, kind, ins);
      if (two) {
        depolarize_2q(ins.w0, ins.w1);
      } else {
        depolarize_1q(ins.w0);
      }
    }
    finish(ins.w0, t0, dur);
    if (two) finish(ins.w1, t0, dur);
  }

  const Circuit& circuit_;
  Xoshiro256pp& rng_;
  const ResolvedNoise* noise_;
  TrajState st_;
  std::vector<std::uint8_t> clbits_;
  std::vector<double> wire_time_;
};

// ---------------------------------------------------------------------
// Noiseless branch tree. Snapshots the state at every measurement so a
// shot is a walk down cached nodes, one uniform draw per measurement;
// the draw (u < pop_one) matches the trajectory path bit for bit.

class BranchTree {
 public:
  explicit BranchTree(const Circuit& circuit) : circuit_(circuit) {
    root_ = std::make_unique<Node>();
    root_->state = std::make_unique<StateVector>(circuit.wires());
    root_->clbits.assign(static_cast<std::size_t>(circuit.clbits()), 0);
    root_->pos = 0;
    advance(*root_);
  }

  static bool suitable(const Circuit& circuit) {
    if (circuit.wires() > 20) return false;
    int measures = 0;
    for (const auto& ins : circuit.instructions())
      if (ins.kind == GateKind::Measure) ++measures;
    return measures <= 10;
  }

  std::vector<std::uint8_t> sample(Xoshiro256pp& rng) {
    Node* node = root_.get();
    for (;;) {
      Node* next = nullptr;
      {
        // pop_one and clbits are immutable once advanced; only child
        // creation needs the lock.
        if (node->pos >= circuit_.size()) return node->clbits;
        const double u = rng.uniform();
        const int outcome = u < node->pop_one ? 1 : 0;
        std::lock_guard<std::mutex> lock(mutex_);
        auto& slot = node->child[outcome];
        if (!slot) slot = make_child(*node, outcome);
        next = slot.get();
      }
      node = next;
    }
  }

 private:
  struct Node {
    std::unique_ptr<StateVector> state;  // before instruction `pos`
    std::vector<std::uint8_t> clbits;
    std::size_t pos = 0;
    double pop_one = 0.0;  // of the measure at `pos`, if any
    std::unique_ptr<Node> child[2];
  };

  // Runs unitaries until the next measurement (or the end); leaves `pos`
  // at the measurement and caches its outcome probability.
  void advance(Node& node) {
    node.pos = run_segment(circuit_, *node.state, node.clbits, node.pos);
    if (node.pos < circuit_.size())
      node.pop_one = node.state->prob_one(circuit_.at(node.pos).w0);
  }

  std::unique_ptr<Node> make_child(const Node& parent, int outcome) {
    const auto& ins = circuit_.at(parent.pos);
    auto child = std::make_unique<Node>();
    child->state = std::make_unique<StateVector>(*parent.state);
    child->state->project(ins.w0, outcome,
                          outcome ? parent.pop_one : 1.0 - parent.pop_one);
    child->clbits = parent.clbits;
    child->clbits[static_cast<std::size_t>(ins.clbit)] =
        static_cast<std::uint8_t>(outcome);
    child->pos = parent.pos + 1;
    advance(*child);
    return child;
  }

  const Circuit& circuit_;
  std::unique_ptr<Node> root_;
  std::mutex mutex_;
};

}  // namespace

std::string bits_to_key(const std::vector<std::uint8_t>& bits) {
  std::string key(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    key[bits.size() - 1 - i] = bits[i] ? '1' : '0';
  return key;
}

std::vector<std::uint8_t> run_single_shot(const Circuit& circuit,
                                          Xoshiro256pp& rng,
                                          const ResolvedNoise* noise) {
  Trajectory traj(circuit, rng, noise);
  return traj.run();
}

Counts run_shots(const Circuit& circuit, const ShotOptions& options) {
  if (circuit.wires() > StateVector::kMaxWires)
    throw ResourceLimitError("circuit exceeds the simulator wire cap");

  const bool noiseless =
      options.noise == nullptr || options.noise->trivial();
  ResolvedNoise resolved;
  if (!noiseless) resolved = resolve(*options.noise, circuit.wires());
  const ResolvedNoise* noise = noiseless ? nullptr : &resolved;

  std::unique_ptr<BranchTree> tree;
  if (noiseless && BranchTree::suitable(circuit))
    tree = std::make_unique<BranchTree>(circuit);

  auto sample = [&](std::uint64_t shot, Counts& out) {
    auto rng = substream(options.seed, options.circuit_index,
                         options.run_index, shot);
    std::vector<std::uint8_t> bits =
        tree ? tree->sample(rng) : run_single_shot(circuit, rng, noise);
    ++out[bits_to_key(bits)];
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  std::uint64_t workers =
      options.workers > 0 ? static_cast<std::uint64_t>(options.workers) : hw;
  workers = std::min<std::uint64_t>({workers, options.shots, 64});

  if (workers <= 1) {
    Counts counts;
    for (std::uint64_t s = 0; s < options.shots; ++s) sample(s, counts);
    return counts;
  }

  std::vector<Counts> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t s = w; s < options.shots; s += workers)
        sample(s, partial[w]);
    });
  }
  for (auto& t : pool) t.join();
  Counts counts;
  for (const auto& part : partial)
    for (const auto& [key, n] : part) counts[key] += n;
  return counts;
}

namespace {

void enumerate(const Circuit& circuit, StateVector& state,
               std::vector<std::uint8_t>& clbits, std::size_t pos,
               double weight, const ExactLimits& limits, std::size_t& paths,
               Distribution& out) {
  pos = run_segment(circuit, state, clbits, pos);
  if (pos >= circuit.size()) {
    out[bits_to_key(clbits)] += weight;
    return;
  }

  const auto& ins = circuit.at(pos);
  if (++paths > limits.max_paths)
    throw ResourceLimitError(
        "exact distribution: measurement branch count exceeds " +
        std::to_string(limits.max_paths));
  const double pop_one = state.prob_one(ins.w0);
  const double w1 = weight * pop_one;
  const double w0 = weight * (1.0 - pop_one);
  const std::size_t bit = static_cast<std::size_t>(ins.clbit);

  if (w1 > limits.prune_below) {
    StateVector branch(state);
    branch.project(ins.w0, 1, pop_one);
    clbits[bit] = 1;
    enumerate(circuit, branch, clbits, pos + 1, w1, limits, paths, out);
  }
  if (w0 > limits.prune_below) {
    state.project(ins.w0, 0, 1.0 - pop_one);
    clbits[bit] = 0;
    enumerate(circuit, state, clbits, pos + 1, w0, limits, paths, out);
  }
}

}  // namespace

Distribution exact_distribution(const Circuit& circuit,
                                const ExactLimits& limits) {
  if (circuit.wires() > limits.max_wires ||
      circuit.wires() > StateVector::kMaxWires) {
    throw ResourceLimitError(
        "exact distribution capped at " +
        std::to_string(std::min(limits.max_wires, StateVector::kMaxWires)) +
        " wires, circuit has " + std::to_string(circuit.wires()));
  }
  StateVector state(circuit.wires());
  std::vector<std::uint8_t> clbits(static_cast<std::size_t>(circuit.clbits()),
                                   0);
  std::size_t paths = 0;
  Distribution out;
  enumerate(circuit, state, clbits, 0, 1.0, limits, paths, out);
  return out;
}

Distribution marginalize(const Distribution& dist, int clbits,
                         const std::vector<int>& bits) {
  for (int b : bits)
    if (b < 0 || b >= clbits)
      throw ValidationError("marginalize: classical bit " +
                            std::to_string(b) + " out of range");
  Distribution out;
  const std::size_t len = static_cast<std::size_t>(clbits);
  for (const auto& [key, p] : dist) {
    if (key.size() != len)
      throw ValidationError("marginalize: key '" + key +
                            "' does not match register width");
    std::string reduced(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
      reduced[bits.size() - 1 - i] =
          key[len - 1 - static_cast<std::size_t>(bits[i])];
    out[reduced] += p;
  }
  return out;
}

Distribution counts_to_distribution(const Counts& counts) {
  double total = 0.0;
  for (const auto& [key, n] : counts) total += static_cast<double>(n);
  Distribution out;
  if (total == 0.0) return out;
  for (const auto& [key, n] : counts)
    out[key] = static_cast<double>(n) / total;
  return out;
}

}  // namespace ndc
