// Copyright 2026 The liftedqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIFTEDQC_PROTOCOLS_H
#define LIFTEDQC_PROTOCOLS_H

#include <cstdint>
#include <string>
#include <vector>

#include "liftedqc/encoding.h"
#include "liftedqc/lift_model.h"

namespace liftedqc {

/// Gate set, control basis and code for one register of n logical qubits.
struct LiftedSystem {
    LiftedSystem(Variant variant, int n);

    Variant variant() const { return gates.variant(); }
    int n() const { return encoding.n(); }

    /// Control |1>, every pair in the classical start state (|10> per pair).
    JointState classical_start() const;
    /// Control |label> with the target set to encode(logical).
    JointState encoded(const CVec &logical, std::string_view control_label = "1") const;

    ClassicalGateSet gates;
    LogicalEncoding encoding;
};

struct RusConfig {
    /// Iteration budget per protocol invocation.
    int max_iters = 40;
    std::uint64_t seed = 0;
};

struct TraceEntry {
    /// Control label, or "target:<bits>" for a classical target measurement.
    std::string outcome;
    double probability;
};

struct ProtocolOutcome {
    bool success = false;
    int iters_used = 0;
    /// Accumulated group element actually applied to the logical state.
    std::string applied_label;
    std::vector<TraceEntry> trace;
    JointState final_state{1, 1};
    /// Classical corrections applied after the walk (e.g. "G2@1").
    std::vector<std::string> corrections;
    /// Elementary operations: control unitaries, controlled interactions,
    /// control measurements, classical target measurements and classical
    /// corrections each count 1. Control resets are free.
    std::int64_t elementary_ops = 0;
    /// For composite protocols, the stage that ran out of budget.
    std::string failed_stage;
};

/// Probability of the recorded trace: the product of its branch probabilities.
double trace_probability(const ProtocolOutcome &outcome);

/// Prepares +-|0>_L on `pair` from a classical start state (|10> or |11>,
/// |1000> or |0100> for SWAP blocks). Each failed round is followed by a
/// classical measurement of the pair.
ProtocolOutcome initialize_pair(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg, Rng &rng);

/// Logical Hadamard. Walks G_H = {1, H, H~, Y} until the accumulated
/// element is H.
ProtocolOutcome rus_hadamard(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg, Rng &rng);

/// Logical T. Walks T^j (mod 8) until j is 1, or 5 followed by the
/// classical gate G2 (Z T^5 = T up to phase).
ProtocolOutcome rus_t(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg, Rng &rng);

/// Logical CZ between pairs k and l. Walks {1, CZ, CZ~, CZ~'}.
ProtocolOutcome rus_cz(JointState s, const LiftedSystem &sys, int pair_k, int pair_l, const RusConfig &cfg, Rng &rng);

/// CNOT = (1 (x) H) CZ (1 (x) H); each stage has its own max_iters budget.
ProtocolOutcome rus_cnot(JointState s, const LiftedSystem &sys, int control_pair, int target_pair,
                         const RusConfig &cfg, Rng &rng);

/// Convenience overloads drawing randomness from Rng(cfg.seed).
ProtocolOutcome initialize_pair(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg);
ProtocolOutcome rus_hadamard(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg);
ProtocolOutcome rus_t(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg);
ProtocolOutcome rus_cz(JointState s, const LiftedSystem &sys, int pair_k, int pair_l, const RusConfig &cfg);
ProtocolOutcome rus_cnot(JointState s, const LiftedSystem &sys, int control_pair, int target_pair,
                         const RusConfig &cfg);

struct LogicalMeasurement {
    int bit;
    JointState state;
    double probability;
};

/// Classical measurement of a pair read as a logical bit: {10, 11} -> 0 and
/// {00, 01} -> 1 (SWAP blocks: {1000, 0100} -> 0, {0010, 0001} -> 1).
LogicalMeasurement measure_logical(const JointState &s, const LiftedSystem &sys, int pair, Rng &rng);

/// Applies a classical gate directly to the target, leaving the control alone.
JointState apply_classical(const JointState &s, const Permutation &gate);

/// Logical operators the protocols accumulate, for bookkeeping checks.
namespace logical_ops {
CMat h_tilde();  // (X - Z) / sqrt(2)
CMat cz();
CMat cz_tilde();  // (11 + Z1 - 1Z + ZZ) / 2
}  // namespace logical_ops

}  // namespace liftedqc

#endif
