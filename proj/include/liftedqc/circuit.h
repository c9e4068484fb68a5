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

#ifndef LIFTEDQC_CIRCUIT_H
#define LIFTEDQC_CIRCUIT_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liftedqc/complex_core.h"
#include "liftedqc/protocols.h"

namespace liftedqc {

enum class GateKind { H, T, CNOT };

struct CircuitGate {
    GateKind kind;
    /// Logical qubit indices, 0-based. CNOT is {control, target}.
    std::vector<int> operands;
};

struct CircuitSpec {
    int n = 1;
    std::vector<CircuitGate> gates;

    std::size_t size() const { return gates.size(); }
    /// Throws std::invalid_argument when an operand is out of range or a
    /// CNOT names the same qubit twice.
    void validate() const;
};

struct CircuitParseError : std::runtime_error {
    CircuitParseError(int line, const std::string &message);
    int line;
};

/// Line format: `n <int>` first, then `H <q>`, `T <q>` or `CNOT <qc> <qt>`
/// one per line. `#` starts a comment; blank lines are ignored.
CircuitSpec parse_circuit(std::string_view text);
std::string format_circuit(const CircuitSpec &c);

/// Direct 2^n state-vector simulation from |0...0>. Qubit 0 is the most
/// significant index.
CVec run_reference(const CircuitSpec &c);

struct RunOptions {
    /// Budget for initializing each pair; defaults to RusConfig::max_iters.
    std::optional<int> init_iters;
};

struct RunReport {
    bool success = false;
    /// Iterations spent initializing pairs 1..n.
    std::vector<int> init_iters;
    std::vector<int> per_gate_iters;
    std::int64_t total_iterations = 0;
    std::int64_t total_elementary_ops = 0;
    CVec final_logical_state;
    double leakage = 0;
    double reference_fidelity = 0;
    /// Which stage ran out of budget, e.g. "init 2" or "gate 3 (CZ)".
    std::string failure;
    std::uint64_t seed = 0;
};

/// Initializes every pair, runs each gate through its repeat-until-success
/// protocol, and compares the final logical state to run_reference.
RunReport run_lifted(const CircuitSpec &c, const RusConfig &cfg, Variant variant, const RunOptions &opts = {});

struct ShotReport {
    /// Outcome bitstring (qubit 0 first) -> count, over successful shots.
    std::map<std::string, std::int64_t> counts;
    std::int64_t shots = 0;
    std::int64_t failed_shots = 0;
    std::int64_t total_elementary_ops = 0;
};

/// Re-runs the whole lifted pipeline per shot (stream Rng::stream(seed, shot))
/// and measures every logical qubit at the end.
ShotReport run_shots(const CircuitSpec &c, const RusConfig &cfg, Variant variant, std::int64_t shots,
                     int threads = 1, const RunOptions &opts = {});

struct CostEstimate {
    /// Iterations per qubit initialization: log2((K + n) / delta).
    double m0;
    /// alpha * (2K + n) * m0.
    double total_ops;
    /// False when delta is too large for the first-order expansion in delta.
    bool first_order_valid;
};

CostEstimate estimate_cost(std::int64_t k, int n, double delta, double alpha);

/// Largest delta treated as within first-order validity by estimate_cost.
inline constexpr double kFirstOrderDeltaLimit = 0.1;

}  // namespace liftedqc

#endif
