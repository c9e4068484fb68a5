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

#include "liftedqc/protocols.h"

#include <array>
#include <cmath>
#include <numbers>

namespace liftedqc {

LiftedSystem::LiftedSystem(Variant variant, int n) : gates(build_gateset(variant, n)), encoding(variant, n) {
}

JointState LiftedSystem::classical_start() const {
    std::size_t index = 0;
    int width = gates.qubits_per_pair();
    for (int l = 0; l < n(); l++) {
        index = (index << width) | encoding.start_bits();
    }
    return JointState::product(gates.control_dim(), 0, CVec::basis(gates.target_dim(), index));
}

JointState LiftedSystem::encoded(const CVec &logical, std::string_view control_label) const {
    return JointState::product(gates.control_dim(), gates.control().index_of(control_label),
                               encode(encoding, logical));
}

double trace_probability(const ProtocolOutcome &outcome) {
    double p = 1;
    for (const auto &e : outcome.trace) {
        p *= e.probability;
    }
    return p;
}

JointState apply_classical(const JointState &s, const Permutation &gate) {
    if (gate.dim() != s.target_dim()) {
        throw std::invalid_argument("apply_classical: dimension mismatch");
    }
    JointState out(s.control_dim(), s.target_dim());
    for (std::size_t c = 0; c < s.control_dim(); c++) {
        for (std::size_t t = 0; t < s.target_dim(); t++) {
            out.at(c, gate(t)) = s.at(c, t);
        }
    }
    return out;
}

namespace {

/// P/Z4 written as Z2 x Z2: element labels indexed by two bits, product is XOR.
using KleinLabels = std::array<const char *, 4>;
constexpr KleinLabels kHadamardGroup = {"1", "H", "H~", "Y"};
constexpr KleinLabels kCzGroup = {"1", "CZ", "CZ~", "CZ~'"};
constexpr unsigned kSuccessElement = 0b01;
constexpr unsigned kTildeElement = 0b10;

std::string bits_label(std::uint32_t bits, int width) {
    std::string s;
    for (int b = width - 1; b >= 0; b--) {
        s.push_back(((bits >> b) & 1) ? '1' : '0');
    }
    return s;
}

void check_budget(const RusConfig &cfg) {
    if (cfg.max_iters < 1) {
        throw std::invalid_argument("max_iters must be at least 1");
    }
}

}  // namespace

ProtocolOutcome initialize_pair(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg, Rng &rng) {
    check_budget(cfg);
    const ClassicalGateSet &g = sys.gates;
    int shift = g.pair_shift(pair);
    int width = g.qubits_per_pair();
    std::uint32_t mask = (1u << width) - 1;

    // The pair must hold a classical state that G2 maps to a distinct state.
    CVec target = s.target_state();
    std::optional<std::uint32_t> bits;
    for (std::size_t t = 0; t < target.dim(); t++) {
        if (std::norm(target[t]) > kUnitaryTol) {
            auto b = static_cast<std::uint32_t>((t >> shift) & mask);
            if (bits && *bits != b) {
                throw std::invalid_argument("initialize_pair: pair is not in a classical basis state");
            }
            bits = b;
        }
    }
    std::uint32_t start = sys.encoding.start_bits();
    std::uint32_t partner = g.g2(pair).perm(start << shift) >> shift & mask;
    if (!bits || (*bits != start && *bits != partner)) {
        throw std::invalid_argument("initialize_pair: pair must start in " + bits_label(start, width) + " or " +
                                    bits_label(partner, width));
    }

    std::array<std::size_t, 2> subspace = {0, ControlBasis::g2(pair)};
    CMat h = gates::hadamard();
    ProtocolOutcome out;
    for (int iter = 1; iter <= cfg.max_iters; iter++) {
        s = reset_control(s, 0);
        auto step = lift_step(s, h, h, subspace, g, rng);
        out.elementary_ops += 4;
        out.iters_used = iter;
        out.trace.push_back({step.outcome_label, step.branch_probability});
        s = std::move(step.post_state);
        if (step.outcome_index == ControlBasis::g2(pair)) {
            out.success = true;
            out.applied_label = "init";
            break;
        }
        auto classical = measure_target_classical(s, g, pair, rng);
        out.elementary_ops += 1;
        out.trace.push_back({"target:" + bits_label(classical.bits, width), classical.probability});
        s = std::move(classical.state);
    }
    if (!out.success) {
        out.applied_label = "classical";
    }
    out.final_state = std::move(s);
    return out;
}

ProtocolOutcome rus_hadamard(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg, Rng &rng) {
    check_budget(cfg);
    sys.gates.check_pair(pair);
    std::array<std::size_t, 2> subspace = {ControlBasis::g1(pair), ControlBasis::g2(pair)};
    CMat h = gates::hadamard();

    ProtocolOutcome out;
    unsigned acc = 0;
    for (int iter = 1; iter <= cfg.max_iters; iter++) {
        s = reset_control(s, ControlBasis::g1(pair));
        auto step = lift_step(s, h, h, subspace, sys.gates, rng);
        out.elementary_ops += 4;
        out.iters_used = iter;
        out.trace.push_back({step.outcome_label, step.branch_probability});
        s = std::move(step.post_state);
        // "G2" leaves (X+Z)/sqrt2 = H, "G1" leaves (X-Z)/sqrt2 = H~.
        acc ^= step.outcome_index == ControlBasis::g2(pair) ? kSuccessElement : kTildeElement;
        if (acc == kSuccessElement) {
            out.success = true;
            break;
        }
    }
    out.applied_label = kHadamardGroup[acc];
    out.final_state = std::move(s);
    return out;
}

ProtocolOutcome rus_t(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg, Rng &rng) {
    check_budget(cfg);
    sys.gates.check_pair(pair);
    std::array<std::size_t, 2> subspace = {0, ControlBasis::g2(pair)};
    CMat h = gates::hadamard();
    CMat hth = h * gates::t_gate() * h;

    ProtocolOutcome out;
    int power = 0;
    for (int iter = 1; iter <= cfg.max_iters; iter++) {
        s = reset_control(s, 0);
        auto step = lift_step(s, hth, h, subspace, sys.gates, rng);
        out.elementary_ops += 4;
        out.iters_used = iter;
        out.trace.push_back({step.outcome_label, step.branch_probability});
        s = std::move(step.post_state);
        power = (power + (step.outcome_index == 0 ? 7 : 1)) % 8;
        if (power == 1 || power == 5) {
            out.success = true;
            break;
        }
    }
    if (out.success && power == 5) {
        s = apply_classical(s, sys.gates.g2(pair).perm);
        out.elementary_ops += 1;
        out.corrections.push_back(sys.gates.g2(pair).label);
        power = 1;
    }
    out.applied_label = power == 1 ? "T" : "T^" + std::to_string(power);
    out.final_state = std::move(s);
    return out;
}

ProtocolOutcome rus_cz(JointState s, const LiftedSystem &sys, int pair_k, int pair_l, const RusConfig &cfg,
                       Rng &rng) {
    check_budget(cfg);
    sys.gates.check_pair(pair_k);
    sys.gates.check_pair(pair_l);
    if (pair_k == pair_l) {
        throw std::invalid_argument("rus_cz: pairs must be distinct");
    }
    std::array<std::size_t, 2> sub_k = {0, ControlBasis::g2(pair_k)};
    std::array<std::size_t, 2> sub_l = {0, ControlBasis::g2(pair_l)};
    CMat h = gates::hadamard();

    ProtocolOutcome out;
    unsigned acc = 0;
    for (int iter = 1; iter <= cfg.max_iters; iter++) {
        s = reset_control(s, ControlBasis::g2(pair_k));
        s = control_unitary(s, h, sub_k);
        s = controlled_apply(s, sys.gates);
        s = control_unitary(s, h, sub_k);
        s = relabel_control(s, pair_k, pair_l);
        s = controlled_apply(s, sys.gates);
        s = control_unitary(s, h, sub_l);
        auto m = measure_control(s, sys.gates.control(), rng);
        out.elementary_ops += 7;
        out.iters_used = iter;
        out.trace.push_back({m.label, m.probability});
        s = std::move(m.state);
        acc ^= m.index == ControlBasis::g2(pair_l) ? kSuccessElement : kTildeElement;
        if (acc == kSuccessElement) {
            out.success = true;
            break;
        }
    }
    out.applied_label = kCzGroup[acc];
    out.final_state = std::move(s);
    return out;
}

ProtocolOutcome rus_cnot(JointState s, const LiftedSystem &sys, int control_pair, int target_pair,
                         const RusConfig &cfg, Rng &rng) {
    if (control_pair == target_pair) {
        throw std::invalid_argument("rus_cnot: qubits must be distinct");
    }
    ProtocolOutcome out;
    auto absorb = [&out](ProtocolOutcome &&stage, const char *name) {
        out.iters_used += stage.iters_used;
        out.elementary_ops += stage.elementary_ops;
        out.trace.insert(out.trace.end(), stage.trace.begin(), stage.trace.end());
        out.corrections.insert(out.corrections.end(), stage.corrections.begin(), stage.corrections.end());
        out.final_state = std::move(stage.final_state);
        if (!stage.success) {
            out.failed_stage = name;
            out.applied_label = std::string(name) + ":" + stage.applied_label;
        }
        return stage.success;
    };

    if (absorb(rus_hadamard(std::move(s), sys, target_pair, cfg, rng), "H-pre") &&
        absorb(rus_cz(std::move(out.final_state), sys, control_pair, target_pair, cfg, rng), "CZ") &&
        absorb(rus_hadamard(std::move(out.final_state), sys, target_pair, cfg, rng), "H-post")) {
        out.success = true;
        out.applied_label = "CNOT";
    }
    return out;
}

ProtocolOutcome initialize_pair(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg) {
    Rng rng(cfg.seed);
    return initialize_pair(std::move(s), sys, pair, cfg, rng);
}

ProtocolOutcome rus_hadamard(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg) {
    Rng rng(cfg.seed);
    return rus_hadamard(std::move(s), sys, pair, cfg, rng);
}

ProtocolOutcome rus_t(JointState s, const LiftedSystem &sys, int pair, const RusConfig &cfg) {
    Rng rng(cfg.seed);
    return rus_t(std::move(s), sys, pair, cfg, rng);
}

ProtocolOutcome rus_cz(JointState s, const LiftedSystem &sys, int pair_k, int pair_l, const RusConfig &cfg) {
    Rng rng(cfg.seed);
    return rus_cz(std::move(s), sys, pair_k, pair_l, cfg, rng);
}

ProtocolOutcome rus_cnot(JointState s, const LiftedSystem &sys, int control_pair, int target_pair,
                         const RusConfig &cfg) {
    Rng rng(cfg.seed);
    return rus_cnot(std::move(s), sys, control_pair, target_pair, cfg, rng);
}

LogicalMeasurement measure_logical(const JointState &s, const LiftedSystem &sys, int pair, Rng &rng) {
    auto m = measure_target_classical(s, sys.gates, pair, rng);
    auto bit = sys.encoding.logical_bit_of(m.bits);
    if (!bit) {
        throw std::logic_error("measure_logical: outcome " + bits_label(m.bits, sys.gates.qubits_per_pair()) +
                               " lies outside the logical code");
    }
    return {*bit, std::move(m.state), m.probability};
}

namespace logical_ops {

CMat h_tilde() {
    return (1 / std::numbers::sqrt2) * (gates::pauli_x() - gates::pauli_z());
}

CMat cz() {
    CMat m = CMat::identity(4);
    m(3, 3) = -1;
    return m;
}

CMat cz_tilde() {
    CMat z = gates::pauli_z();
    CMat id = CMat::identity(2);
    return 0.5 * (kron(id, id) + kron(z, id) - kron(id, z) + kron(z, z));
}

}  // namespace logical_ops

}  // namespace liftedqc
