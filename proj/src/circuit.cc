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

#include "liftedqc/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "liftedqc/analysis.h"

namespace liftedqc {

// ---------------------------------------------------------------- parsing

CircuitParseError::CircuitParseError(int line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {
}

void CircuitSpec::validate() const {
    if (n < 1) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    for (std::size_t k = 0; k < gates.size(); k++) {
        const auto &g = gates[k];
        std::size_t arity = g.kind == GateKind::CNOT ? 2 : 1;
        if (g.operands.size() != arity) {
            throw std::invalid_argument("gate " + std::to_string(k) + ": wrong operand count");
        }
        for (int q : g.operands) {
            if (q < 0 || q >= n) {
                throw std::invalid_argument("gate " + std::to_string(k) + ": qubit " + std::to_string(q) +
                                            " out of range 0.." + std::to_string(n - 1));
            }
        }
        if (arity == 2 && g.operands[0] == g.operands[1]) {
            throw std::invalid_argument("gate " + std::to_string(k) + ": CNOT operands must be distinct");
        }
    }
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        std::size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        if (k > start) {
            words.push_back(line.substr(start, k - start));
        }
    }
    return words;
}

int parse_int(std::string_view word, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw CircuitParseError(line, "expected an integer, got '" + std::string(word) + "'");
    }
    return value;
}

}  // namespace

CircuitSpec parse_circuit(std::string_view text) {
    CircuitSpec spec;
    bool have_n = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }

        if (!have_n) {
            if (words[0] != "n" || words.size() != 2) {
                throw CircuitParseError(line_no, "first statement must be 'n <qubits>'");
            }
            spec.n = parse_int(words[1], line_no);
            if (spec.n < 1) {
                throw CircuitParseError(line_no, "qubit count must be positive");
            }
            have_n = true;
            continue;
        }

        CircuitGate gate;
        std::size_t arity;
        if (words[0] == "H") {
            gate.kind = GateKind::H;
            arity = 1;
        } else if (words[0] == "T") {
            gate.kind = GateKind::T;
            arity = 1;
        } else if (words[0] == "CNOT") {
            gate.kind = GateKind::CNOT;
            arity = 2;
        } else {
            throw CircuitParseError(line_no, "unknown gate '" + std::string(words[0]) + "'");
        }
        if (words.size() != arity + 1) {
            throw CircuitParseError(line_no, std::string(words[0]) + " takes " + std::to_string(arity) +
                                                 " operand" + (arity == 1 ? "" : "s"));
        }
        for (std::size_t k = 1; k <= arity; k++) {
            int q = parse_int(words[k], line_no);
            if (q < 0 || q >= spec.n) {
                throw CircuitParseError(line_no, "qubit " + std::to_string(q) + " out of range 0.." +
                                                     std::to_string(spec.n - 1));
            }
            gate.operands.push_back(q);
        }
        if (arity == 2 && gate.operands[0] == gate.operands[1]) {
            throw CircuitParseError(line_no, "CNOT operands must be distinct");
        }
        spec.gates.push_back(std::move(gate));
    }
    if (!have_n) {
        throw CircuitParseError(line_no, "missing 'n <qubits>' header");
    }
    return spec;
}

std::string format_circuit(const CircuitSpec &c) {
    std::stringstream ss;
    ss << "n " << c.n << "\n";
    for (const auto &g : c.gates) {
        ss << (g.kind == GateKind::H ? "H" : g.kind == GateKind::T ? "T" : "CNOT");
        for (int q : g.operands) {
            ss << " " << q;
        }
        ss << "\n";
    }
    return ss.str();
}

// ---------------------------------------------------------------- reference

CVec run_reference(const CircuitSpec &c) {
    c.validate();
    std::size_t dim = std::size_t{1} << c.n;
    CVec state = CVec::basis(dim, 0);
    CMat h = gates::hadamard();
    CMat t = gates::t_gate();
    auto bit = [&](int q) { return std::size_t{1} << (c.n - 1 - q); };

    for (const auto &g : c.gates) {
        if (g.kind == GateKind::CNOT) {
            std::size_t cb = bit(g.operands[0]);
            std::size_t tb = bit(g.operands[1]);
            for (std::size_t x = 0; x < dim; x++) {
                if ((x & cb) && !(x & tb)) {
                    std::swap(state[x], state[x | tb]);
                }
            }
            continue;
        }
        const CMat &u = g.kind == GateKind::H ? h : t;
        std::size_t qb = bit(g.operands[0]);
        for (std::size_t x = 0; x < dim; x++) {
            if (x & qb) {
                continue;
            }
            cdouble a0 = state[x];
            cdouble a1 = state[x | qb];
            state[x] = u(0, 0) * a0 + u(0, 1) * a1;
            state[x | qb] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
    return state;
}

// ---------------------------------------------------------------- lifted

namespace {

const char *kind_name(GateKind k) {
    return k == GateKind::H ? "H" : k == GateKind::T ? "T" : "CNOT";
}

/// Runs the pipeline and leaves the final joint state in `state`.
RunReport run_pipeline(const CircuitSpec &c, const RusConfig &cfg, const LiftedSystem &sys, const RunOptions &opts,
                       Rng &rng, JointState &state) {
    RunReport report;
    report.seed = cfg.seed;
    RusConfig init_cfg{opts.init_iters.value_or(cfg.max_iters), cfg.seed};

    auto absorb = [&report, &state](ProtocolOutcome &&out) {
        report.total_iterations += out.iters_used;
        report.total_elementary_ops += out.elementary_ops;
        state = std::move(out.final_state);
        return out.success;
    };

    state = sys.classical_start();
    for (int pair = 1; pair <= c.n; pair++) {
        auto out = initialize_pair(std::move(state), sys, pair, init_cfg, rng);
        report.init_iters.push_back(out.iters_used);
        if (!absorb(std::move(out))) {
            report.failure = "init " + std::to_string(pair);
            return report;
        }
    }

    for (std::size_t k = 0; k < c.gates.size(); k++) {
        const auto &g = c.gates[k];
        int pair = g.operands[0] + 1;
        ProtocolOutcome out;
        switch (g.kind) {
            case GateKind::H:
                out = rus_hadamard(std::move(state), sys, pair, cfg, rng);
                break;
            case GateKind::T:
                out = rus_t(std::move(state), sys, pair, cfg, rng);
                break;
            case GateKind::CNOT:
                out = rus_cnot(std::move(state), sys, pair, g.operands[1] + 1, cfg, rng);
                break;
        }
        report.per_gate_iters.push_back(out.iters_used);
        std::string stage = out.failed_stage;
        if (!absorb(std::move(out))) {
            report.failure = "gate " + std::to_string(k) + " (" + kind_name(g.kind) + ")";
            if (!stage.empty()) {
                report.failure += " stage " + stage;
            }
            return report;
        }
    }
    report.success = true;
    return report;
}

}  // namespace

RunReport run_lifted(const CircuitSpec &c, const RusConfig &cfg, Variant variant, const RunOptions &opts) {
    c.validate();
    LiftedSystem sys(variant, c.n);
    Rng rng(cfg.seed);
    JointState state(1, 1);
    RunReport report = run_pipeline(c, cfg, sys, opts, rng, state);

    auto projection = project_logical(sys.encoding, state.target_state());
    report.final_logical_state = std::move(projection.logical);
    report.leakage = projection.leakage;
    if (report.final_logical_state.norm_squared() > 0) {
        report.reference_fidelity = fidelity_up_to_phase(report.final_logical_state, run_reference(c));
    }
    return report;
}

ShotReport run_shots(const CircuitSpec &c, const RusConfig &cfg, Variant variant, std::int64_t shots, int threads,
                     const RunOptions &opts) {
    c.validate();
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    const LiftedSystem sys(variant, c.n);
    int workers = static_cast<int>(std::min<std::int64_t>(std::max(1, threads), shots));

    struct ShotResult {
        bool success = false;
        std::string bits;
        std::int64_t ops = 0;
    };
    std::vector<ShotResult> results(static_cast<std::size_t>(shots));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int w) {
        try {
            for (std::int64_t shot = w; shot < shots; shot += workers) {
                Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(shot));
                JointState state(1, 1);
                RunReport r = run_pipeline(c, cfg, sys, opts, rng, state);
                ShotResult &out = results[static_cast<std::size_t>(shot)];
                out.ops = r.total_elementary_ops;
                out.success = r.success;
                if (!r.success) {
                    continue;
                }
                for (int pair = 1; pair <= c.n; pair++) {
                    auto m = measure_logical(state, sys, pair, rng);
                    out.bits.push_back(m.bit ? '1' : '0');
                    state = std::move(m.state);
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            failure = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; w++) {
            pool.emplace_back(work, w);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    ShotReport report;
    report.shots = shots;
    for (const auto &r : results) {
        report.total_elementary_ops += r.ops;
        if (r.success) {
            report.counts[r.bits]++;
        } else {
            report.failed_shots++;
        }
    }
    return report;
}

// ---------------------------------------------------------------- cost

CostEstimate estimate_cost(std::int64_t k, int n, double delta, double alpha) {
    if (k < 0) {
        throw std::invalid_argument("K must be nonnegative");
    }
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    if (!(alpha > 0)) {
        throw std::invalid_argument("alpha must be positive");
    }
    double m0 = std::log2(static_cast<double>(k + n) / delta);
    double total = alpha * static_cast<double>(2 * k + n) * m0;
    return {m0, total, delta <= kFirstOrderDeltaLimit};
}

}  // namespace liftedqc
