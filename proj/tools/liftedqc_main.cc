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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "liftedqc/analysis.h"
#include "liftedqc/circuit.h"
#include "liftedqc/verification.h"

using namespace liftedqc;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 2;

struct CliConfig {
    std::string circuit_path;
    std::string variant = "parity";
    std::uint64_t seed = 0;
    int max_iters = 40;
    int init_iters = 0;
    std::int64_t shots = 0;
    bool emit_state = false;
    int n = 2;
    std::string protocol = "H";
    int m = 4;
    std::int64_t trials = 100000;
    int steps = 10;
    std::int64_t k = 0;
    double delta = 0.01;
    double alpha = 1.0;
    std::string output = "json";
    int threads = 1;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

const char *gate_name(GateKind k) {
    return k == GateKind::H ? "H" : k == GateKind::T ? "T" : "CNOT";
}

int cmd_run(const CliConfig &cfg) {
    CircuitSpec circuit = parse_circuit(read_file(cfg.circuit_path));
    Variant variant = parse_variant(cfg.variant);
    RusConfig rus{cfg.max_iters, cfg.seed};
    RunOptions opts;
    if (cfg.init_iters > 0) {
        opts.init_iters = cfg.init_iters;
    }
    int threads = resolve_threads(cfg.threads);

    RunReport report = run_lifted(circuit, rus, variant, opts);
    ordered_json samples = nullptr;
    if (cfg.shots > 0) {
        ShotReport shots = run_shots(circuit, rus, variant, cfg.shots, threads, opts);
        samples = ordered_json::object();
        for (const auto &[bits, count] : shots.counts) {
            samples[bits] = count;
        }
        if (shots.failed_shots > 0) {
            samples["failed"] = shots.failed_shots;
        }
    }

    if (cfg.output == "csv") {
        std::cout << "index,gate,operands,iterations\n";
        for (std::size_t k = 0; k < report.per_gate_iters.size(); k++) {
            const auto &g = circuit.gates[k];
            std::string ops;
            for (int q : g.operands) {
                ops += (ops.empty() ? "" : " ") + std::to_string(q);
            }
            std::cout << k << "," << gate_name(g.kind) << "," << ops << "," << report.per_gate_iters[k] << "\n";
        }
    } else {
        ordered_json j;
        j["command"] = "run";
        j["seed"] = cfg.seed;
        j["variant"] = cfg.variant;
        j["n"] = circuit.n;
        j["K"] = circuit.size();
        j["max_iters"] = cfg.max_iters;
        j["success"] = report.success;
        if (!report.failure.empty()) {
            j["failure"] = report.failure;
        }
        j["init_iters"] = report.init_iters;
        j["per_gate_iters"] = report.per_gate_iters;
        j["total_iterations"] = report.total_iterations;
        j["total_elementary_ops"] = report.total_elementary_ops;
        j["reference_fidelity"] = report.reference_fidelity;
        j["leakage"] = report.leakage;
        j["samples"] = samples;
        if (cfg.emit_state) {
            ordered_json amps = ordered_json::array();
            for (const auto &a : report.final_logical_state.amplitudes()) {
                amps.push_back({a.real(), a.imag()});
            }
            j["final_state"] = amps;
        }
        std::cout << j.dump(2) << "\n";
    }
    return report.success ? kExitOk : kExitBudget;
}

int cmd_verify(const CliConfig &cfg) {
    std::vector<Variant> variants;
    if (cfg.variant == "both") {
        variants = {Variant::parity, Variant::swap};
    } else {
        variants = {parse_variant(cfg.variant)};
    }
    std::vector<CheckResult> checks;
    for (Variant v : variants) {
        auto part = run_verification(v, cfg.n, cfg.seed);
        checks.insert(checks.end(), part.begin(), part.end());
    }
    bool all_pass = std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });

    if (cfg.output == "csv") {
        std::cout << "check,pass,detail\n";
        for (const auto &c : checks) {
            std::cout << csv_escape(c.name) << "," << (c.pass ? "pass" : "FAIL") << "," << csv_escape(c.detail)
                      << "\n";
        }
    } else {
        ordered_json j;
        j["command"] = "verify";
        j["seed"] = cfg.seed;
        j["n"] = cfg.n;
        j["checks"] = ordered_json::array();
        for (const auto &c : checks) {
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        j["all_pass"] = all_pass;
        std::cout << j.dump(2) << "\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_prob(const CliConfig &cfg) {
    Protocol protocol = parse_protocol(cfg.protocol);
    double closed = protocol == Protocol::init ? success_prob_init(cfg.m) : success_prob_gate(cfg.m);
    auto mc = monte_carlo_success(protocol, cfg.m, cfg.trials, cfg.seed, resolve_threads(cfg.threads));
    bool within = std::abs(mc.estimate - closed) <= 3 * mc.stderr_;

    if (cfg.output == "csv") {
        std::cout << "protocol,m,trials,closed_form,estimate,stderr,within_3sigma\n";
        std::cout << protocol_name(protocol) << "," << cfg.m << "," << cfg.trials << "," << closed << ","
                  << mc.estimate << "," << mc.stderr_ << "," << (within ? "true" : "false") << "\n";
    } else {
        ordered_json j;
        j["command"] = "prob";
        j["seed"] = cfg.seed;
        j["protocol"] = protocol_name(protocol);
        j["m"] = cfg.m;
        j["trials"] = cfg.trials;
        j["closed_form"] = closed;
        j["estimate"] = mc.estimate;
        j["stderr"] = mc.stderr_;
        j["successes"] = mc.successes;
        j["within_3sigma"] = within;
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_walk(const CliConfig &cfg) {
    if (cfg.steps < 1) {
        throw std::invalid_argument("--steps must be at least 1");
    }
    ordered_json rows = ordered_json::array();
    double cumulative = 0;
    if (cfg.output == "csv") {
        std::cout << "k,absorption,cumulative\n";
    }
    for (int k = 1; k <= cfg.steps; k++) {
        double p = walk_absorption_prob(k);
        cumulative += p;
        if (cfg.output == "csv") {
            std::cout << k << "," << p << "," << cumulative << "\n";
        }
        rows.push_back({{"k", k}, {"absorption", p}, {"cumulative", cumulative}});
    }
    if (cfg.output != "csv") {
        ordered_json j;
        j["command"] = "walk";
        j["steps"] = rows;
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_cost(const CliConfig &cfg) {
    CostEstimate est = estimate_cost(cfg.k, cfg.n, cfg.delta, cfg.alpha);
    if (cfg.output == "csv") {
        std::cout << "K,n,delta,alpha,m0,M,first_order_valid\n";
        std::cout << cfg.k << "," << cfg.n << "," << cfg.delta << "," << cfg.alpha << "," << est.m0 << ","
                  << est.total_ops << "," << (est.first_order_valid ? "true" : "false") << "\n";
    } else {
        ordered_json j;
        j["command"] = "cost";
        j["K"] = cfg.k;
        j["n"] = cfg.n;
        j["delta"] = cfg.delta;
        j["alpha"] = cfg.alpha;
        j["m0"] = est.m0;
        j["M"] = est.total_ops;
        j["first_order_valid"] = est.first_order_valid;
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Universal quantum computation with coherently controlled classical gates"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&cfg](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed (default 0)");
        sub->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_threads = [&cfg](CLI::App *sub) {
        sub->add_option("--threads", cfg.threads, "Worker threads (LIFTEDQC_THREADS overrides)")
            ->check(CLI::PositiveNumber);
    };

    auto *run = app.add_subcommand("run", "Execute a circuit through the lifted model");
    run->add_option("--circuit", cfg.circuit_path, "Circuit file")->required();
    run->add_option("--variant", cfg.variant, "Encoding variant")->check(CLI::IsMember({"parity", "swap"}));
    run->add_option("--max-iters", cfg.max_iters, "Iteration budget per gate stage")->check(CLI::PositiveNumber);
    run->add_option("--init-iters", cfg.init_iters, "Iteration budget per qubit initialization (default: max-iters)")
        ->check(CLI::PositiveNumber);
    run->add_option("--shots", cfg.shots, "Re-run the pipeline this many times and report logical samples");
    run->add_flag("--state", cfg.emit_state, "Include the final logical state in the report");
    add_common(run);
    add_threads(run);

    auto *verify = app.add_subcommand("verify", "Check encoding, group and lift-model invariants");
    verify->add_option("--variant", cfg.variant, "Encoding variant")
        ->check(CLI::IsMember({"parity", "swap", "both"}))
        ->default_str("both");
    verify->add_option("--n", cfg.n, "Logical qubits")->check(CLI::Range(1, 4));
    add_common(verify);

    auto *prob = app.add_subcommand("prob", "Closed-form vs Monte Carlo success probability");
    prob->add_option("--protocol", cfg.protocol, "init, H, T or CZ")->required();
    prob->add_option("--m", cfg.m, "Iteration budget")->check(CLI::PositiveNumber);
    prob->add_option("--trials", cfg.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    add_common(prob);
    add_threads(prob);

    auto *walk = app.add_subcommand("walk", "First-passage probabilities of the T-gate walk");
    walk->add_option("--steps", cfg.steps, "Largest step k");
    add_common(walk);

    auto *cost = app.add_subcommand("cost", "Evaluate the gate-count cost model");
    cost->add_option("--K", cfg.k, "Circuit size")->required();
    cost->add_option("--n", cfg.n, "Logical qubits")->required();
    cost->add_option("--delta", cfg.delta, "Target failure probability");
    cost->add_option("--alpha", cfg.alpha, "Gates per iteration");
    add_common(cost);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }
    if (verify->parsed() && verify->count("--variant") == 0) {
        cfg.variant = "both";
    }

    try {
        if (run->parsed()) {
            return cmd_run(cfg);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg);
        }
        if (prob->parsed()) {
            return cmd_prob(cfg);
        }
        if (walk->parsed()) {
            return cmd_walk(cfg);
        }
        if (cost->parsed()) {
            return cmd_cost(cfg);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
