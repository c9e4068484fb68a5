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


#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liftedqc/analysis.h"
#include "liftedqc/circuit.h"
#include "liftedqc/protocols.h"
#include "liftedqc/verification.h"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace liftedqc;

namespace {

std::vector<cdouble> to_list(const CVec &v) {
    return {v.amplitudes().begin(), v.amplitudes().end()};
}

CircuitSpec as_circuit(const py::object &circuit) {
    if (py::isinstance<py::str>(circuit)) {
        return parse_circuit(circuit.cast<std::string>());
    }
    return circuit.cast<CircuitSpec>();
}

/// Runs one protocol on an encoded logical state and returns the decoded result.
py::dict apply_protocol(const std::string &name, const std::vector<cdouble> &logical, Variant variant,
                        std::uint64_t seed, int max_iters) {
    std::size_t dim = logical.size();
    int n = dim == 2 ? 1 : dim == 4 ? 2 : 0;
    if (n == 0) {
        throw std::invalid_argument("logical state must have dimension 2 or 4");
    }
    LiftedSystem sys(variant, n);
    RusConfig cfg{max_iters, seed};
    JointState s = sys.encoded(CVec(logical).normalized());
    ProtocolOutcome out;
    if (name == "H") {
        out = rus_hadamard(std::move(s), sys, 1, cfg);
    } else if (name == "T") {
        out = rus_t(std::move(s), sys, 1, cfg);
    } else if ((name == "CZ" || name == "CNOT") && n == 2) {
        out = name == "CZ" ? rus_cz(std::move(s), sys, 1, 2, cfg) : rus_cnot(std::move(s), sys, 1, 2, cfg);
    } else {
        throw std::invalid_argument("unknown protocol '" + name + "' for " + std::to_string(n) + " qubit(s)");
    }
    auto projection = project_logical(sys.encoding, out.final_state.target_state());
    std::vector<std::string> trace;
    for (const auto &e : out.trace) {
        trace.push_back(e.outcome);
    }
    return py::dict("success"_a = out.success, "iters_used"_a = out.iters_used,
                    "applied_label"_a = out.applied_label, "elementary_ops"_a = out.elementary_ops,
                    "trace"_a = trace, "corrections"_a = out.corrections,
                    "logical_state"_a = to_list(projection.logical), "leakage"_a = projection.leakage);
}

}  // namespace

PYBIND11_MODULE(liftedqc, m) {
    m.doc() = "Universal quantum computation with coherently controlled classical gates";

    py::enum_<Variant>(m, "Variant").value("parity", Variant::parity).value("swap", Variant::swap);

    py::enum_<GateKind>(m, "GateKind").value("H", GateKind::H).value("T", GateKind::T).value("CNOT", GateKind::CNOT);

    py::class_<CircuitGate>(m, "CircuitGate")
        .def_readonly("kind", &CircuitGate::kind)
        .def_readonly("operands", &CircuitGate::operands);

    py::class_<CircuitSpec>(m, "CircuitSpec")
        .def_readonly("n", &CircuitSpec::n)
        .def_readonly("gates", &CircuitSpec::gates)
        .def("__len__", &CircuitSpec::size)
        .def("__str__", &format_circuit);

    py::class_<RunReport>(m, "RunReport")
        .def_readonly("success", &RunReport::success)
        .def_readonly("init_iters", &RunReport::init_iters)
        .def_readonly("per_gate_iters", &RunReport::per_gate_iters)
        .def_readonly("total_iterations", &RunReport::total_iterations)
        .def_readonly("total_elementary_ops", &RunReport::total_elementary_ops)
        .def_property_readonly("final_logical_state",
                               [](const RunReport &r) { return to_list(r.final_logical_state); })
        .def_readonly("leakage", &RunReport::leakage)
        .def_readonly("reference_fidelity", &RunReport::reference_fidelity)
        .def_readonly("failure", &RunReport::failure)
        .def_readonly("seed", &RunReport::seed);

    py::class_<ShotReport>(m, "ShotReport")
        .def_readonly("counts", &ShotReport::counts)
        .def_readonly("shots", &ShotReport::shots)
        .def_readonly("failed_shots", &ShotReport::failed_shots)
        .def_readonly("total_elementary_ops", &ShotReport::total_elementary_ops);

    py::class_<MonteCarloEstimate>(m, "MonteCarloEstimate")
        .def_readonly("estimate", &MonteCarloEstimate::estimate)
        .def_readonly("stderr", &MonteCarloEstimate::stderr_)
        .def_readonly("successes", &MonteCarloEstimate::successes)
        .def_readonly("trials", &MonteCarloEstimate::trials);

    py::register_exception<CircuitParseError>(m, "CircuitParseError", PyExc_ValueError);

    m.def("parse_circuit", &parse_circuit, "text"_a);
    m.def(
        "run_reference", [](const py::object &c) { return to_list(run_reference(as_circuit(c))); }, "circuit"_a,
        "Direct state-vector simulation of a circuit (text or CircuitSpec).");
    m.def(
        "run_lifted",
        [](const py::object &c, std::uint64_t seed, int max_iters, Variant variant, std::optional<int> init_iters) {
            return run_lifted(as_circuit(c), RusConfig{max_iters, seed}, variant, RunOptions{init_iters});
        },
        "circuit"_a, "seed"_a = 0, "max_iters"_a = 40, "variant"_a = Variant::parity, "init_iters"_a = py::none(),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_shots",
        [](const py::object &c, std::int64_t shots, std::uint64_t seed, int max_iters, Variant variant, int threads) {
            CircuitSpec spec = as_circuit(c);
            py::gil_scoped_release release;
            return run_shots(spec, RusConfig{max_iters, seed}, variant, shots, threads);
        },
        "circuit"_a, "shots"_a, "seed"_a = 0, "max_iters"_a = 40, "variant"_a = Variant::parity, "threads"_a = 1);
    m.def("apply_protocol", &apply_protocol, "protocol"_a, "logical_state"_a, "variant"_a = Variant::parity,
          "seed"_a = 0, "max_iters"_a = 40);

    m.def(
        "estimate_cost",
        [](std::int64_t k, int n, double delta, double alpha) {
            auto c = estimate_cost(k, n, delta, alpha);
            return py::dict("m0"_a = c.m0, "M"_a = c.total_ops, "first_order_valid"_a = c.first_order_valid);
        },
        "K"_a, "n"_a, "delta"_a = 0.01, "alpha"_a = 1.0);
    m.def("success_prob_init", &success_prob_init, "m"_a);
    m.def("success_prob_gate", &success_prob_gate, "m"_a);
    m.def("walk_absorption_prob", &walk_absorption_prob, "k"_a);
    m.def("walk_matrix_power", &walk_matrix_power, "k"_a);
    m.def(
        "monte_carlo_success",
        [](const std::string &protocol, int m, std::int64_t trials, std::uint64_t seed, int threads) {
            Protocol p = parse_protocol(protocol);
            py::gil_scoped_release release;
            return monte_carlo_success(p, m, trials, seed, threads);
        },
        "protocol"_a, "m"_a, "trials"_a, "seed"_a = 0, "threads"_a = 1);
    m.def(
        "verify",
        [](Variant variant, int n, std::uint64_t seed) {
            py::list out;
            for (const auto &c : run_verification(variant, n, seed)) {
                out.append(py::dict("name"_a = c.name, "pass"_a = c.pass, "detail"_a = c.detail));
            }
            return out;
        },
        "variant"_a = Variant::parity, "n"_a = 2, "seed"_a = 0);
}
