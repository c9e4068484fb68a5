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

#include "liftedqc/verification.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "liftedqc/analysis.h"
#include "liftedqc/encoding.h"
#include "liftedqc/protocols.h"

namespace liftedqc {

namespace {

std::string fmt(double v) {
    std::stringstream ss;
    ss.precision(3);
    ss << v;
    return ss.str();
}

/// Random 2x2 unitary from the QR-free parameterization
/// e^{i phi} [[a, -conj(b)], [b, conj(a)]].
CMat random_u2(Rng &rng) {
    CVec ab = random_state(2, rng);
    cdouble phase = std::polar(1.0, 2 * 3.141592653589793 * rng.uniform());
    return CMat{{phase * ab[0], -phase * std::conj(ab[1])}, {phase * ab[1], phase * std::conj(ab[0])}};
}

void add(std::vector<CheckResult> &out, std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace

std::vector<CheckResult> run_verification(Variant variant, int n, std::uint64_t seed) {
    std::vector<CheckResult> out;
    LiftedSystem sys(variant, n);
    const LogicalEncoding &enc = sys.encoding;
    const ClassicalGateSet &g = sys.gates;
    Rng rng(seed);
    const std::string tag = std::string(variant_name(variant)) + " n=" + std::to_string(n) + ": ";

    // Pauli action of every classical gate on the code.
    for (const auto &check : verify_pauli_action(enc, g).checks) {
        add(out, tag + check.name, check.pass, check.detail);
    }

    // Encoded basis is orthonormal.
    {
        const CMat &v = enc.isometry();
        double err = (v.adjoint() * v).max_abs_diff(CMat::identity(enc.logical_dim()));
        add(out, tag + "encoded basis orthonormal", err <= 1e-12, "max error " + fmt(err));
    }

    // G2 G1 = -iY exactly, and {1, G1, G2, G2G1} is P/Z4.
    for (int l = 1; l <= n; l++) {
        CMat g1 = logical_action(enc, g.g1(l).perm);
        CMat g2 = logical_action(enc, g.g2(l).perm);
        CMat minus_iy = cdouble(0, -1) * embed_single(gates::pauli_y(), l - 1, n);
        double err = (g2 * g1).max_abs_diff(minus_iy);
        add(out, tag + "G2@" + std::to_string(l) + " G1@" + std::to_string(l) + " = -iY", err <= 1e-12,
            "max error " + fmt(err));

        std::array<CMat, 2> gens = {g1, g2};
        auto group = enumerate_group(gens);
        std::array<CMat, 2> pauli_gens = {embed_single(gates::pauli_x(), l - 1, n),
                                          embed_single(gates::pauli_z(), l - 1, n)};
        auto pauli = enumerate_group(pauli_gens);
        bool iso = group.size() == 4 && isomorphic_tables(cayley_table(group), cayley_table(pauli));
        add(out, tag + "classical gates on pair " + std::to_string(l) + " furnish P/Z4", iso,
            std::to_string(group.size()) + " phase classes");
    }

    // Gates on distinct pairs commute exactly; every gate is a bijection.
    {
        bool commute = true;
        for (int k = 1; k <= n; k++) {
            for (int l = k + 1; l <= n; l++) {
                for (const auto *a : {&g.g1(k), &g.g2(k)}) {
                    for (const auto *b : {&g.g1(l), &g.g2(l)}) {
                        commute = commute && (a->perm * b->perm == b->perm * a->perm);
                    }
                }
            }
        }
        add(out, tag + "gates on distinct pairs commute", commute, n == 1 ? "single pair" : "exact");

        bool perms = true;
        for (const auto &gate : g.gates()) {
            if (gate.perm.dim() <= 256) {
                perms = perms && gate.perm.matrix().is_permutation();
            }
        }
        add(out, tag + "classical gates are permutation matrices", perms, std::to_string(g.gates().size()) + " gates");
    }

    // Classical gates keep the code invariant.
    {
        double worst = 0;
        for (const auto &gate : g.gates()) {
            worst = std::max(worst, logical_leakage(enc, gate.perm));
        }
        add(out, tag + "classical gates preserve the logical subspace", worst <= 1e-12, "max leakage " + fmt(worst));
    }

    // controlled_apply maps joint basis states to joint basis states and
    // preserves the norm.
    {
        bool basis_ok = true;
        std::size_t total = g.control_dim() * g.target_dim();
        std::size_t stride = std::max<std::size_t>(1, total / 64);
        for (std::size_t idx = 0; idx < total; idx += stride) {
            JointState s(g.control_dim(), g.target_dim(), CVec::basis(total, idx));
            CVec a = controlled_apply(s, g).amplitudes();
            std::size_t ones = 0;
            for (std::size_t k = 0; k < total; k++) {
                if (a[k] == 1.0) {
                    ones++;
                } else if (a[k] != 0.0) {
                    basis_ok = false;
                }
            }
            basis_ok = basis_ok && ones == 1;
        }
        JointState r(g.control_dim(), g.target_dim(), random_state(total, rng));
        double drift = std::abs(controlled_apply(r, g).amplitudes().norm_squared() - 1.0);
        add(out, tag + "controlled interaction is a basis permutation", basis_ok && drift <= 1e-12,
            "norm drift " + fmt(drift));
    }

    // Lift step: branch probabilities sum to 1 and each branch is O_j psi.
    {
        double worst_sum = 0;
        double worst_op = 0;
        for (int trial = 0; trial < 8; trial++) {
            int pair = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            std::array<std::size_t, 2> sub = {rng() % 2 ? ControlBasis::g1(pair) : 0, ControlBasis::g2(pair)};
            CMat ua = random_u2(rng);
            CMat ub = random_u2(rng);
            CVec psi = random_state(g.target_dim(), rng);
            JointState s = JointState::product(g.control_dim(), sub[0], psi);
            JointState pre = lift_step_unmeasured(s, ua, ub, sub, g);
            double total = 0;
            for (std::size_t c = 0; c < g.control_dim(); c++) {
                total += pre.block_norm_squared(c);
            }
            worst_sum = std::max(worst_sum, std::abs(total - 1.0));
            for (std::size_t j = 0; j < 2; j++) {
                CVec expected(g.target_dim());
                for (std::size_t i = 0; i < 2; i++) {
                    CVec moved = g.gate(sub[i]).perm.apply(psi);
                    expected += (ub(j, i) * ua(i, 0)) * moved;
                }
                CVec got = pre.block(sub[j]);
                for (std::size_t t = 0; t < g.target_dim(); t++) {
                    worst_op = std::max(worst_op, std::abs(got[t] - expected[t]));
                }
            }
        }
        add(out, tag + "lift-step probabilities sum to 1", worst_sum <= 1e-10, "max deviation " + fmt(worst_sum));
        add(out, tag + "lift-step branches equal O_j psi", worst_op <= 1e-10, "max error " + fmt(worst_op));
    }

    // Protocols stay inside the code.
    {
        RusConfig cfg{40, seed};
        double worst = 0;
        bool all_success = true;
        auto leak = [&](const ProtocolOutcome &o) {
            all_success = all_success && o.success;
            worst = std::max(worst, project_logical(enc, o.final_state.target_state()).leakage);
        };
        CVec psi = random_state(enc.logical_dim(), rng);
        leak(rus_hadamard(sys.encoded(psi), sys, 1, cfg, rng));
        leak(rus_t(sys.encoded(psi), sys, 1, cfg, rng));
        if (n >= 2) {
            leak(rus_cz(sys.encoded(psi), sys, 1, 2, cfg, rng));
            leak(rus_cnot(sys.encoded(psi), sys, 2, 1, cfg, rng));
        }
        add(out, tag + "protocols keep leakage below 1e-10", all_success && worst <= 1e-10,
            "max leakage " + fmt(worst));
    }

    // Protocol groups: 4 / 8 / 4 phase classes.
    {
        CMat h = gates::hadamard();
        std::array<CMat, 2> gh = {h, logical_ops::h_tilde()};
        std::array<CMat, 1> gt = {gates::t_gate()};
        std::array<CMat, 2> gcz = {logical_ops::cz(), logical_ops::cz_tilde()};
        std::size_t nh = enumerate_group(gh).size();
        std::size_t nt = enumerate_group(gt).size();
        auto cz_group = enumerate_group(gcz);
        std::array<CMat, 2> pz = {gates::pauli_x(), gates::pauli_z()};
        bool cz_iso = isomorphic_tables(cayley_table(cz_group), cayley_table(enumerate_group(pz)));
        add(out, tag + "group sizes G_H/G_T/G_CNOT = 4/8/4", nh == 4 && nt == 8 && cz_group.size() == 4,
            std::to_string(nh) + "/" + std::to_string(nt) + "/" + std::to_string(cz_group.size()));
        add(out, tag + "G_CNOT is isomorphic to P/Z4", cz_iso, cz_iso ? "isomorphism found" : "no isomorphism");
    }

    // Walk formulas.
    {
        double worst = 0;
        for (int k = 0; k <= 20; k++) {
            double expect = (k % 2 == 1) ? std::ldexp(1.0, -(k + 1) / 2) : 0.0;
            worst = std::max(worst, std::abs(walk_absorption_prob(k) - expect));
        }
        double sum_err = 0;
        for (int m = 1; m <= 20; m++) {
            double total = 0;
            for (int k = 1; k <= m; k++) {
                total += walk_absorption_prob(k);
            }
            sum_err = std::max(sum_err, std::abs(total - success_prob_gate(m)));
        }
        add(out, tag + "walk absorption matches closed form", worst <= 1e-12 && sum_err <= 1e-12,
            "max error " + fmt(std::max(worst, sum_err)));
    }
    return out;
}

}  // namespace liftedqc
