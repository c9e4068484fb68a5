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

#include "liftedqc/encoding.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace liftedqc {

namespace {

constexpr double kPauliTol = 1e-12;

CMat pair_isometry(Variant variant) {
    double h = 1 / std::numbers::sqrt2;
    if (variant == Variant::parity) {
        CMat v(4, 2);
        v(0b10, 0) = h;
        v(0b11, 0) = -h;
        v(0b00, 1) = h;
        v(0b01, 1) = -h;
        return v;
    }
    CMat v(16, 2);
    v(0b1000, 0) = h;
    v(0b0100, 0) = -h;
    v(0b0010, 1) = h;
    v(0b0001, 1) = -h;
    return v;
}

CVec column(const CMat &m, std::size_t c) {
    CVec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        out[r] = m(r, c);
    }
    return out;
}

}  // namespace

LogicalEncoding::LogicalEncoding(Variant variant, int n) : variant_(variant), n_(n) {
    if (n < 1) {
        throw std::invalid_argument("encoding needs at least one logical qubit");
    }
    CMat pair = pair_isometry(variant);
    isometry_ = pair;
    for (int l = 2; l <= n; l++) {
        isometry_ = kron(isometry_, pair);
    }
}

CVec LogicalEncoding::pair_basis(int bit) const {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("logical bit must be 0 or 1");
    }
    return column(pair_isometry(variant_), static_cast<std::size_t>(bit));
}

std::uint32_t LogicalEncoding::start_bits() const {
    return variant_ == Variant::parity ? 0b10u : 0b1000u;
}

std::optional<int> LogicalEncoding::logical_bit_of(std::uint32_t pair_bits) const {
    CMat pair = pair_isometry(variant_);
    if (pair_bits >= pair.rows()) {
        return std::nullopt;
    }
    for (int bit = 0; bit < 2; bit++) {
        if (pair(pair_bits, static_cast<std::size_t>(bit)) != 0.0) {
            return bit;
        }
    }
    return std::nullopt;
}

CVec encode(const LogicalEncoding &enc, const CVec &logical) {
    if (logical.dim() != enc.logical_dim()) {
        throw std::invalid_argument("encode: logical state has the wrong dimension");
    }
    return enc.isometry() * logical;
}

LogicalProjection project_logical(const LogicalEncoding &enc, const CVec &physical) {
    if (physical.dim() != enc.physical_dim()) {
        throw std::invalid_argument("project_logical: physical state has the wrong dimension");
    }
    const CMat &v = enc.isometry();
    CVec logical(enc.logical_dim());
    for (std::size_t r = 0; r < v.rows(); r++) {
        if (physical[r] == 0.0) {
            continue;
        }
        for (std::size_t c = 0; c < v.cols(); c++) {
            logical[c] += std::conj(v(r, c)) * physical[r];
        }
    }
    double kept = logical.norm_squared();
    double leakage = std::clamp(physical.norm_squared() - kept, 0.0, 1.0);
    if (kept > 0) {
        logical *= 1.0 / std::sqrt(kept);
    }
    return {std::move(logical), leakage};
}

CMat logical_action(const LogicalEncoding &enc, const Permutation &gate) {
    if (gate.dim() != enc.physical_dim()) {
        throw std::invalid_argument("logical_action: gate does not act on the physical register");
    }
    const CMat &v = enc.isometry();
    CMat out(v.cols(), v.cols());
    for (std::size_t b = 0; b < v.cols(); b++) {
        CVec moved = gate.apply(column(v, b));
        for (std::size_t a = 0; a < v.cols(); a++) {
            cdouble acc = 0;
            for (std::size_t r = 0; r < v.rows(); r++) {
                acc += std::conj(v(r, a)) * moved[r];
            }
            out(a, b) = acc;
        }
    }
    return out;
}

double logical_leakage(const LogicalEncoding &enc, const Permutation &gate) {
    const CMat &v = enc.isometry();
    CMat restricted = logical_action(enc, gate);
    double worst = 0;
    for (std::size_t b = 0; b < v.cols(); b++) {
        CVec moved = gate.apply(column(v, b));
        CVec back = v * column(restricted, b);
        for (std::size_t r = 0; r < v.rows(); r++) {
            worst = std::max(worst, std::abs(moved[r] - back[r]));
        }
    }
    return worst;
}

CMat embed_single(const CMat &op, int qubit, int n) {
    if (qubit < 0 || qubit >= n) {
        throw std::out_of_range("embed_single: qubit out of range");
    }
    CMat out = qubit == 0 ? op : CMat::identity(2);
    for (int q = 1; q < n; q++) {
        out = kron(out, q == qubit ? op : CMat::identity(2));
    }
    return out;
}

bool PauliReport::all_pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const PauliCheck &c) { return c.pass; });
}

PauliReport verify_pauli_action(const LogicalEncoding &enc, const ClassicalGateSet &g) {
    PauliReport report;
    if (enc.variant() != g.variant() || enc.n() != g.n_pairs() || enc.physical_dim() != g.target_dim()) {
        std::stringstream ss;
        ss << variant_name(enc.variant()) << " encoding (dim " << enc.physical_dim() << ") vs "
           << variant_name(g.variant()) << " gate set (dim " << g.target_dim() << ")";
        report.checks.push_back({"dimension-compatibility", false, 1.0, ss.str()});
        return report;
    }

    CMat x = gates::pauli_x();
    CMat minus_z = -1.0 * gates::pauli_z();
    for (int l = 1; l <= g.n_pairs(); l++) {
        struct Expect {
            const ClassicalGate *gate;
            CMat ideal;
            const char *name;
        };
        Expect expects[] = {
            {&g.g1(l), embed_single(x, l - 1, enc.n()), "X"},
            {&g.g2(l), embed_single(minus_z, l - 1, enc.n()), "-Z"},
        };
        for (const auto &e : expects) {
            double err = logical_action(enc, e.gate->perm).max_abs_diff(e.ideal);
            double leak = logical_leakage(enc, e.gate->perm);
            double worst = std::max(err, leak);
            std::stringstream ss;
            ss << "action error " << err << ", leakage " << leak;
            report.checks.push_back({e.gate->label + " = " + e.name, worst <= kPauliTol, worst, ss.str()});
        }
    }
    return report;
}

}  // namespace liftedqc
