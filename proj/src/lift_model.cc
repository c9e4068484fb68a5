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

#include "liftedqc/lift_model.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace liftedqc {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto y : image_) {
        if (y >= image_.size() || seen[y]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[y] = true;
    }
}

Permutation Permutation::identity(std::size_t dim) {
    std::vector<std::uint32_t> image(dim);
    for (std::size_t k = 0; k < dim; k++) {
        image[k] = static_cast<std::uint32_t>(k);
    }
    return Permutation(std::move(image));
}

CVec Permutation::apply(const CVec &v) const {
    if (v.dim() != dim()) {
        throw std::invalid_argument("permutation: dimension mismatch");
    }
    CVec out(dim());
    for (std::size_t x = 0; x < dim(); x++) {
        out[image_[x]] = v[x];
    }
    return out;
}

Permutation Permutation::operator*(const Permutation &other) const {
    if (other.dim() != dim()) {
        throw std::invalid_argument("permutation: dimension mismatch");
    }
    std::vector<std::uint32_t> image(dim());
    for (std::size_t x = 0; x < dim(); x++) {
        image[x] = image_[other.image_[x]];
    }
    return Permutation(std::move(image));
}

// ---------------------------------------------------------------- ControlBasis

ControlBasis::ControlBasis(int n_pairs) : n_pairs_(n_pairs) {
    if (n_pairs < 1) {
        throw std::invalid_argument("need at least one pair");
    }
    labels_.push_back("1");
    for (int l = 1; l <= n_pairs; l++) {
        labels_.push_back("G1@" + std::to_string(l));
        labels_.push_back("G2@" + std::to_string(l));
    }
    for (std::size_t k = 0; k < labels_.size(); k++) {
        index_.emplace(labels_[k], k);
    }
}

std::size_t ControlBasis::index_of(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        throw std::invalid_argument("unknown control label '" + std::string(label) + "'");
    }
    return it->second;
}

std::string_view variant_name(Variant v) {
    return v == Variant::parity ? "parity" : "swap";
}

Variant parse_variant(std::string_view name) {
    if (name == "parity") {
        return Variant::parity;
    }
    if (name == "swap") {
        return Variant::swap;
    }
    throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected parity or swap)");
}

// ---------------------------------------------------------------- ClassicalGateSet

ClassicalGateSet::ClassicalGateSet(Variant variant, int n_pairs, std::vector<ClassicalGate> gates)
    : variant_(variant), control_(n_pairs), gates_(std::move(gates)) {
    if (gates_.size() != control_.dim()) {
        throw std::invalid_argument("gate set must hold 2n+1 gates");
    }
    if (gates_.front().label != "1" || gates_.front().perm != Permutation::identity(gates_.front().perm.dim())) {
        throw std::invalid_argument("first gate must be the identity labelled '1'");
    }
    for (std::size_t k = 0; k < gates_.size(); k++) {
        if (gates_[k].perm.dim() != target_dim()) {
            throw std::invalid_argument("gate dimensions disagree");
        }
        if (gates_[k].label != control_.label_of(k)) {
            throw std::invalid_argument("gate labels must follow the control basis ordering");
        }
    }
    if (target_dim() != (std::size_t{1} << target_qubits())) {
        throw std::invalid_argument("target dimension does not match the variant");
    }
}

int ClassicalGateSet::pair_shift(int pair) const {
    check_pair(pair);
    return target_qubits() - pair * qubits_per_pair();
}

void ClassicalGateSet::check_pair(int pair) const {
    if (pair < 1 || pair > n_pairs()) {
        std::stringstream ss;
        ss << "pair " << pair << " out of range 1.." << n_pairs();
        throw std::out_of_range(ss.str());
    }
}

namespace {

std::size_t checked_target_dim(int qubits) {
    if (qubits >= 32 || (std::size_t{1} << qubits) > max_dimension()) {
        throw DimensionOverflow("target of " + std::to_string(qubits) + " qubits exceeds the configured maximum");
    }
    return std::size_t{1} << qubits;
}

/// Builds a permutation of the whole target from a map on the `width` bits
/// starting at bit offset `shift`.
Permutation local_permutation(std::size_t dim, int shift, int width,
                              const std::function<std::uint32_t(std::uint32_t)> &local) {
    std::uint32_t mask = (1u << width) - 1;
    std::vector<std::uint32_t> image(dim);
    for (std::size_t x = 0; x < dim; x++) {
        auto xs = static_cast<std::uint32_t>(x);
        std::uint32_t bits = (xs >> shift) & mask;
        image[x] = (xs & ~(mask << shift)) | (local(bits) << shift);
    }
    return Permutation(std::move(image));
}

/// Swaps bits i and j (0 = most significant) of a `width`-bit word.
std::uint32_t swap_bits(std::uint32_t w, int width, int i, int j) {
    int bi = width - 1 - i;
    int bj = width - 1 - j;
    std::uint32_t a = (w >> bi) & 1;
    std::uint32_t b = (w >> bj) & 1;
    if (a != b) {
        w ^= (1u << bi) | (1u << bj);
    }
    return w;
}

ClassicalGateSet build_from_local(Variant variant, int n, int width,
                                  const std::function<std::uint32_t(std::uint32_t)> &g1,
                                  const std::function<std::uint32_t(std::uint32_t)> &g2) {
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    int qubits = n * width;
    std::size_t dim = checked_target_dim(qubits);
    std::vector<ClassicalGate> gates;
    gates.push_back({"1", Permutation::identity(dim)});
    for (int l = 1; l <= n; l++) {
        int shift = qubits - l * width;
        gates.push_back({"G1@" + std::to_string(l), local_permutation(dim, shift, width, g1)});
        gates.push_back({"G2@" + std::to_string(l), local_permutation(dim, shift, width, g2)});
    }
    return ClassicalGateSet(variant, n, std::move(gates));
}

}  // namespace

ClassicalGateSet build_parity_gateset(int n) {
    // Pair bits are x1 x2 with x1 the high bit.
    auto not1 = [](std::uint32_t b) { return b ^ 0b10u; };
    auto cnot = [](std::uint32_t b) { return (b & 0b10u) ? b ^ 0b01u : b; };
    return build_from_local(Variant::parity, n, 2, not1, cnot);
}

ClassicalGateSet build_swap_gateset(int n) {
    auto swap13_24 = [](std::uint32_t b) { return swap_bits(swap_bits(b, 4, 0, 2), 4, 1, 3); };
    auto swap12 = [](std::uint32_t b) { return swap_bits(b, 4, 0, 1); };
    return build_from_local(Variant::swap, n, 4, swap13_24, swap12);
}

ClassicalGateSet build_gateset(Variant variant, int n) {
    return variant == Variant::parity ? build_parity_gateset(n) : build_swap_gateset(n);
}

// ---------------------------------------------------------------- JointState

JointState::JointState(std::size_t control_dim, std::size_t target_dim)
    : control_dim_(control_dim), target_dim_(target_dim), amps_(control_dim * target_dim) {
}

JointState::JointState(std::size_t control_dim, std::size_t target_dim, CVec amplitudes)
    : control_dim_(control_dim), target_dim_(target_dim), amps_(std::move(amplitudes)) {
    if (amps_.dim() != control_dim * target_dim) {
        throw std::invalid_argument("joint state: amplitude count does not match dimensions");
    }
}

JointState JointState::product(std::size_t control_dim, std::size_t control_index, const CVec &target) {
    if (control_index >= control_dim) {
        throw std::out_of_range("control index out of range");
    }
    JointState s(control_dim, target.dim());
    for (std::size_t t = 0; t < target.dim(); t++) {
        s.at(control_index, t) = target[t];
    }
    return s;
}

CVec JointState::block(std::size_t control) const {
    CVec out(target_dim_);
    for (std::size_t t = 0; t < target_dim_; t++) {
        out[t] = at(control, t);
    }
    return out;
}

double JointState::block_norm_squared(std::size_t control) const {
    double total = 0;
    for (std::size_t t = 0; t < target_dim_; t++) {
        total += std::norm(at(control, t));
    }
    return total;
}

std::size_t JointState::control_basis_index(double tol) const {
    std::size_t found = control_dim_;
    for (std::size_t c = 0; c < control_dim_; c++) {
        if (block_norm_squared(c) > tol) {
            if (found != control_dim_) {
                throw std::logic_error("control register is not in a computational basis state");
            }
            found = c;
        }
    }
    if (found == control_dim_) {
        throw std::logic_error("joint state is zero");
    }
    return found;
}

CVec JointState::target_state() const {
    return block(control_basis_index());
}

// ---------------------------------------------------------------- operations

namespace {

void check_compatible(const JointState &s, const ClassicalGateSet &g) {
    if (s.control_dim() != g.control_dim() || s.target_dim() != g.target_dim()) {
        throw std::invalid_argument("joint state dimensions do not match the gate set");
    }
}

}  // namespace

JointState controlled_apply(const JointState &s, const ClassicalGateSet &g) {
    check_compatible(s, g);
    JointState out(s.control_dim(), s.target_dim());
    for (std::size_t c = 0; c < s.control_dim(); c++) {
        const Permutation &p = g.gate(c).perm;
        for (std::size_t t = 0; t < s.target_dim(); t++) {
            out.at(c, p(t)) = s.at(c, t);
        }
    }
    return out;
}

JointState control_unitary(const JointState &s, const CMat &u, std::span<const std::size_t> subspace) {
    if (!u.square() || u.rows() != subspace.size()) {
        throw std::invalid_argument("control_unitary: matrix size does not match the subspace");
    }
    if (!u.is_unitary()) {
        throw std::invalid_argument("control_unitary: matrix is not unitary");
    }
    std::vector<bool> used(s.control_dim(), false);
    for (auto c : subspace) {
        if (c >= s.control_dim() || used[c]) {
            throw std::invalid_argument("control_unitary: invalid or repeated control index");
        }
        used[c] = true;
    }

    JointState out = s;
    std::size_t k = subspace.size();
    for (std::size_t t = 0; t < s.target_dim(); t++) {
        for (std::size_t r = 0; r < k; r++) {
            cdouble acc = 0;
            for (std::size_t c = 0; c < k; c++) {
                acc += u(r, c) * s.at(subspace[c], t);
            }
            out.at(subspace[r], t) = acc;
        }
    }
    return out;
}

JointState control_unitary(const JointState &s, const CMat &u, const ControlBasis &basis,
                           std::span<const std::string> labels) {
    std::vector<std::size_t> subspace;
    for (const auto &label : labels) {
        subspace.push_back(basis.index_of(label));
    }
    return control_unitary(s, u, subspace);
}

JointState relabel_control(const JointState &s, int from_pair, int to_pair) {
    int n_pairs = static_cast<int>((s.control_dim() - 1) / 2);
    for (int p : {from_pair, to_pair}) {
        if (p < 1 || p > n_pairs) {
            throw std::out_of_range("relabel_control: pair " + std::to_string(p) + " out of range");
        }
    }
    std::vector<std::size_t> image(s.control_dim());
    for (std::size_t c = 0; c < image.size(); c++) {
        image[c] = c;
    }
    std::swap(image[ControlBasis::g1(from_pair)], image[ControlBasis::g1(to_pair)]);
    std::swap(image[ControlBasis::g2(from_pair)], image[ControlBasis::g2(to_pair)]);

    JointState out(s.control_dim(), s.target_dim());
    for (std::size_t c = 0; c < s.control_dim(); c++) {
        for (std::size_t t = 0; t < s.target_dim(); t++) {
            out.at(image[c], t) = s.at(c, t);
        }
    }
    return out;
}

JointState reset_control(const JointState &s, std::size_t control_index) {
    return JointState::product(s.control_dim(), control_index, s.target_state());
}

ControlOutcome measure_control(const JointState &s, const ControlBasis &basis, Rng &rng) {
    if (basis.dim() != s.control_dim()) {
        throw std::invalid_argument("measure_control: basis does not match the state");
    }
    std::vector<double> probs(s.control_dim());
    for (std::size_t c = 0; c < s.control_dim(); c++) {
        probs[c] = s.block_norm_squared(c);
    }
    std::size_t k = sample_index(probs, rng);
    if (probs[k] <= 0) {
        throw std::logic_error("measure_control: sampled a zero-probability branch");
    }
    CVec target = s.block(k);
    target *= 1.0 / std::sqrt(probs[k]);
    return {k, basis.label_of(k), JointState::product(s.control_dim(), k, target), probs[k]};
}

ClassicalOutcome measure_target_classical(const JointState &s, const ClassicalGateSet &g, int pair, Rng &rng) {
    check_compatible(s, g);
    int shift = g.pair_shift(pair);
    int width = g.qubits_per_pair();
    std::uint32_t mask = (1u << width) - 1;

    std::vector<double> probs(std::size_t{1} << width, 0.0);
    for (std::size_t c = 0; c < s.control_dim(); c++) {
        for (std::size_t t = 0; t < s.target_dim(); t++) {
            probs[(t >> shift) & mask] += std::norm(s.at(c, t));
        }
    }
    auto bits = static_cast<std::uint32_t>(sample_index(probs, rng));
    if (probs[bits] <= 0) {
        throw std::logic_error("measure_target_classical: sampled a zero-probability branch");
    }
    double scale = 1.0 / std::sqrt(probs[bits]);
    JointState out(s.control_dim(), s.target_dim());
    for (std::size_t c = 0; c < s.control_dim(); c++) {
        for (std::size_t t = 0; t < s.target_dim(); t++) {
            if (((t >> shift) & mask) == bits) {
                out.at(c, t) = s.at(c, t) * scale;
            }
        }
    }
    return {bits, std::move(out), probs[bits]};
}

JointState lift_step_unmeasured(const JointState &s, const CMat &u_a, const CMat &u_b,
                                std::span<const std::size_t> subspace, const ClassicalGateSet &g) {
    JointState out = control_unitary(s, u_a, subspace);
    out = controlled_apply(out, g);
    return control_unitary(out, u_b, subspace);
}

LiftStepResult lift_step(const JointState &s, const CMat &u_a, const CMat &u_b,
                         std::span<const std::size_t> subspace, const ClassicalGateSet &g, Rng &rng) {
    auto measured = measure_control(lift_step_unmeasured(s, u_a, u_b, subspace, g), g.control(), rng);
    return {std::move(measured.label), measured.index, std::move(measured.state), measured.probability};
}

// ---------------------------------------------------------------- gates

namespace gates {

CMat hadamard() {
    double h = 1 / std::numbers::sqrt2;
    return CMat{{h, h}, {h, -h}};
}

CMat t_gate() {
    return CMat{{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}};
}

CMat pauli_x() {
    return CMat{{0, 1}, {1, 0}};
}

CMat pauli_y() {
    return CMat{{0, cdouble(0, -1)}, {cdouble(0, 1), 0}};
}

CMat pauli_z() {
    return CMat{{1, 0}, {0, -1}};
}

}  // namespace gates

}  // namespace liftedqc
