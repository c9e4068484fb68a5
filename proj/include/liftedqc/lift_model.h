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

#ifndef LIFTEDQC_LIFT_MODEL_H
#define LIFTEDQC_LIFT_MODEL_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liftedqc/complex_core.h"

namespace liftedqc {

/// A reversible classical gate: basis state |x> goes to |image[x]>.
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> image);
    static Permutation identity(std::size_t dim);

    std::size_t dim() const { return image_.size(); }
    std::uint32_t operator()(std::size_t x) const { return image_[x]; }
    std::span<const std::uint32_t> image() const { return image_; }

    CVec apply(const CVec &v) const;
    /// (this * other)(x) = this(other(x)).
    Permutation operator*(const Permutation &other) const;
    bool operator==(const Permutation &other) const = default;

    CMat matrix() const { return CMat::permutation(image_); }

   private:
    std::vector<std::uint32_t> image_;
};

struct ClassicalGate {
    std::string label;
    Permutation perm;
};

/// Computational basis of the control register. Index 0 is the identity
/// gate "1"; pair l (1-based) owns index 2l-1 ("G1@l") and 2l ("G2@l").
class ControlBasis {
   public:
    explicit ControlBasis(int n_pairs);

    std::size_t dim() const { return labels_.size(); }
    int n_pairs() const { return n_pairs_; }
    std::size_t index_of(std::string_view label) const;
    const std::string &label_of(std::size_t index) const { return labels_.at(index); }

    static std::size_t g1(int pair) { return 2 * static_cast<std::size_t>(pair) - 1; }
    static std::size_t g2(int pair) { return 2 * static_cast<std::size_t>(pair); }

   private:
    int n_pairs_;
    std::vector<std::string> labels_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

enum class Variant { parity, swap };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view name);

/// The classical gates the control register can select: the identity plus
/// two gates per qubit pair (or four-qubit block for the SWAP variant).
class ClassicalGateSet {
   public:
    ClassicalGateSet(Variant variant, int n_pairs, std::vector<ClassicalGate> gates);

    Variant variant() const { return variant_; }
    int n_pairs() const { return control_.n_pairs(); }
    /// Physical target qubits per logical pair: 2 (parity) or 4 (swap).
    int qubits_per_pair() const { return variant_ == Variant::parity ? 2 : 4; }
    int target_qubits() const { return qubits_per_pair() * n_pairs(); }
    std::size_t target_dim() const { return gates_.front().perm.dim(); }
    std::size_t control_dim() const { return gates_.size(); }
    const ControlBasis &control() const { return control_; }

    std::span<const ClassicalGate> gates() const { return gates_; }
    const ClassicalGate &gate(std::size_t control_index) const { return gates_.at(control_index); }
    const ClassicalGate &g1(int pair) const { return gate(ControlBasis::g1(pair)); }
    const ClassicalGate &g2(int pair) const { return gate(ControlBasis::g2(pair)); }

    /// Bit offset (from the least significant end) of the lowest qubit of
    /// `pair` in a target basis index.
    int pair_shift(int pair) const;
    void check_pair(int pair) const;

   private:
    Variant variant_;
    ControlBasis control_;
    std::vector<ClassicalGate> gates_;
};

/// {1} plus, for each pair l, NOT on qubit 2l-1 and CNOT(2l-1 -> 2l).
ClassicalGateSet build_parity_gateset(int n);
/// {1} plus, for each four-qubit block l, SWAP13*SWAP24 and SWAP12.
ClassicalGateSet build_swap_gateset(int n);
ClassicalGateSet build_gateset(Variant variant, int n);

/// Amplitudes over control (x) target, control index most significant.
class JointState {
   public:
    JointState(std::size_t control_dim, std::size_t target_dim);
    JointState(std::size_t control_dim, std::size_t target_dim, CVec amplitudes);

    /// |control_index> (x) target.
    static JointState product(std::size_t control_dim, std::size_t control_index, const CVec &target);

    std::size_t control_dim() const { return control_dim_; }
    std::size_t target_dim() const { return target_dim_; }
    const CVec &amplitudes() const { return amps_; }
    CVec &amplitudes() { return amps_; }

    cdouble &at(std::size_t control, std::size_t target) { return amps_[control * target_dim_ + target]; }
    const cdouble &at(std::size_t control, std::size_t target) const { return amps_[control * target_dim_ + target]; }

    /// Unnormalized target vector attached to one control basis state.
    CVec block(std::size_t control) const;
    double block_norm_squared(std::size_t control) const;

    /// For a product state |c> (x) psi with c a basis state, returns c.
    /// Throws if the control is not in a single basis state.
    std::size_t control_basis_index(double tol = kUnitaryTol) const;
    /// The target vector of a state that passes control_basis_index().
    CVec target_state() const;

   private:
    std::size_t control_dim_;
    std::size_t target_dim_;
    CVec amps_;
};

/// |G_i> (x) psi  ->  |G_i> (x) G_i psi for every control basis state.
JointState controlled_apply(const JointState &s, const ClassicalGateSet &g);

/// Applies `u` within the span of the listed control basis states (in the
/// listed order), identity elsewhere and on the target.
JointState control_unitary(const JointState &s, const CMat &u, std::span<const std::size_t> subspace);
JointState control_unitary(const JointState &s, const CMat &u, const ControlBasis &basis,
                           std::span<const std::string> labels);

/// Swaps |G_i@from> <-> |G_i@to> for i = 1, 2. Identity on every other
/// control basis state and on the target.
JointState relabel_control(const JointState &s, int from_pair, int to_pair);

/// Moves a product state |c> (x) psi to |control_index> (x) psi.
JointState reset_control(const JointState &s, std::size_t control_index);

struct ControlOutcome {
    std::size_t index;
    std::string label;
    JointState state;
    double probability;
};

/// Projective measurement of the control in its computational basis.
ControlOutcome measure_control(const JointState &s, const ControlBasis &basis, Rng &rng);

struct ClassicalOutcome {
    /// The pair's qubits read as an integer, first qubit most significant.
    std::uint32_t bits;
    JointState state;
    double probability;
};

/// Classical-basis measurement of the physical qubits of one pair (block).
ClassicalOutcome measure_target_classical(const JointState &s, const ClassicalGateSet &g, int pair, Rng &rng);

struct LiftStepResult {
    std::string outcome_label;
    std::size_t outcome_index;
    JointState post_state;
    double branch_probability;
};

/// Control unitary u_a, controlled interaction, control unitary u_b; the
/// returned state is the one right before the control measurement. Block j
/// of the result is O_j applied to the input target.
JointState lift_step_unmeasured(const JointState &s, const CMat &u_a, const CMat &u_b,
                                std::span<const std::size_t> subspace, const ClassicalGateSet &g);

/// One full lift step: lift_step_unmeasured followed by measure_control.
LiftStepResult lift_step(const JointState &s, const CMat &u_a, const CMat &u_b,
                         std::span<const std::size_t> subspace, const ClassicalGateSet &g, Rng &rng);

namespace gates {
CMat hadamard();
CMat t_gate();
CMat pauli_x();
CMat pauli_y();
CMat pauli_z();
}  // namespace gates

}  // namespace liftedqc

#endif
