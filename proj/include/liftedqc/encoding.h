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

#ifndef LIFTEDQC_ENCODING_H
#define LIFTEDQC_ENCODING_H

#include <optional>
#include <string>
#include <vector>

#include "liftedqc/complex_core.h"
#include "liftedqc/lift_model.h"

namespace liftedqc {

/// Isometry taking n logical qubits into the physical target register.
///
/// Parity variant, per pair of physical qubits:
///     |0>_L = (|10> - |11>) / sqrt(2)
///     |1>_L = (|00> - |01>) / sqrt(2)
/// SWAP variant, per block of four physical qubits:
///     |0>_L = (|1000> - |0100>) / sqrt(2)
///     |1>_L = (|0010> - |0001>) / sqrt(2)
/// Multi-qubit encodings are the tensor product over pairs 1..n, with
/// logical qubit l-1 living on pair l.
class LogicalEncoding {
   public:
    LogicalEncoding(Variant variant, int n);

    Variant variant() const { return variant_; }
    int n() const { return n_; }
    int qubits_per_pair() const { return variant_ == Variant::parity ? 2 : 4; }
    std::size_t physical_dim() const { return isometry_.rows(); }
    std::size_t logical_dim() const { return isometry_.cols(); }
    const CMat &isometry() const { return isometry_; }

    /// Per-pair encoded basis state |bit>_L.
    CVec pair_basis(int bit) const;
    /// Classical pair state that initialization starts from (|10> or |1000>).
    std::uint32_t start_bits() const;
    /// Logical value read off a classical measurement of one pair, or
    /// nullopt when the outcome lies outside the support of both codewords.
    std::optional<int> logical_bit_of(std::uint32_t pair_bits) const;

   private:
    Variant variant_;
    int n_;
    CMat isometry_;
};

CVec encode(const LogicalEncoding &enc, const CVec &logical);

struct LogicalProjection {
    CVec logical;    // renormalized; all zeros when leakage is 1
    double leakage;  // 1 - ||V^dagger physical||^2
};

LogicalProjection project_logical(const LogicalEncoding &enc, const CVec &physical);

/// V^dagger G V: the action of a classical gate on the logical subspace.
CMat logical_action(const LogicalEncoding &enc, const Permutation &gate);
/// || (1 - V V^dagger) G V ||_max: how far G moves codewords out of the code.
double logical_leakage(const LogicalEncoding &enc, const Permutation &gate);

/// `op` acting on logical qubit `qubit` (0-based) of an n-qubit register.
CMat embed_single(const CMat &op, int qubit, int n);

struct PauliCheck {
    std::string name;
    bool pass;
    double max_error;
    std::string detail;
};

struct PauliReport {
    std::vector<PauliCheck> checks;
    bool all_pass() const;
};

/// Checks that for every pair l, G1@l acts as X and G2@l acts as -Z on
/// logical qubit l, with no leakage out of the code. Incompatible inputs
/// yield a failing report rather than an exception.
PauliReport verify_pauli_action(const LogicalEncoding &enc, const ClassicalGateSet &g);

}  // namespace liftedqc

#endif
