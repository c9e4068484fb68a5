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

#ifndef LIFTEDQC_VERIFICATION_H
#define LIFTEDQC_VERIFICATION_H

#include <cstdint>
#include <string>
#include <vector>

#include "liftedqc/lift_model.h"

namespace liftedqc {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// The structural invariant suite behind `liftedqc verify`: Pauli action of
/// the classical gates, code orthonormality and closure, the P/Z4 and
/// protocol groups, controlled-interaction unitarity, lift-step operator
/// equivalence, leakage during protocols, and the walk formulas.
std::vector<CheckResult> run_verification(Variant variant, int n, std::uint64_t seed);

}  // namespace liftedqc

#endif
