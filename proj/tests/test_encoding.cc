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


#include <cmath>

#include "doctest.h"
#include "liftedqc/encoding.h"
#include "test_util.h"

using namespace liftedqc;
using namespace liftedqc_test;

namespace {

CVec two_term(std::size_t dim, std::size_t plus, std::size_t minus) {
    return kInvSqrt2 * (CVec::basis(dim, plus) + cdouble(-1) * CVec::basis(dim, minus));
}

}  // namespace

TEST_CASE("parity code words") {
    LogicalEncoding enc(Variant::parity, 1);
    CHECK(max_diff(encode(enc, CVec::basis(2, 0)), two_term(4, 0b10, 0b11)) < 1e-15);
    CHECK(max_diff(encode(enc, CVec::basis(2, 1)), two_term(4, 0b00, 0b01)) < 1e-15);
    CHECK(enc.start_bits() == 0b10);
    CHECK(enc.logical_bit_of(0b11) == 0);
    CHECK(enc.logical_bit_of(0b01) == 1);
}

TEST_CASE("swap code words") {
    LogicalEncoding enc(Variant::swap, 1);
    CHECK(max_diff(encode(enc, CVec::basis(2, 0)), two_term(16, 0b1000, 0b0100)) < 1e-15);
    CHECK(max_diff(encode(enc, CVec::basis(2, 1)), two_term(16, 0b0010, 0b0001)) < 1e-15);
    CHECK(enc.start_bits() == 0b1000);
    CHECK(enc.logical_bit_of(0b0001) == 1);
    CHECK_FALSE(enc.logical_bit_of(0b1100).has_value());
}

TEST_CASE("multi-pair encoding is a tensor product") {
    LogicalEncoding one(Variant::parity, 1);
    LogicalEncoding two(Variant::parity, 2);
    CHECK(two.isometry().max_abs_diff(kron(one.isometry(), one.isometry())) == 0);
    CHECK(two.physical_dim() == 16);
    CHECK(two.logical_dim() == 4);
}

TEST_CASE("project_logical leakage") {
    LogicalEncoding enc(Variant::parity, 1);
    auto p = project_logical(enc, CVec::basis(4, 0b10));
    CHECK(p.leakage == doctest::Approx(0.5));
    CHECK(std::abs(p.logical[0]) == doctest::Approx(1.0));

    CVec outside = kInvSqrt2 * (CVec::basis(4, 0b10) + CVec::basis(4, 0b11));
    auto q = project_logical(enc, outside);
    CHECK(q.leakage == doctest::Approx(1.0));
    CHECK(q.logical.norm_squared() == 0);

    Rng rng(8);
    CVec psi = random_state(2, rng);
    auto r = project_logical(enc, encode(enc, psi));
    CHECK(r.leakage < 1e-15);
    CHECK(max_diff(r.logical, psi) < 1e-15);
}

TEST_CASE("classical gates act as X and -Z on the code") {
    for (Variant v : {Variant::parity, Variant::swap}) {
        for (int n = 1; n <= 2; n++) {
            LogicalEncoding enc(v, n);
            auto g = build_gateset(v, n);
            auto report = verify_pauli_action(enc, g);
            CHECK(report.all_pass());
            for (const auto &check : report.checks) {
                CHECK(check.max_error <= 1e-12);
            }
            for (int l = 1; l <= n; l++) {
                CMat x = embed_single(gates::pauli_x(), l - 1, n);
                CMat mz = cdouble(-1) * embed_single(gates::pauli_z(), l - 1, n);
                CHECK(logical_action(enc, g.g1(l).perm).max_abs_diff(x) < 1e-15);
                CHECK(logical_action(enc, g.g2(l).perm).max_abs_diff(mz) < 1e-15);
                CHECK(logical_leakage(enc, g.g1(l).perm) < 1e-15);
            }
        }
    }
}

TEST_CASE("G1 flips and G2 phases code words") {
    LogicalEncoding enc(Variant::parity, 1);
    auto g = build_parity_gateset(1);
    for (int y = 0; y < 2; y++) {
        CVec word = encode(enc, CVec::basis(2, y));
        CVec flipped = encode(enc, CVec::basis(2, 1 - y));
        CHECK(max_diff(g.g1(1).perm.apply(word), flipped) < 1e-15);
        double sign = y == 0 ? -1 : 1;
        CHECK(max_diff(g.g2(1).perm.apply(word), cdouble(sign) * word) < 1e-15);
    }
}

TEST_CASE("mismatched encoding and gate set") {
    LogicalEncoding enc(Variant::parity, 1);
    auto report = verify_pauli_action(enc, build_swap_gateset(1));
    CHECK_FALSE(report.all_pass());
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].name == "dimension-compatibility");
}

TEST_CASE("embed_single places operators by qubit") {
    CMat x0 = embed_single(gates::pauli_x(), 0, 2);
    CHECK(x0.max_abs_diff(kron(gates::pauli_x(), CMat::identity(2))) == 0);
    CMat x1 = embed_single(gates::pauli_x(), 1, 2);
    CHECK(x1.max_abs_diff(kron(CMat::identity(2), gates::pauli_x())) == 0);
    CHECK_THROWS_AS(embed_single(gates::pauli_x(), 2, 2), std::out_of_range);
}
