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


#include <array>
#include <cmath>

#include "doctest.h"
#include "liftedqc/complex_core.h"
#include "liftedqc/lift_model.h"
#include "test_util.h"

using namespace liftedqc;
using namespace liftedqc_test;

TEST_CASE("kron") {
    CHECK(kron(CMat::identity(2), CMat::identity(2)).max_abs_diff(CMat::identity(4)) == 0);
    CVec out = kron(gates::pauli_x(), CMat::identity(2)) * CVec::basis(4, 0b00);
    CHECK(max_diff(out, CVec::basis(4, 0b10)) == 0);

    CVec a{1, 2};
    CVec b{cdouble(0, 1), 3};
    CVec ab = kron(a, b);
    CHECK(ab.dim() == 4);
    CHECK(ab[1] == cdouble(3));
    CHECK(ab[2] == cdouble(0, 2));
}

TEST_CASE("kron dimension guard") {
    std::size_t saved = max_dimension();
    set_max_dimension(8);
    CHECK_THROWS_AS(kron(CMat::identity(4), CMat::identity(4)), DimensionOverflow);
    CHECK_THROWS_AS(CMat(16, 16), DimensionOverflow);
    set_max_dimension(saved);
    CHECK(kron(CMat::identity(4), CMat::identity(4)).rows() == 16);
}

TEST_CASE("apply_unitary") {
    CHECK(max_diff(apply_unitary(CVec::basis(2, 0), CMat::identity(2)), CVec::basis(2, 0)) == 0);
    CHECK(max_diff(apply_unitary(CVec::basis(2, 0), gates::pauli_x()), CVec::basis(2, 1)) == 0);
    CHECK_THROWS_AS(apply_unitary(CVec::basis(2, 0), CMat{{1, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_unitary(CVec::basis(4, 0), gates::pauli_x()), std::invalid_argument);
}

TEST_CASE("unitarity is closed under products") {
    Rng rng(11);
    for (int trial = 0; trial < 50; trial++) {
        CMat u = kron(random_u2(rng), random_u2(rng)) * kron(random_u2(rng), random_u2(rng));
        CHECK(u.is_unitary());
        CVec psi = random_state(4, rng);
        CHECK(std::abs(apply_unitary(psi, u).norm() - 1) < 1e-12);
    }
}

TEST_CASE("measure_projective on an eigenstate") {
    Rng rng(1);
    std::array<CMat, 2> z = {CMat{{1, 0}, {0, 0}}, CMat{{0, 0}, {0, 1}}};
    auto r = measure_projective(CVec::basis(2, 0), z, rng);
    CHECK(r.outcome == 0);
    CHECK(r.probability == doctest::Approx(1.0));
    CHECK(max_diff(r.post_state, CVec::basis(2, 0)) < 1e-15);
}

TEST_CASE("measure_projective frequencies stay within 3 sigma") {
    Rng rng(2026);
    std::array<CMat, 2> z = {CMat{{1, 0}, {0, 0}}, CMat{{0, 0}, {0, 1}}};
    CVec plus{kInvSqrt2, kInvSqrt2};
    const int samples = 100000;
    int zeros = 0;
    for (int k = 0; k < samples; k++) {
        auto r = measure_projective(plus, z, rng);
        CHECK(r.probability == doctest::Approx(0.5));
        zeros += r.outcome == 0;
    }
    // Binomial(N, 1/2): sigma = sqrt(N) / 2.
    double sigma = std::sqrt(static_cast<double>(samples)) / 2;
    CHECK(std::abs(zeros - samples / 2.0) <= 3 * sigma);
}

TEST_CASE("measure_projective input validation") {
    Rng rng(0);
    std::array<CMat, 1> partial = {CMat{{1, 0}, {0, 0}}};
    CHECK_THROWS_AS(measure_projective(CVec::basis(2, 0), partial, rng), std::invalid_argument);
    std::array<CMat, 0> none{};
    CHECK_THROWS_AS(measure_projective(CVec::basis(2, 0), none, rng), std::invalid_argument);
}

TEST_CASE("fidelity_up_to_phase") {
    Rng rng(5);
    CVec psi = random_state(4, rng);
    for (double theta : {0.0, 0.3, 1.7, -2.9}) {
        CHECK(fidelity_up_to_phase(psi, std::polar(1.0, theta) * psi) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(fidelity_up_to_phase(CVec::basis(2, 0), CVec::basis(2, 1)) == 0);
    CVec h0 = gates::hadamard() * CVec::basis(2, 0);
    CHECK(fidelity_up_to_phase(CVec::basis(2, 0), h0) == doctest::Approx(kInvSqrt2));
}

TEST_CASE("canonicalize_phase removes global phases") {
    Rng rng(9);
    for (int trial = 0; trial < 20; trial++) {
        CMat u = random_u2(rng);
        CMat v = std::polar(1.0, 6.28 * rng.uniform()) * u;
        CHECK(canonicalize_phase(u).max_abs_diff(canonicalize_phase(v)) < 1e-12);
    }
    CMat y = canonicalize_phase(gates::pauli_y());
    CHECK(std::abs(y(0, 0)) == 0);
    CHECK(std::abs(y(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(y(1, 0) + 1.0) < 1e-15);
}

TEST_CASE("vector basics") {
    CHECK_THROWS_AS(CVec(3).normalized(), std::domain_error);
    CHECK_THROWS_AS(CVec::basis(2, 2), std::out_of_range);
    CVec v{3, cdouble(0, 4)};
    CHECK(v.norm() == doctest::Approx(5));
    CHECK(v.normalized().is_normalized());
    CHECK(inner(CVec{0, 1}, CVec{0, cdouble(0, 1)}) == cdouble(0, 1));
}

TEST_CASE("permutation matrices") {
    std::array<std::uint32_t, 3> image = {2, 0, 1};
    CMat p = CMat::permutation(image);
    CHECK(p.is_permutation());
    CHECK(p.is_unitary());
    CHECK(max_diff(p * CVec::basis(3, 0), CVec::basis(3, 2)) == 0);
    CHECK_FALSE(gates::hadamard().is_permutation());
}

TEST_CASE("rng streams are reproducible and distinct") {
    Rng a = Rng::stream(7, 3);
    Rng b = Rng::stream(7, 3);
    Rng c = Rng::stream(7, 4);
    bool differs = false;
    for (int k = 0; k < 16; k++) {
        auto x = a();
        CHECK(x == b());
        differs = differs || x != c();
    }
    CHECK(differs);
    Rng u(1);
    for (int k = 0; k < 1000; k++) {
        double x = u.uniform();
        CHECK(x >= 0);
        CHECK(x < 1);
    }
}

TEST_CASE("random_state is normalized") {
    Rng rng(3);
    for (std::size_t dim : {1u, 2u, 5u, 64u}) {
        CHECK(random_state(dim, rng).is_normalized());
    }
}

TEST_CASE("sample_index follows weights") {
    Rng rng(4);
    std::array<double, 3> w = {0, 1, 0};
    CHECK(sample_index(w, rng) == 1);
    std::array<double, 2> zero = {0, 0};
    CHECK_THROWS_AS(sample_index(zero, rng), std::domain_error);
}
