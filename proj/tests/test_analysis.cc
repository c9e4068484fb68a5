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
#include "liftedqc/analysis.h"
#include "liftedqc/protocols.h"
#include "test_util.h"

using namespace liftedqc;
using namespace liftedqc_test;

namespace {

/// Probability that a +-1 walk on Z_8 from 0 first hits {1, 5} at step k,
/// by enumerating all 2^k step sequences.
double brute_force_first_hit(int k) {
    std::uint64_t hits = 0;
    for (std::uint64_t path = 0; path < (std::uint64_t{1} << k); path++) {
        int pos = 0;
        int first = 0;
        for (int step = 1; step <= k; step++) {
            pos = (pos + ((path >> (step - 1)) & 1 ? 1 : 7)) % 8;
            if (pos == 1 || pos == 5) {
                first = step;
                break;
            }
        }
        hits += first == k;
    }
    return std::ldexp(static_cast<double>(hits), -k);
}

/// Same for the H protocol: XOR of outcome bits first equals 01 at step k.
double brute_force_hadamard(int k) {
    std::uint64_t hits = 0;
    for (std::uint64_t path = 0; path < (std::uint64_t{1} << k); path++) {
        unsigned acc = 0;
        int first = 0;
        for (int step = 1; step <= k; step++) {
            acc ^= (path >> (step - 1)) & 1 ? 0b01 : 0b10;
            if (acc == 0b01) {
                first = step;
                break;
            }
        }
        hits += first == k;
    }
    return std::ldexp(static_cast<double>(hits), -k);
}

}  // namespace

TEST_CASE("closed-form success probabilities") {
    CHECK(success_prob_init(0) == 0);
    CHECK(success_prob_init(1) == 0.5);
    CHECK(success_prob_init(3) == 0.875);
    CHECK(success_prob_gate(1) == 0.5);
    CHECK(success_prob_gate(3) == 0.75);
    CHECK(success_prob_gate(4) == 0.75);
    CHECK_THROWS_AS(success_prob_gate(-1), std::invalid_argument);
}

TEST_CASE("walk absorption matches path enumeration") {
    for (int k = 1; k <= 18; k++) {
        CHECK(std::abs(walk_absorption_prob(k) - brute_force_first_hit(k)) < 1e-15);
        CHECK(std::abs(brute_force_hadamard(k) - brute_force_first_hit(k)) < 1e-15);
    }
    CHECK(walk_absorption_prob(0) == 0);
    CHECK(walk_absorption_prob(1) == 0.5);
    CHECK(walk_absorption_prob(2) == 0);
    CHECK(walk_absorption_prob(3) == 0.25);
}

TEST_CASE("cumulative absorption equals the gate success probability") {
    double total = 0;
    for (int m = 1; m <= 30; m++) {
        total += walk_absorption_prob(m);
        CHECK(std::abs(total - success_prob_gate(m)) < 1e-14);
    }
}

TEST_CASE("walk matrix powers") {
    WalkMatrix m = walk_matrix();
    CHECK(m[0][1] == 0.5);
    CHECK(m[1][0] == 0.5);
    CHECK(m[0][0] == 0);
    CHECK(walk_matrix_power(0)[1][1] == 1);
    CHECK(walk_matrix_power(2)[0][0] == doctest::Approx(0.25));
    // Even k >= 2: e0 M^k e0 = (1/2)^(k/2 + 1).
    for (int k = 2; k <= 20; k += 2) {
        CHECK(std::abs(walk_matrix_power(k)[0][0] - std::ldexp(1.0, -(k / 2 + 1))) < 1e-15);
    }
    CHECK(walk_matrix_power(0)[0][0] == 1);
}

TEST_CASE("walk distribution conserves mass with absorption") {
    double absorbed = 0;
    for (int steps = 1; steps <= 12; steps++) {
        absorbed += walk_absorption_prob(steps);
        WalkState s = walk_distribution(steps);
        double alive = 0;
        for (double p : s.probabilities) {
            alive += p;
        }
        CHECK(std::abs(alive + absorbed - 1) < 1e-14);
        CHECK(s.probabilities[1] == 0);
        CHECK(s.probabilities[5] == 0);
    }
}

TEST_CASE("monte carlo examples") {
    auto h = monte_carlo_success(Protocol::hadamard, 1, 100000, 0, 4);
    CHECK(std::abs(h.estimate - 0.5) <= 3 * h.stderr_);
    auto init = monte_carlo_success(Protocol::init, 2, 100000, 0, 4);
    CHECK(std::abs(init.estimate - 0.75) <= 3 * init.stderr_);
    for (Protocol p : {Protocol::init, Protocol::hadamard, Protocol::t, Protocol::cz}) {
        auto one = monte_carlo_success(p, 3, 1, 5);
        CHECK((one.estimate == 0 || one.estimate == 1));
    }
    CHECK_THROWS_AS(monte_carlo_success(Protocol::t, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("monte carlo does not depend on the thread count") {
    auto a = monte_carlo_success(Protocol::t, 3, 2000, 42, 1);
    auto b = monte_carlo_success(Protocol::t, 3, 2000, 42, 3);
    CHECK(a.successes == b.successes);
    auto c = monte_carlo_success(Protocol::t, 3, 2000, 43, 1);
    CHECK(c.trials == 2000);
}

TEST_CASE("protocol names") {
    CHECK(parse_protocol("init") == Protocol::init);
    CHECK(parse_protocol("H") == Protocol::hadamard);
    CHECK(parse_protocol("cz") == Protocol::cz);
    CHECK_THROWS_AS(parse_protocol("X"), std::invalid_argument);
    CHECK(parse_protocol(protocol_name(Protocol::t)) == Protocol::t);
}

TEST_CASE("group enumeration") {
    std::array<CMat, 2> gh = {gates::hadamard(), logical_ops::h_tilde()};
    CHECK(enumerate_group(gh).size() == 4);
    std::array<CMat, 1> gt = {gates::t_gate()};
    CHECK(enumerate_group(gt).size() == 8);
    std::array<CMat, 2> gcz = {logical_ops::cz(), logical_ops::cz_tilde()};
    CHECK(enumerate_group(gcz).size() == 4);
    std::array<CMat, 1> id = {CMat::identity(2)};
    CHECK(enumerate_group(id).size() == 1);
    // Rotation by one radian generates no finite group.
    std::array<CMat, 1> irr = {CMat{{1, 0}, {0, std::polar(1.0, 1.0)}}};
    CHECK_THROWS_AS(enumerate_group(irr), std::runtime_error);
    std::array<CMat, 1> bad = {CMat{{1, 1}, {0, 1}}};
    CHECK_THROWS_AS(enumerate_group(bad), std::invalid_argument);
}

TEST_CASE("group isomorphism") {
    std::array<CMat, 2> gcz = {logical_ops::cz(), logical_ops::cz_tilde()};
    std::array<CMat, 2> pauli = {gates::pauli_x(), gates::pauli_z()};
    std::array<CMat, 1> z4 = {CMat{{1, 0}, {0, cdouble(0, 1)}}};
    auto a = enumerate_group(gcz);
    auto b = enumerate_group(pauli);
    auto c = enumerate_group(z4);
    CHECK(c.size() == 4);
    CHECK(isomorphic_tables(cayley_table(a), cayley_table(b)));
    // Z4 is not the Klein group.
    CHECK_FALSE(isomorphic_tables(cayley_table(c), cayley_table(b)));
    CHECK(find_element(a, std::polar(1.0, 0.4) * logical_ops::cz()) >= 0);
    CHECK(find_element(a, kron(gates::hadamard(), gates::hadamard())) < 0);
}
