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

#ifndef LIFTEDQC_ANALYSIS_H
#define LIFTEDQC_ANALYSIS_H

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "liftedqc/complex_core.h"

namespace liftedqc {

/// 1 - (1/2)^m: initialization succeeds within m rounds.
double success_prob_init(int m);
/// 1 - (1/2)^ceil(m/2): H, T and CZ succeed within m rounds.
double success_prob_gate(int m);

/// The T-protocol walk restricted to the points T^0, T^7, T^6 (in that
/// order). Probability leaking out of this block is absorbed at T^1 / T^5.
using WalkMatrix = std::array<std::array<double, 3>, 3>;
WalkMatrix walk_matrix();
WalkMatrix walk_matrix_power(int k);

/// Probabilities over T^0..T^7 after `steps` steps, with absorption at T^1
/// and T^5 (absorbed mass is dropped).
struct WalkState {
    std::array<double, 8> probabilities{};
};
WalkState walk_distribution(int steps);

/// Probability that the walk first reaches T^1 or T^5 exactly at step k.
double walk_absorption_prob(int k);

enum class Protocol { init, hadamard, t, cz };
Protocol parse_protocol(std::string_view name);
std::string_view protocol_name(Protocol p);

struct MonteCarloEstimate {
    double estimate;
    double stderr_;
    std::int64_t successes;
    std::int64_t trials;
};

/// Runs `trials` independent invocations of a protocol with budget m on
/// fresh states. Trial t uses Rng::stream(seed, t), so the result does not
/// depend on `threads`.
MonteCarloEstimate monte_carlo_success(Protocol protocol, int m, std::int64_t trials, std::uint64_t seed,
                                       int threads = 1);

/// Closure of a set of unitaries under multiplication, with each element
/// phase-canonicalized. Throws std::runtime_error past 10^4 elements.
std::vector<CMat> enumerate_group(std::span<const CMat> generators);

/// Position of `m` (after canonicalization) in `group`, or -1.
int find_element(std::span<const CMat> group, const CMat &m);

/// Cayley table of a phase-canonical group: table[a][b] = index of a*b.
std::vector<std::vector<int>> cayley_table(std::span<const CMat> group);

/// True when two Cayley tables describe isomorphic groups (brute force over
/// bijections; meant for small groups).
bool isomorphic_tables(const std::vector<std::vector<int>> &a, const std::vector<std::vector<int>> &b);

/// Worker count: LIFTEDQC_THREADS if set, else `requested`, at least 1.
int resolve_threads(int requested);

}  // namespace liftedqc

#endif
