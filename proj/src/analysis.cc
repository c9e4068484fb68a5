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

#include "liftedqc/analysis.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "liftedqc/protocols.h"

namespace liftedqc {

double success_prob_init(int m) {
    if (m < 0) {
        throw std::invalid_argument("m must be nonnegative");
    }
    return 1.0 - std::ldexp(1.0, -m);
}

double success_prob_gate(int m) {
    if (m < 0) {
        throw std::invalid_argument("m must be nonnegative");
    }
    return 1.0 - std::ldexp(1.0, -((m + 1) / 2));
}

// ---------------------------------------------------------------- walk

WalkMatrix walk_matrix() {
    return {{{0.0, 0.5, 0.0}, {0.5, 0.0, 0.5}, {0.0, 0.5, 0.0}}};
}

WalkMatrix walk_matrix_power(int k) {
    if (k < 0) {
        throw std::invalid_argument("matrix power must be nonnegative");
    }
    WalkMatrix result{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    WalkMatrix base = walk_matrix();
    auto mul = [](const WalkMatrix &a, const WalkMatrix &b) {
        WalkMatrix c{};
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) {
                for (int l = 0; l < 3; l++) {
                    c[i][j] += a[i][l] * b[l][j];
                }
            }
        }
        return c;
    };
    for (; k > 0; k >>= 1) {
        if (k & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
    }
    return result;
}

WalkState walk_distribution(int steps) {
    if (steps < 0) {
        throw std::invalid_argument("steps must be nonnegative");
    }
    WalkState s;
    s.probabilities[0] = 1;
    for (int i = 0; i < steps; i++) {
        WalkState next;
        for (int j = 0; j < 8; j++) {
            next.probabilities[(j + 1) % 8] += 0.5 * s.probabilities[j];
            next.probabilities[(j + 7) % 8] += 0.5 * s.probabilities[j];
        }
        next.probabilities[1] = 0;
        next.probabilities[5] = 0;
        s = next;
    }
    return s;
}

double walk_absorption_prob(int k) {
    if (k < 0) {
        throw std::invalid_argument("k must be nonnegative");
    }
    if (k == 0) {
        return 0;
    }
    // Entering T^1 or T^5 requires standing on T^0 or T^6 one step earlier.
    WalkMatrix p = walk_matrix_power(k - 1);
    return 0.5 * (p[0][0] + p[2][0]);
}

// ---------------------------------------------------------------- Monte Carlo

Protocol parse_protocol(std::string_view name) {
    if (name == "init") {
        return Protocol::init;
    }
    if (name == "H" || name == "h") {
        return Protocol::hadamard;
    }
    if (name == "T" || name == "t") {
        return Protocol::t;
    }
    if (name == "CZ" || name == "cz") {
        return Protocol::cz;
    }
    throw std::invalid_argument("unknown protocol '" + std::string(name) + "' (expected init, H, T or CZ)");
}

std::string_view protocol_name(Protocol p) {
    switch (p) {
        case Protocol::init:
            return "init";
        case Protocol::hadamard:
            return "H";
        case Protocol::t:
            return "T";
        case Protocol::cz:
            return "CZ";
    }
    return "?";
}

int resolve_threads(int requested) {
    if (const char *env = std::getenv("LIFTEDQC_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<int>(v);
        }
    }
    return std::max(1, requested);
}

namespace {

bool run_trial(Protocol protocol, const LiftedSystem &sys, const RusConfig &cfg, Rng &rng) {
    switch (protocol) {
        case Protocol::init:
            return initialize_pair(sys.classical_start(), sys, 1, cfg, rng).success;
        case Protocol::hadamard:
            return rus_hadamard(sys.encoded(random_state(2, rng), "G1@1"), sys, 1, cfg, rng).success;
        case Protocol::t:
            return rus_t(sys.encoded(random_state(2, rng)), sys, 1, cfg, rng).success;
        case Protocol::cz:
            return rus_cz(sys.encoded(random_state(4, rng), "G2@1"), sys, 1, 2, cfg, rng).success;
    }
    return false;
}

}  // namespace

MonteCarloEstimate monte_carlo_success(Protocol protocol, int m, std::int64_t trials, std::uint64_t seed,
                                       int threads) {
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (m < 1) {
        throw std::invalid_argument("m must be at least 1");
    }
    const LiftedSystem sys(Variant::parity, protocol == Protocol::cz ? 2 : 1);
    RusConfig cfg{m, seed};

    int workers = static_cast<int>(std::min<std::int64_t>(std::max(1, threads), trials));
    std::atomic<std::int64_t> successes{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int w) {
        try {
            std::int64_t local = 0;
            for (std::int64_t t = w; t < trials; t += workers) {
                Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
                local += run_trial(protocol, sys, cfg, rng) ? 1 : 0;
            }
            successes += local;
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            failure = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; w++) {
            pool.emplace_back(work, w);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    double p = static_cast<double>(successes.load()) / static_cast<double>(trials);
    return {p, std::sqrt(p * (1 - p) / static_cast<double>(trials)), successes.load(), trials};
}

// ---------------------------------------------------------------- groups

namespace {

constexpr double kMemberTol = 1e-9;
constexpr std::size_t kGroupLimit = 10000;

}  // namespace

int find_element(std::span<const CMat> group, const CMat &m) {
    CMat c = canonicalize_phase(m);
    for (std::size_t k = 0; k < group.size(); k++) {
        if (group[k].rows() == c.rows() && group[k].cols() == c.cols() && group[k].max_abs_diff(c) <= kMemberTol) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

std::vector<CMat> enumerate_group(std::span<const CMat> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("enumerate_group: no generators");
    }
    for (const auto &g : generators) {
        if (!g.is_unitary() || g.rows() != generators.front().rows()) {
            throw std::invalid_argument("enumerate_group: generators must be unitary and equally sized");
        }
    }
    std::vector<CMat> elements;
    for (const auto &g : generators) {
        if (find_element(elements, g) < 0) {
            elements.push_back(canonicalize_phase(g));
        }
    }
    // Breadth-first: multiply every new element by every generator.
    for (std::size_t frontier = 0; frontier < elements.size(); frontier++) {
        for (const auto &g : generators) {
            CMat product = elements[frontier] * g;
            if (find_element(elements, product) < 0) {
                if (elements.size() >= kGroupLimit) {
                    throw std::runtime_error("enumerate_group: more than 10^4 elements; group is not finite");
                }
                elements.push_back(canonicalize_phase(product));
            }
        }
    }
    return elements;
}

std::vector<std::vector<int>> cayley_table(std::span<const CMat> group) {
    std::vector<std::vector<int>> table(group.size(), std::vector<int>(group.size()));
    for (std::size_t a = 0; a < group.size(); a++) {
        for (std::size_t b = 0; b < group.size(); b++) {
            int idx = find_element(group, group[a] * group[b]);
            if (idx < 0) {
                throw std::logic_error("cayley_table: set is not closed under multiplication");
            }
            table[a][b] = idx;
        }
    }
    return table;
}

bool isomorphic_tables(const std::vector<std::vector<int>> &a, const std::vector<std::vector<int>> &b) {
    if (a.size() != b.size()) {
        return false;
    }
    std::vector<int> map(a.size());
    std::iota(map.begin(), map.end(), 0);
    do {
        bool ok = true;
        for (std::size_t x = 0; x < a.size() && ok; x++) {
            for (std::size_t y = 0; y < a.size() && ok; y++) {
                ok = map[static_cast<std::size_t>(a[x][y])] == b[static_cast<std::size_t>(map[x])][static_cast<std::size_t>(map[y])];
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(map.begin(), map.end()));
    return false;
}

}  // namespace liftedqc
