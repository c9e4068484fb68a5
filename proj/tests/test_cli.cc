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


#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult cli(const std::string &args) {
    std::string cmd = std::string(LIFTEDQC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, got);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_circuit(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / ("liftedqc_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("cli run bell") {
    std::string bell = write_circuit("bell.qc", "n 2\nH 0\nCNOT 0 1\n");
    auto r = cli("run --circuit " + bell + " --variant parity --seed 7 --max-iters 40");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["success"] == true);
    CHECK(j["seed"] == 7);
    CHECK(j["reference_fidelity"].get<double>() > 1 - 1e-9);
    CHECK(j["per_gate_iters"].size() == 2);
    CHECK(j.contains("total_elementary_ops"));
    CHECK(j["samples"].is_null());
}

TEST_CASE("cli run empty circuit") {
    std::string empty = write_circuit("empty.qc", "n 1\n");
    auto r = cli("run --circuit " + empty + " --state");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto amps = j["final_state"];
    REQUIRE(amps.size() == 2);
    double p0 = std::pow(amps[0][0].get<double>(), 2) + std::pow(amps[0][1].get<double>(), 2);
    CHECK(p0 == doctest::Approx(1.0));
}

TEST_CASE("cli output is deterministic") {
    std::string c = write_circuit("det.qc", "n 3\nH 0\nT 1\nCNOT 0 2\nH 2\nCNOT 2 1\n");
    for (const std::string &args : {"run --circuit " + c + " --seed 11 --variant swap",
                                    "run --circuit " + c + " --seed 11 --shots 50 --threads 3",
                                    "run --circuit " + c + " --seed 4 --output csv", std::string("verify --n 2"),
                                    std::string("prob --protocol T --m 3 --trials 2000 --seed 5 --threads 2"),
                                    std::string("walk --steps 6"), std::string("cost --K 5 --n 1")}) {
        auto a = cli(args);
        auto b = cli(args);
        CHECK_MESSAGE(a.out == b.out, args);
        CHECK(a.code == b.code);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("cli shots counts") {
    std::string bell = write_circuit("bell_shots.qc", "n 2\nH 0\nCNOT 0 1\n");
    auto r = cli("run --circuit " + bell + " --shots 200 --seed 3");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto s = j["samples"];
    CHECK(s.value("00", 0) + s.value("11", 0) == 200);
}

TEST_CASE("cli verify") {
    auto r = cli("verify --variant both --n 2");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() > 10);
    CHECK(cli("verify --variant swap --n 1").code == 0);
}

TEST_CASE("cli prob walk cost") {
    auto p = nlohmann::json::parse(cli("prob --protocol H --m 4 --trials 100000").out);
    CHECK(p["closed_form"] == 0.75);
    CHECK(p["within_3sigma"] == true);

    auto w = nlohmann::json::parse(cli("walk --steps 3").out);
    REQUIRE(w["steps"].size() == 3);
    CHECK(w["steps"][0]["absorption"] == 0.5);
    CHECK(w["steps"][1]["absorption"] == 0.0);
    CHECK(w["steps"][2]["absorption"] == 0.25);

    auto c = nlohmann::json::parse(cli("cost --K 10 --n 2 --delta 0.01 --alpha 1").out);
    CHECK(c["m0"].get<double>() == doctest::Approx(10.2288).epsilon(1e-5));
    CHECK(c["M"].get<double>() == doctest::Approx(225.03).epsilon(1e-4));
}

TEST_CASE("cli exit codes") {
    std::string bad = write_circuit("bad.qc", "n 2\nCNOT 0 0\n");
    CHECK(cli("run --circuit " + bad).code == 1);
    CHECK(cli("run --circuit /nonexistent/liftedqc.qc").code == 1);
    CHECK(cli("run").code == 1);
    CHECK(cli("frobnicate").code == 1);
    CHECK(cli("cost --K 1 --n 1 --delta 2").code == 1);

    std::string many = "n 1\n";
    for (int k = 0; k < 20; k++) {
        many += "H 0\n";
    }
    std::string long_circuit = write_circuit("long.qc", many);
    auto r = cli("run --circuit " + long_circuit + " --max-iters 1 --init-iters 40 --seed 1");
    CHECK(r.code == 2);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["success"] == false);
    CHECK(j["failure"].get<std::string>().rfind("gate ", 0) == 0);
}
