// Copyright 2026 The parqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

/// Tests for the ALM / TFO / generic instance generators and the
/// constraint-violation counters.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "parqubo/problems.hpp"
#include "parqubo/serialization.hpp"
#include "parqubo/solve_exact.hpp"

using namespace parqubo;

TEST_CASE("ALM structure: diagonals, risks, label, and bounds") {
    const AlmInstance inst = gen_alm(8, 3);
    CHECK(inst.n_assets == 8);
    CHECK(inst.penalty_scale == 1e5);
    CHECK(inst.rng_seed == 3);
    CHECK(inst.qubo.dimension() == 8);
    CHECK(inst.qubo.label() == "alm8");
    REQUIRE(inst.returns.size() == 8);
    REQUIRE(inst.risk.size() == 28);  // C(8, 2)

    for (Index a = 0; a < 8; ++a) {
        CHECK(inst.returns[a] >= 0.0);
        CHECK(inst.returns[a] < 0.2 * inst.penalty_scale);
        CHECK(inst.qubo.term(a, a) == -(inst.penalty_scale + inst.returns[a]));
    }
    // n = 8 keeps the nominal risk cap of 0.1 * penalty.
    for (const auto& [pair, r] : inst.risk) {
        CHECK(pair.first < pair.second);
        CHECK(r >= 0.0);
        CHECK(r < 0.1 * inst.penalty_scale);
        CHECK(inst.qubo.term(pair.first, pair.second) == r);
    }
}

TEST_CASE("ALM risk cap shrinks past ten assets") {
    const AlmInstance inst = gen_alm(12, 5);
    const double cap = (0.9 / 11.0) * inst.penalty_scale;
    for (const auto& [pair, r] : inst.risk) {
        CHECK(r >= 0.0);
        CHECK(r < cap);
    }
}

TEST_CASE("generators are deterministic in the seed") {
    CHECK(gen_alm(6, 9).qubo == gen_alm(6, 9).qubo);
    CHECK_FALSE(gen_alm(6, 9).qubo == gen_alm(6, 10).qubo);
    CHECK(gen_tfo(4, 9).qubo == gen_tfo(4, 9).qubo);
    CHECK_FALSE(gen_tfo(4, 9).qubo == gen_tfo(4, 10).qubo);
    CHECK(gen_generic(7, 9) == gen_generic(7, 9));
    CHECK_FALSE(gen_generic(7, 9) == gen_generic(7, 10));
}

TEST_CASE("ALM all-ones is the unique optimum at every size") {
    for (std::uint32_t n : {1u, 2u, 5u, 8u, 12u}) {
        for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
            INFO("n = " << n << ", seed = " << seed);
            const AlmInstance inst = gen_alm(n, seed);
            SampleSet result = solve_exact(inst.qubo);
            REQUIRE(result.samples.size() == 1);
            const Assignment ones(n, 1);
            CHECK(result.samples[0].assignment == ones);
            CHECK(result.samples[0].energy == inst.qubo.energy(ones));
        }
    }
}

TEST_CASE("ALM violation counter counts zero bits") {
    const AlmInstance inst = gen_alm(5, 1);
    ViolationReport r = count_violations_alm(inst, {1, 0, 1, 0, 1});
    CHECK(r.problem_kind == ProblemKind::Alm);
    CHECK(r.count == 2);
    REQUIRE(r.breakdown.size() == 1);
    CHECK(r.breakdown.at("unallocated_asset") == 2);

    CHECK(count_violations_alm(inst, Assignment(5, 1)).count == 0);
    CHECK(count_violations_alm(inst, Assignment(5, 0)).count == 5);
    CHECK_THROWS_AS(count_violations_alm(inst, Assignment(4, 1)), InvalidInputError);
}

TEST_CASE("TFO structure: one-hot blocks, congestion couplings, template") {
    const TfoInstance inst = gen_tfo(4, 11);
    CHECK(inst.n_vehicles == 4);
    CHECK(inst.n_routes == 3);
    CHECK(inst.penalty_scale == 1e4);
    CHECK(inst.qubo.dimension() == 12);
    CHECK(inst.qubo.label() == "tfo12");
    CHECK(inst.var(2, 1) == 7);
    const std::vector<std::vector<Index>> expected_segments{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
    CHECK(inst.route_segments == expected_segments);

    for (Index v = 0; v < 4; ++v) {
        for (Index r = 0; r < 3; ++r) {
            CHECK(inst.qubo.term(inst.var(v, r), inst.var(v, r)) == -1e4);
            for (Index s = r + 1; s < 3; ++s) {
                CHECK(inst.qubo.term(inst.var(v, r), inst.var(v, s)) == 2e4);
            }
        }
    }

    REQUIRE(inst.congestion.size() == 18);  // 3 * C(4, 2)
    for (const auto& [key, c] : inst.congestion) {
        const auto [v, w, r] = key;
        CHECK(v < w);
        CHECK(r < 3);
        CHECK(c >= 0.0);
        CHECK(c < 0.05 * inst.penalty_scale);
        CHECK(inst.qubo.term(inst.var(v, r), inst.var(w, r)) == c);
    }
}

TEST_CASE("TFO optima are feasible when enough vehicles cover the routes") {
    for (std::uint32_t vehicles : {3u, 4u, 5u, 6u}) {
        for (std::uint64_t seed : {0ull, 1ull}) {
            INFO("vehicles = " << vehicles << ", seed = " << seed);
            const TfoInstance inst = gen_tfo(vehicles, seed);
            SampleSet result = solve_exact(inst.qubo);
            REQUIRE_FALSE(result.samples.empty());
            for (const Sample& s : result.samples) {
                ViolationReport r = count_violations_tfo(inst, s.assignment);
                CHECK(r.count == 0);
            }
        }
    }
}

TEST_CASE("TFO optima with fewer vehicles than routes leave routes unused") {
    for (std::uint32_t vehicles : {1u, 2u}) {
        const TfoInstance inst = gen_tfo(vehicles, 0);
        SampleSet result = solve_exact(inst.qubo);
        REQUIRE_FALSE(result.samples.empty());
        for (const Sample& s : result.samples) {
            ViolationReport r = count_violations_tfo(inst, s.assignment);
            CHECK(r.breakdown.at("vehicle_no_route") == 0);
            CHECK(r.breakdown.at("vehicle_multi_route") == 0);
            CHECK(r.breakdown.at("route_unused") == 3 - vehicles);
            CHECK(r.count == 3 - vehicles);
        }
    }
}

TEST_CASE("TFO violation counter hand cases") {
    const TfoInstance inst = gen_tfo(3, 2);

    ViolationReport ok = count_violations_tfo(inst, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(ok.problem_kind == ProblemKind::Tfo);
    CHECK(ok.count == 0);
    REQUIRE(ok.breakdown.size() == 3);
    CHECK(ok.breakdown.at("vehicle_no_route") == 0);
    CHECK(ok.breakdown.at("vehicle_multi_route") == 0);
    CHECK(ok.breakdown.at("route_unused") == 0);

    ViolationReport zeros = count_violations_tfo(inst, Assignment(9, 0));
    CHECK(zeros.breakdown.at("vehicle_no_route") == 3);
    CHECK(zeros.breakdown.at("route_unused") == 3);
    CHECK(zeros.count == 6);

    ViolationReport doubled = count_violations_tfo(inst, {1, 1, 0, 0, 1, 0, 0, 0, 1});
    CHECK(doubled.breakdown.at("vehicle_multi_route") == 1);
    CHECK(doubled.breakdown.at("vehicle_no_route") == 0);
    CHECK(doubled.breakdown.at("route_unused") == 0);
    CHECK(doubled.count == 1);

    ViolationReport herd = count_violations_tfo(inst, {1, 0, 0, 1, 0, 0, 1, 0, 0});
    CHECK(herd.breakdown.at("route_unused") == 2);
    CHECK(herd.count == 2);

    CHECK_THROWS_AS(count_violations_tfo(inst, Assignment(8, 0)), InvalidInputError);
}

TEST_CASE("ALM coefficients dominate TFO coefficients by design") {
    const AlmInstance alm = gen_alm(5, 42);
    const TfoInstance tfo = gen_tfo(7, 42);

    // Penalty scales sit exactly one decade apart.
    CHECK(alm.penalty_scale == 10.0 * tfo.penalty_scale);

    // Every ALM allocation reward lies in [1e5, 1.2e5) and is at least ten
    // times the TFO one-hot diagonal of 1e4.
    for (Index a = 0; a < alm.n_assets; ++a) {
        double mag = std::abs(alm.qubo.term(a, a));
        CHECK(mag >= 1e5);
        CHECK(mag < 1.2e5);
        CHECK(mag >= 10.0 * std::abs(tfo.qubo.term(0, 0)));
    }

    // TFO structural magnitudes are 1e4 (diagonal) and 2e4 (one-hot pair),
    // inside the nominal [1e3, 1e5) band.
    for (Index v = 0; v < tfo.n_vehicles; ++v) {
        for (Index r = 0; r < 3; ++r) {
            double diag = std::abs(tfo.qubo.term(tfo.var(v, r), tfo.var(v, r)));
            CHECK(diag == 1e4);
            for (Index s = r + 1; s < 3; ++s) {
                double pair = tfo.qubo.term(tfo.var(v, r), tfo.var(v, s));
                CHECK(pair == 2e4);
            }
        }
    }
}

TEST_CASE("generator argument validation") {
    CHECK_THROWS_AS(gen_alm(0, 1), InvalidInputError);
    CHECK_THROWS_AS(gen_tfo(0, 1), InvalidInputError);
    CHECK_THROWS_AS(gen_generic(0, 1), InvalidInputError);
}

TEST_CASE("generic generator structure") {
    Qubo q = gen_generic(9, 4);
    CHECK(q.dimension() == 9);
    CHECK(q.label() == "generic9");
    for (const auto& [key, value] : q.terms()) {
        CHECK(value >= -10.0);
        CHECK(value < 10.0);
    }
    // All diagonals present (values drawn from a continuous range are
    // nonzero with probability one).
    for (Index i = 0; i < 9; ++i) CHECK(q.term(i, i) != 0.0);
}

TEST_CASE("instance JSON records generation metadata") {
    const AlmInstance alm = gen_alm(4, 17);
    Json ja = to_json(alm);
    CHECK(ja.at("meta").at("kind") == "alm");
    CHECK(ja.at("meta").at("seed") == 17);
    CHECK(ja.at("meta").at("n_assets") == 4);
    CHECK(ja.at("meta").at("penalty_scale") == 1e5);
    CHECK(qubo_from_json(ja) == alm.qubo);

    const TfoInstance tfo = gen_tfo(3, 23);
    Json jt = to_json(tfo);
    CHECK(jt.at("meta").at("kind") == "tfo");
    CHECK(jt.at("meta").at("seed") == 23);
    CHECK(jt.at("meta").at("n_vehicles") == 3);
    CHECK(jt.at("meta").at("n_routes") == 3);
    CHECK(jt.at("meta").at("penalty_scale") == 1e4);
    CHECK(qubo_from_json(jt) == tfo.qubo);
}
