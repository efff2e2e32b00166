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

/// @file problems.hpp
/// @brief Desk-scale ALM and TFO instance generators plus violation counters.
///
/// The asset-liability (ALM) generator rewards allocating every asset: each
/// asset carries a large negative diagonal (penalty plus expected return)
/// and asset pairs carry small positive risk couplings, so the all-ones
/// assignment is the unique optimum.  The traffic-flow (TFO) generator
/// assigns each vehicle exactly one of three shared global routes via a
/// quadratic one-hot penalty, with positive congestion couplings between
/// vehicles sharing a route.  Coefficient magnitudes reproduce the 10^5 vs
/// 10^4 disparity that makes the two problems interesting to compose.

#ifndef PARQUBO_PROBLEMS_HPP
#define PARQUBO_PROBLEMS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "parqubo/composite.hpp"
#include "parqubo/error.hpp"
#include "parqubo/qubo.hpp"
#include "parqubo/rng.hpp"

namespace parqubo {

/// A generated asset-liability modelling instance.
struct AlmInstance {
    std::uint32_t n_assets = 0;
    double penalty_scale = 0.0;
    std::vector<double> returns;                      // per asset, in [0, 0.2*penalty)
    std::map<std::pair<Index, Index>, double> risk;   // per pair a < b
    Qubo qubo;
    std::uint64_t rng_seed = 0;
};

/// A generated traffic-flow optimization instance.
struct TfoInstance {
    std::uint32_t n_vehicles = 0;
    std::uint32_t n_routes = 3;
    double penalty_scale = 0.0;
    /// Congestion coupling per (vehicle v, vehicle w, route r) with v < w.
    std::map<std::tuple<Index, Index, Index>, double> congestion;
    /// The fixed segment template: route r covers segments[r].
    std::vector<std::vector<Index>> route_segments;
    Qubo qubo;
    std::uint64_t rng_seed = 0;

    Index var(Index vehicle, Index route) const { return vehicle * n_routes + route; }
};

/// Per-problem constraint violations for one assignment.
struct ViolationReport {
    ProblemKind problem_kind = ProblemKind::Generic;
    std::uint64_t count = 0;
    std::map<std::string, std::uint64_t> breakdown;
};

/// Generates an ALM instance with `n_assets` binary allocation variables.
///
/// Diagonal term for asset a: -(penalty_scale + return_a) with return_a
/// uniform in [0, 0.2*penalty_scale).  Off-diagonal risk term for each pair
/// (a, b): uniform in [0, r*penalty_scale) with r = min(0.1, 0.9/(n-1)) —
/// the cap equals the nominal 0.1 for every n <= 10 and shrinks beyond
/// that so the total risk pulling on one asset can never cancel its
/// allocation reward.  Flipping any variable to 1 therefore lowers the
/// energy by more than 0.1*penalty_scale regardless of the rest of the
/// assignment, making all-ones the unique optimum at every size.
inline AlmInstance gen_alm(std::uint32_t n_assets, std::uint64_t seed,
                           double penalty_scale = 1e5) {
    if (n_assets == 0) {
        throw InvalidInputError("gen_alm: n_assets must be at least 1");
    }
    AlmInstance inst;
    inst.n_assets = n_assets;
    inst.penalty_scale = penalty_scale;
    inst.rng_seed = seed;
    inst.qubo = Qubo(n_assets, "alm" + std::to_string(n_assets));

    std::mt19937_64 gen(seed);
    inst.returns.reserve(n_assets);
    for (Index a = 0; a < n_assets; ++a) {
        double ret = detail::uniform(gen, 0.0, 0.2 * penalty_scale);
        inst.returns.push_back(ret);
        inst.qubo.set_term(a, a, -(penalty_scale + ret));
    }
    if (n_assets > 1) {
        double risk_cap = std::min(0.1, 0.9 / static_cast<double>(n_assets - 1));
        for (Index a = 0; a + 1 < n_assets; ++a) {
            for (Index b = a + 1; b < n_assets; ++b) {
                double r = detail::uniform(gen, 0.0, risk_cap * penalty_scale);
                inst.risk[{a, b}] = r;
                inst.qubo.set_term(a, b, r);
            }
        }
    }
    return inst;
}

/// Generates a TFO instance with `n_vehicles` vehicles over 3 shared
/// global routes (dimension = 3 * n_vehicles; variable (v, r) sits at
/// index v*3 + r).
///
/// Each vehicle carries the one-hot penalty lambda*(sum_r x_{v,r} - 1)^2
/// with lambda = penalty_scale, expanded (constant dropped) into -lambda
/// diagonals and +2*lambda couplings between the vehicle's route
/// variables.  Routes follow a fixed 3-route / 9-segment template: route r
/// covers segments {3r, 3r+1, 3r+2}, so routes are pairwise disjoint and
/// two vehicles share segments exactly when they pick the same route.  Each
/// sharing pair (v < w, route r) gets one positive congestion coupling
/// uniform in [0, 0.05*penalty_scale).
inline TfoInstance gen_tfo(std::uint32_t n_vehicles, std::uint64_t seed,
                           double penalty_scale = 1e4) {
    if (n_vehicles == 0) {
        throw InvalidInputError("gen_tfo: n_vehicles must be at least 1");
    }
    TfoInstance inst;
    inst.n_vehicles = n_vehicles;
    inst.n_routes = 3;
    inst.penalty_scale = penalty_scale;
    inst.rng_seed = seed;
    inst.qubo = Qubo(n_vehicles * 3, "tfo" + std::to_string(n_vehicles * 3));
    for (Index r = 0; r < 3; ++r) {
        inst.route_segments.push_back({3 * r, 3 * r + 1, 3 * r + 2});
    }

    const double lambda = penalty_scale;
    for (Index v = 0; v < n_vehicles; ++v) {
        for (Index r = 0; r < 3; ++r) {
            inst.qubo.set_term(inst.var(v, r), inst.var(v, r), -lambda);
            for (Index s = r + 1; s < 3; ++s) {
                inst.qubo.set_term(inst.var(v, r), inst.var(v, s), 2.0 * lambda);
            }
        }
    }

    std::mt19937_64 gen(seed);
    for (Index v = 0; v + 1 < n_vehicles; ++v) {
        for (Index w = v + 1; w < n_vehicles; ++w) {
            for (Index r = 0; r < 3; ++r) {
                double c = detail::uniform(gen, 0.0, 0.05 * penalty_scale);
                inst.congestion[{v, w, r}] = c;
                inst.qubo.set_term(inst.var(v, r), inst.var(w, r), c);
            }
        }
    }
    return inst;
}

/// Violations for ALM: one per unallocated asset (zero bit).
inline ViolationReport count_violations_alm(const AlmInstance& inst, const Assignment& x) {
    if (x.size() != inst.n_assets) {
        throw InvalidInputError("count_violations_alm: assignment length mismatch");
    }
    ViolationReport report;
    report.problem_kind = ProblemKind::Alm;
    std::uint64_t unallocated = 0;
    for (std::uint8_t bit : x) {
        if (bit == 0) ++unallocated;
    }
    report.breakdown["unallocated_asset"] = unallocated;
    report.count = unallocated;
    return report;
}

/// Violations for TFO, three rules: a vehicle with no route, a vehicle
/// with more than one route, and a route not allotted even one vehicle.
inline ViolationReport count_violations_tfo(const TfoInstance& inst, const Assignment& x) {
    if (x.size() != static_cast<std::size_t>(inst.n_vehicles) * inst.n_routes) {
        throw InvalidInputError("count_violations_tfo: assignment length mismatch");
    }
    std::uint64_t no_route = 0;
    std::uint64_t multi_route = 0;
    std::vector<std::uint32_t> route_load(inst.n_routes, 0);
    for (Index v = 0; v < inst.n_vehicles; ++v) {
        std::uint32_t chosen = 0;
        for (Index r = 0; r < inst.n_routes; ++r) {
            if (x[inst.var(v, r)]) {
                ++chosen;
                ++route_load[r];
            }
        }
        if (chosen == 0) ++no_route;
        if (chosen > 1) ++multi_route;
    }
    std::uint64_t unused = 0;
    for (std::uint32_t load : route_load) {
        if (load == 0) ++unused;
    }

    ViolationReport report;
    report.problem_kind = ProblemKind::Tfo;
    report.breakdown["vehicle_no_route"] = no_route;
    report.breakdown["vehicle_multi_route"] = multi_route;
    report.breakdown["route_unused"] = unused;
    report.count = no_route + multi_route + unused;
    return report;
}

/// Generates an unstructured test problem: diagonal terms uniform in
/// [-10, 10) and each off-diagonal pair present with probability 1/2,
/// also uniform in [-10, 10).  Used for GENERIC blocks and property tests.
inline Qubo gen_generic(Index dimension, std::uint64_t seed) {
    if (dimension == 0) {
        throw InvalidInputError("gen_generic: dimension must be at least 1");
    }
    Qubo q(dimension, "generic" + std::to_string(dimension));
    std::mt19937_64 gen(seed);
    for (Index i = 0; i < dimension; ++i) {
        q.set_term(i, i, detail::uniform(gen, -10.0, 10.0));
    }
    for (Index i = 0; i + 1 < dimension; ++i) {
        for (Index j = i + 1; j < dimension; ++j) {
            bool present = (gen() & 1) != 0;
            double value = detail::uniform(gen, -10.0, 10.0);
            if (present) q.set_term(i, j, value);
        }
    }
    return q;
}

}  // namespace parqubo

#endif  // PARQUBO_PROBLEMS_HPP
