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

/// @file remote.hpp
/// @brief HTTP client for an annealer-style remote sampling service.
///
/// The protocol is one POST to `<endpoint>/v1/sample` with body
/// `{"qubo": <qubo json>, "params": {...}}`; the service answers
/// `{"samples": [{"bits": [...], "energy": e, "count": c}, ...],
///   "timing": {"pre_us": p, "anneal_us": a, "post_us": q}}`.
/// Every returned energy is re-verified against the local evaluation;
/// disagreements are overwritten with the local value and, beyond
/// relative 1e-9, counted in SampleSet::energy_mismatch_count.  The
/// sample set's timing combines the service's reported phases with the
/// client-side serialize/verify work.

#ifndef PARQUBO_REMOTE_HPP
#define PARQUBO_REMOTE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <httplib.h>

#include "parqubo/error.hpp"
#include "parqubo/qubo.hpp"
#include "parqubo/sample_set.hpp"
#include "parqubo/serialization.hpp"

namespace parqubo {

/// Relative energy disagreement beyond which a returned sample is flagged.
inline constexpr double kRemoteEnergyTolerance = 1e-9;

/// Submits one sampling request to `endpoint` (e.g. "http://host:1234").
/// `params` is passed through opaquely to the service.
inline SampleSet solve_remote(const Qubo& q, const std::string& endpoint,
                              const Json& params = Json::object()) {
    detail::Stopwatch watch;
    Timing timing;

    Json request;
    request["qubo"] = to_json(q);
    request["params"] = params.is_null() ? Json::object() : params;
    const std::string body = request.dump();
    timing.t_pre_us = watch.lap();

    httplib::Client client(endpoint);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(600, 0);
    auto res = client.Post("/v1/sample", body, "application/json");
    if (!res) {
        throw TransportError("remote sampler unreachable at " + endpoint + ": " +
                             httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw ProtocolError("remote sampler returned HTTP status " +
                            std::to_string(res->status));
    }
    watch.lap();  // network + service time is accounted from the response

    Json reply;
    try {
        reply = Json::parse(res->body);
    } catch (const nlohmann::json::parse_error& e) {
        throw ProtocolError(std::string("remote sampler sent invalid JSON: ") + e.what());
    }
    if (!reply.is_object() || !reply.contains("samples") || !reply["samples"].is_array() ||
        !reply.contains("timing") || !reply["timing"].is_object()) {
        throw ProtocolError("remote sampler reply must carry \"samples\" and \"timing\"");
    }
    const Json& jt = reply["timing"];
    for (const char* field : {"pre_us", "anneal_us", "post_us"}) {
        if (!jt.contains(field) || !jt[field].is_number_integer() ||
            jt[field].get<std::int64_t>() < 0) {
            throw ProtocolError(std::string("remote timing field \"") + field +
                                "\" must be a non-negative integer");
        }
    }

    SampleSet out;
    out.backend = Backend::Remote;
    for (const Json& js : reply["samples"]) {
        if (!js.is_object() || !js.contains("bits") || !js["bits"].is_array() ||
            !js.contains("energy") || !js["energy"].is_number() || !js.contains("count") ||
            !js["count"].is_number_integer() || js["count"].get<std::int64_t>() < 1) {
            throw ProtocolError("remote sample must carry bits, energy, and a positive count");
        }
        const Json& jbits = js["bits"];
        if (jbits.size() != q.dimension()) {
            throw ProtocolError("remote sample has " + std::to_string(jbits.size()) +
                                " bits, expected " + std::to_string(q.dimension()));
        }
        Sample sample;
        sample.assignment.reserve(q.dimension());
        for (const Json& jb : jbits) {
            if (!jb.is_number_integer() ||
                (jb.get<std::int64_t>() != 0 && jb.get<std::int64_t>() != 1)) {
                throw ProtocolError("remote sample bits must be 0 or 1");
            }
            sample.assignment.push_back(static_cast<std::uint8_t>(jb.get<std::int64_t>()));
        }
        sample.count = js["count"].get<std::uint64_t>();

        const double reported = js["energy"].get<double>();
        const double local = q.energy(sample.assignment);
        if (reported != local) {
            if (std::abs(reported - local) > kRemoteEnergyTolerance * std::max(1.0, std::abs(local))) {
                ++out.energy_mismatch_count;
            }
            sample.energy = local;
        } else {
            sample.energy = local;
        }
        out.num_reads += sample.count;
        out.samples.push_back(std::move(sample));
    }

    // Canonical order, merging duplicates the service may have split.
    std::sort(out.samples.begin(), out.samples.end(), [](const Sample& a, const Sample& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.assignment < b.assignment;
    });
    std::vector<Sample> merged;
    for (Sample& s : out.samples) {
        if (!merged.empty() && merged.back().assignment == s.assignment) {
            merged.back().count += s.count;
        } else {
            merged.push_back(std::move(s));
        }
    }
    out.samples = std::move(merged);

    timing.t_pre_us += jt["pre_us"].get<std::int64_t>();
    timing.t_anneal_us = jt["anneal_us"].get<std::int64_t>();
    timing.t_post_us = jt["post_us"].get<std::int64_t>() + watch.lap();
    out.timing = timing;
    return out;
}

}  // namespace parqubo

#endif  // PARQUBO_REMOTE_HPP
