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

/// @file serialization.hpp
/// @brief JSON formats for QUBOs, composites, instances, and sample sets.
///
/// A QUBO file is `{"dimension": n, "label": "...", "terms": [[i, j, v],
/// ...]}` with i <= j in ascending order.  A composite adds `"blocks":
/// [{"offset", "length", "label", "kind"}, ...]`.  Generated instances add
/// a `"meta"` object recording kind, seed, and scales.  Serialization is
/// canonical: re-reading a written file reproduces the coefficient map
/// exactly, and identical inputs produce byte-identical files.

#ifndef PARQUBO_SERIALIZATION_HPP
#define PARQUBO_SERIALIZATION_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "parqubo/composite.hpp"
#include "parqubo/error.hpp"
#include "parqubo/normalize.hpp"
#include "parqubo/problems.hpp"
#include "parqubo/qubo.hpp"
#include "parqubo/sample_set.hpp"

namespace parqubo {

/// JSON document type used throughout; insertion-ordered so emitted files
/// are deterministic.
using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require_field(const Json& j, const char* field, const char* context) {
    auto it = j.find(field);
    if (it == j.end()) {
        throw InvalidInputError(std::string(context) + ": missing field \"" + field + "\"");
    }
    return *it;
}

}  // namespace detail

inline Json to_json(const Qubo& q) {
    Json terms = Json::array();
    for (const auto& [key, value] : q.terms()) {
        terms.push_back(Json::array({key.first, key.second, value}));
    }
    Json j;
    j["dimension"] = q.dimension();
    j["label"] = q.label();
    j["terms"] = std::move(terms);
    return j;
}

inline Qubo qubo_from_json(const Json& j) {
    if (!j.is_object()) {
        throw InvalidInputError("qubo: expected a JSON object");
    }
    const Json& dim = detail::require_field(j, "dimension", "qubo");
    if (!dim.is_number_unsigned() && !dim.is_number_integer()) {
        throw InvalidInputError("qubo: \"dimension\" must be an integer");
    }
    long long d = dim.get<long long>();
    if (d < 0 || d > (1ll << 31)) {
        throw InvalidInputError("qubo: \"dimension\" out of range");
    }
    std::string label;
    if (auto it = j.find("label"); it != j.end()) {
        if (!it->is_string()) throw InvalidInputError("qubo: \"label\" must be a string");
        label = it->get<std::string>();
    }
    Qubo q(static_cast<Index>(d), label);
    const Json& terms = detail::require_field(j, "terms", "qubo");
    if (!terms.is_array()) {
        throw InvalidInputError("qubo: \"terms\" must be an array");
    }
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
            !t[1].is_number_integer() || !t[2].is_number()) {
            throw InvalidInputError("qubo: each term must be [i, j, value]");
        }
        long long i = t[0].get<long long>();
        long long k = t[1].get<long long>();
        if (i < 0 || k < 0 || i >= d || k >= d) {
            throw InvalidInputError("qubo: term index out of range");
        }
        q.add_term(static_cast<Index>(i), static_cast<Index>(k), t[2].get<double>());
    }
    return q;
}

inline Json to_json(const CompositeQubo& c) {
    Json j = to_json(c.qubo());
    Json blocks = Json::array();
    for (const Block& b : c.blocks()) {
        Json jb;
        jb["offset"] = b.offset;
        jb["length"] = b.length;
        jb["label"] = b.label;
        jb["kind"] = to_string(b.kind);
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

inline CompositeQubo composite_from_json(const Json& j) {
    Qubo q = qubo_from_json(j);
    const Json& jblocks = detail::require_field(j, "blocks", "composite");
    if (!jblocks.is_array() || jblocks.empty()) {
        throw InvalidInputError("composite: \"blocks\" must be a non-empty array");
    }
    std::vector<Block> blocks;
    for (const Json& jb : jblocks) {
        Block b;
        b.offset = detail::require_field(jb, "offset", "block").get<Index>();
        b.length = detail::require_field(jb, "length", "block").get<Index>();
        b.label = detail::require_field(jb, "label", "block").get<std::string>();
        b.kind = problem_kind_from_string(
                detail::require_field(jb, "kind", "block").get<std::string>());
        blocks.push_back(std::move(b));
    }
    return CompositeQubo(std::move(q), std::move(blocks));
}

inline Json to_json(const NormalizationSpec& spec) {
    Json j;
    j["kind"] = to_string(spec.kind);
    if (spec.kind == NormalizationKind::Scalar) {
        j["scalar_value"] = spec.scalar_value;
        j["scalar_op"] = spec.scalar_op == ScalarOp::Multiply ? "multiply" : "divide";
    }
    return j;
}

inline NormalizationSpec normalization_from_json(const Json& j) {
    if (j.is_string()) {
        return parse_normalization(j.get<std::string>());
    }
    if (!j.is_object()) {
        throw InvalidInputError("normalization: expected an object or a flag string");
    }
    NormalizationKind kind = normalization_kind_from_string(
            detail::require_field(j, "kind", "normalization").get<std::string>());
    if (kind != NormalizationKind::Scalar) {
        return NormalizationSpec::of(kind);
    }
    double value = detail::require_field(j, "scalar_value", "normalization").get<double>();
    std::string op = detail::require_field(j, "scalar_op", "normalization").get<std::string>();
    if (op != "multiply" && op != "divide") {
        throw InvalidInputError("normalization: \"scalar_op\" must be multiply or divide");
    }
    return NormalizationSpec::scalar(value,
                                     op == "multiply" ? ScalarOp::Multiply : ScalarOp::Divide);
}

inline Json to_json(const SampleSet& s) {
    Json samples = Json::array();
    for (const Sample& sample : s.samples) {
        Json js;
        Json bits = Json::array();
        for (std::uint8_t b : sample.assignment) bits.push_back(static_cast<int>(b));
        js["bits"] = std::move(bits);
        js["energy"] = sample.energy;
        js["count"] = sample.count;
        samples.push_back(std::move(js));
    }
    Json j;
    j["backend"] = to_string(s.backend);
    j["num_reads"] = s.num_reads;
    j["energy_mismatches"] = s.energy_mismatch_count;
    Json t;
    t["pre_us"] = s.timing.t_pre_us;
    t["anneal_us"] = s.timing.t_anneal_us;
    t["post_us"] = s.timing.t_post_us;
    j["timing"] = std::move(t);
    j["samples"] = std::move(samples);
    return j;
}

inline Json to_json(const AlmInstance& inst) {
    Json j = to_json(inst.qubo);
    Json meta;
    meta["kind"] = "alm";
    meta["seed"] = inst.rng_seed;
    meta["n_assets"] = inst.n_assets;
    meta["penalty_scale"] = inst.penalty_scale;
    j["meta"] = std::move(meta);
    return j;
}

inline Json to_json(const TfoInstance& inst) {
    Json j = to_json(inst.qubo);
    Json meta;
    meta["kind"] = "tfo";
    meta["seed"] = inst.rng_seed;
    meta["n_vehicles"] = inst.n_vehicles;
    meta["n_routes"] = inst.n_routes;
    meta["penalty_scale"] = inst.penalty_scale;
    j["meta"] = std::move(meta);
    return j;
}

/// Renders a document the way every parqubo file is written: two-space
/// indent plus a trailing newline.
inline std::string to_file_string(const Json& j) { return j.dump(2) + "\n"; }

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open \"" + path + "\" for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed while reading \"" + path + "\"");
    }
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("\"" + path + "\" is not valid JSON: " + e.what());
    }
}

inline void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open \"" + path + "\" for writing");
    }
    out << to_file_string(j);
    out.flush();
    if (!out) {
        throw IoError("failed while writing \"" + path + "\"");
    }
}

}  // namespace parqubo

#endif  // PARQUBO_SERIALIZATION_HPP
