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

/// @file normalize.hpp
/// @brief Sign-preserving coefficient transforms for composite QUBOs.
///
/// When problems of very different coefficient magnitude share one
/// composite, the larger problem dominates the energy landscape.  The
/// transforms here rescale stored coefficients while preserving their
/// signs (and mapping 0 to 0), so the structural relationships between
/// terms survive.  Every transform is a pure per-coefficient map; two of
/// them apply only to the first or second block of the composite.

#ifndef PARQUBO_NORMALIZE_HPP
#define PARQUBO_NORMALIZE_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "parqubo/composite.hpp"
#include "parqubo/error.hpp"
#include "parqubo/qubo.hpp"

namespace parqubo {

enum class NormalizationKind {
    Sqrt,
    FourthRoot,
    SqrtFirstBlock,
    SqrtSecondBlock,
    Log10,
    Square,
    SquareThenLog,
    LogThenSquare,
    Scalar,
};

enum class ScalarOp { Multiply, Divide };

/// The admissible scalar constants.
inline constexpr std::array<double, 6> kScalarSet = {2.5, 5.0, 10.0, 20.0, 50.0, 500.0};

/// Renders a double with the shortest round-trippable decimal form.
inline std::string format_double(double v) {
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

/// Selects one normalization technique, plus the scalar constant and
/// operation when the kind is Scalar.
struct NormalizationSpec {
    NormalizationKind kind = NormalizationKind::Scalar;
    double scalar_value = 0.0;  // Scalar only; must be a member of kScalarSet.
    ScalarOp scalar_op = ScalarOp::Multiply;  // Scalar only.

    static NormalizationSpec of(NormalizationKind kind) {
        if (kind == NormalizationKind::Scalar) {
            throw InvalidInputError("scalar normalization needs a constant and an operation");
        }
        NormalizationSpec spec;
        spec.kind = kind;
        return spec;
    }

    static NormalizationSpec scalar(double value, ScalarOp op) {
        NormalizationSpec spec;
        spec.kind = NormalizationKind::Scalar;
        spec.scalar_value = value;
        spec.scalar_op = op;
        spec.validate();
        return spec;
    }

    void validate() const {
        if (kind != NormalizationKind::Scalar) return;
        for (double k : kScalarSet) {
            if (scalar_value == k) return;
        }
        throw InvalidInputError("scalar constant " + format_double(scalar_value) +
                                " is not one of {2.5, 5, 10, 20, 50, 500}");
    }
};

inline std::string to_string(NormalizationKind kind) {
    switch (kind) {
        case NormalizationKind::Sqrt: return "sqrt";
        case NormalizationKind::FourthRoot: return "fourth_root";
        case NormalizationKind::SqrtFirstBlock: return "sqrt_first_block";
        case NormalizationKind::SqrtSecondBlock: return "sqrt_second_block";
        case NormalizationKind::Log10: return "log10";
        case NormalizationKind::Square: return "square";
        case NormalizationKind::SquareThenLog: return "square_then_log";
        case NormalizationKind::LogThenSquare: return "log_then_square";
        case NormalizationKind::Scalar: return "scalar";
    }
    throw InvalidInputError("unknown normalization kind");
}

inline NormalizationKind normalization_kind_from_string(const std::string& s) {
    if (s == "sqrt") return NormalizationKind::Sqrt;
    if (s == "fourth_root") return NormalizationKind::FourthRoot;
    if (s == "sqrt_first_block") return NormalizationKind::SqrtFirstBlock;
    if (s == "sqrt_second_block") return NormalizationKind::SqrtSecondBlock;
    if (s == "log10") return NormalizationKind::Log10;
    if (s == "square") return NormalizationKind::Square;
    if (s == "square_then_log") return NormalizationKind::SquareThenLog;
    if (s == "log_then_square") return NormalizationKind::LogThenSquare;
    if (s == "scalar") return NormalizationKind::Scalar;
    throw InvalidInputError("unknown normalization kind: \"" + s + "\"");
}

/// Compact one-token label, e.g. "sqrt" or "scalar:x10" / "scalar:d2.5".
inline std::string to_string(const NormalizationSpec& spec) {
    if (spec.kind != NormalizationKind::Scalar) return to_string(spec.kind);
    return std::string("scalar:") + (spec.scalar_op == ScalarOp::Multiply ? "x" : "d") +
           format_double(spec.scalar_value);
}

/// Parses the CLI form `<kind>[:<op><k>]`, e.g. "sqrt" or "scalar:x10".
inline NormalizationSpec parse_normalization(const std::string& flag) {
    auto colon = flag.find(':');
    std::string kind_str = flag.substr(0, colon);
    NormalizationKind kind = normalization_kind_from_string(kind_str);
    if (kind != NormalizationKind::Scalar) {
        if (colon != std::string::npos) {
            throw InvalidInputError("normalization \"" + kind_str + "\" takes no argument");
        }
        return NormalizationSpec::of(kind);
    }
    if (colon == std::string::npos || colon + 2 > flag.size()) {
        throw InvalidInputError("scalar normalization needs \":x<k>\" or \":d<k>\"");
    }
    char op_char = flag[colon + 1];
    ScalarOp op;
    if (op_char == 'x') {
        op = ScalarOp::Multiply;
    } else if (op_char == 'd') {
        op = ScalarOp::Divide;
    } else {
        throw InvalidInputError("scalar operation must be 'x' (multiply) or 'd' (divide)");
    }
    const char* begin = flag.data() + colon + 2;
    const char* end = flag.data() + flag.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw InvalidInputError("could not parse scalar constant in \"" + flag + "\"");
    }
    return NormalizationSpec::scalar(value, op);
}

/// Applies one technique to a single coefficient.  Total on finite reals;
/// every branch keeps sign(result) compatible with sign(x) and maps 0 to 0.
inline double transform_term(const NormalizationSpec& spec, double x) {
    if (!std::isfinite(x)) {
        throw InvalidInputError("transform_term: coefficient must be finite");
    }
    switch (spec.kind) {
        case NormalizationKind::Sqrt:
        case NormalizationKind::SqrtFirstBlock:
        case NormalizationKind::SqrtSecondBlock:
            // Negative terms are made positive, rooted, then negated again.
            return x >= 0.0 ? std::sqrt(x) : -std::sqrt(-x);
        case NormalizationKind::FourthRoot:
            // Two square roots in succession, sign handled as above.
            return x >= 0.0 ? std::sqrt(std::sqrt(x)) : -std::sqrt(std::sqrt(-x));
        case NormalizationKind::Log10:
            if (x == 0.0) return 0.0;
            if (x >= 1.0) return std::log10(x);
            if (x > 0.0) return -std::log10(x);
            if (x > -1.0) return std::log10(-x);
            return -std::log10(-x);
        case NormalizationKind::Square:
            return x >= 0.0 ? x * x : -(x * x);
        case NormalizationKind::SquareThenLog:
            // log10(x^2) evaluated as 2*log10|x| so huge inputs do not
            // overflow the intermediate square.
            if (x == 0.0) return 0.0;
            if (x >= 1.0) return 2.0 * std::log10(x);
            if (x > 0.0) return -2.0 * std::log10(x);
            if (x > -1.0) return 2.0 * std::log10(-x);
            return -2.0 * std::log10(-x);
        case NormalizationKind::LogThenSquare: {
            if (x == 0.0) return 0.0;
            double l = std::log10(std::abs(x));
            return x > 0.0 ? l * l : -(l * l);
        }
        case NormalizationKind::Scalar: {
            spec.validate();
            double factor = spec.scalar_op == ScalarOp::Multiply ? spec.scalar_value
                                                                 : 1.0 / spec.scalar_value;
            return x * factor;
        }
    }
    throw InvalidInputError("unknown normalization kind");
}

/// Returns a new composite with identical structure and every stored
/// coefficient replaced by transform_term.  For the block-selective kinds
/// only coefficients whose indices lie in block 0 (SqrtFirstBlock) or
/// block 1 (SqrtSecondBlock) are transformed; others are copied unchanged.
inline CompositeQubo normalize(const CompositeQubo& c, const NormalizationSpec& spec) {
    spec.validate();
    const bool selective = spec.kind == NormalizationKind::SqrtFirstBlock ||
                           spec.kind == NormalizationKind::SqrtSecondBlock;
    if (selective && c.num_blocks() < 2) {
        throw InvalidInputError("block-selective normalization requires at least two blocks");
    }
    std::size_t target_block =
            spec.kind == NormalizationKind::SqrtSecondBlock ? 1 : 0;

    Qubo out(c.dimension(), c.qubo().label());
    for (const auto& [key, value] : c.qubo().terms()) {
        // Both indices share a block (composite invariant), so the first
        // index decides the block.
        bool apply = !selective || c.block_of(key.first) == target_block;
        out.set_term(key.first, key.second, apply ? transform_term(spec, value) : value);
    }
    return CompositeQubo(std::move(out), c.blocks());
}

/// The full normalization sweep: 8 non-scalar techniques followed by the
/// 12 scalar variants (each constant multiplied, then each divided), in
/// the order the experiment tables use.
inline std::vector<NormalizationSpec> all_normalizations() {
    std::vector<NormalizationSpec> out;
    out.push_back(NormalizationSpec::of(NormalizationKind::Log10));
    out.push_back(NormalizationSpec::of(NormalizationKind::Sqrt));
    out.push_back(NormalizationSpec::of(NormalizationKind::FourthRoot));
    out.push_back(NormalizationSpec::of(NormalizationKind::SqrtFirstBlock));
    out.push_back(NormalizationSpec::of(NormalizationKind::SqrtSecondBlock));
    out.push_back(NormalizationSpec::of(NormalizationKind::Square));
    out.push_back(NormalizationSpec::of(NormalizationKind::SquareThenLog));
    out.push_back(NormalizationSpec::of(NormalizationKind::LogThenSquare));
    for (double k : kScalarSet) out.push_back(NormalizationSpec::scalar(k, ScalarOp::Multiply));
    for (double k : kScalarSet) out.push_back(NormalizationSpec::scalar(k, ScalarOp::Divide));
    return out;
}

}  // namespace parqubo

#endif  // PARQUBO_NORMALIZE_HPP
