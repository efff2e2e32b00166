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

/// @file composite.hpp
/// @brief Block-diagonal composition of independent QUBO problems.
///
/// Several QUBOs are stacked diagonally into one composite; interaction
/// terms between variables of different problems are always zero, so the
/// composite energy is the sum of the per-block energies and the composite
/// optimum separates into per-block optima.

#ifndef PARQUBO_COMPOSITE_HPP
#define PARQUBO_COMPOSITE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "parqubo/error.hpp"
#include "parqubo/qubo.hpp"

namespace parqubo {

/// Kind of problem a block was generated from.
enum class ProblemKind { Alm, Tfo, Generic };

inline std::string to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Alm: return "alm";
        case ProblemKind::Tfo: return "tfo";
        case ProblemKind::Generic: return "generic";
    }
    throw InvalidInputError("unknown problem kind");
}

inline ProblemKind problem_kind_from_string(const std::string& s) {
    if (s == "alm") return ProblemKind::Alm;
    if (s == "tfo") return ProblemKind::Tfo;
    if (s == "generic") return ProblemKind::Generic;
    throw InvalidInputError("unknown problem kind: \"" + s + "\"");
}

/// One sub-problem's position inside a composite.
struct Block {
    Index offset = 0;
    Index length = 0;
    std::string label;
    ProblemKind kind = ProblemKind::Generic;
};

/// A stacked QUBO plus the ordered list of blocks it was built from.
///
/// Construction validates the two structural rules: blocks tile
/// [0, dimension) contiguously in order, and no stored coefficient couples
/// two different blocks.
class CompositeQubo {
  public:
    CompositeQubo(Qubo qubo, std::vector<Block> blocks)
            : qubo_(std::move(qubo)), blocks_(std::move(blocks)) {
        validate();
    }

    const Qubo& qubo() const { return qubo_; }

    const std::vector<Block>& blocks() const { return blocks_; }

    std::size_t num_blocks() const { return blocks_.size(); }

    Index dimension() const { return qubo_.dimension(); }

    /// Index of the block containing variable i.
    std::size_t block_of(Index i) const {
        if (i >= dimension()) {
            throw InvalidInputError("variable index out of range");
        }
        std::size_t b = 0;
        while (i >= blocks_[b].offset + blocks_[b].length) ++b;
        return b;
    }

    /// Extracts block b as a standalone QUBO with indices rebased to 0.
    Qubo block_qubo(std::size_t b) const {
        if (b >= blocks_.size()) {
            throw InvalidInputError("block index out of range");
        }
        const Block& blk = blocks_[b];
        Qubo out(blk.length, blk.label);
        const Index lo = blk.offset;
        const Index hi = blk.offset + blk.length;
        for (const auto& [key, value] : qubo_.terms()) {
            if (key.first >= lo && key.first < hi) {
                out.set_term(key.first - lo, key.second - lo, value);
            }
        }
        return out;
    }

  private:
    void validate() const {
        if (blocks_.empty()) {
            throw InvalidInputError("composite requires at least one block");
        }
        Index expected_offset = 0;
        for (const Block& blk : blocks_) {
            if (blk.offset != expected_offset) {
                throw InvalidInputError("blocks must be contiguous and in order");
            }
            if (blk.length == 0) {
                throw InvalidInputError("blocks must be non-empty");
            }
            expected_offset += blk.length;
        }
        if (expected_offset != qubo_.dimension()) {
            throw InvalidInputError("blocks must cover the full dimension");
        }
        // The cross-term-zero rule: both indices of every stored pair must
        // fall inside one block.
        std::size_t b = 0;
        for (const auto& [key, value] : qubo_.terms()) {
            (void)value;
            while (key.first >= blocks_[b].offset + blocks_[b].length) ++b;
            if (key.second >= blocks_[b].offset + blocks_[b].length) {
                throw InvalidInputError("coefficient (" + std::to_string(key.first) + ", " +
                                        std::to_string(key.second) + ") spans two blocks");
            }
        }
    }

    Qubo qubo_;
    std::vector<Block> blocks_;
};

/// Stacks the given problems diagonally, in list order, into one composite.
/// Block k keeps problem k's label and the supplied kind.
inline CompositeQubo compose(const std::vector<Qubo>& problems,
                             const std::vector<ProblemKind>& kinds) {
    if (problems.empty()) {
        throw InvalidInputError("compose: problem list must be non-empty");
    }
    if (!kinds.empty() && kinds.size() != problems.size()) {
        throw InvalidInputError("compose: kinds list must match problem list");
    }
    Index total = 0;
    for (const Qubo& q : problems) total += q.dimension();

    Qubo stacked(total, "composite");
    std::vector<Block> blocks;
    blocks.reserve(problems.size());
    Index offset = 0;
    for (std::size_t k = 0; k < problems.size(); ++k) {
        const Qubo& q = problems[k];
        for (const auto& [key, value] : q.terms()) {
            stacked.set_term(key.first + offset, key.second + offset, value);
        }
        blocks.push_back(Block{offset, q.dimension(), q.label(),
                               kinds.empty() ? ProblemKind::Generic : kinds[k]});
        offset += q.dimension();
    }
    return CompositeQubo(std::move(stacked), std::move(blocks));
}

inline CompositeQubo compose(const std::vector<Qubo>& problems) {
    return compose(problems, {});
}

/// Splits a composite assignment into per-block slices, in block order.
inline std::vector<Assignment> decompose(const CompositeQubo& c, const Assignment& x) {
    if (x.size() != c.dimension()) {
        throw InvalidInputError("decompose: assignment length does not match composite dimension");
    }
    std::vector<Assignment> parts;
    parts.reserve(c.num_blocks());
    for (const Block& blk : c.blocks()) {
        parts.emplace_back(x.begin() + blk.offset, x.begin() + blk.offset + blk.length);
    }
    return parts;
}

}  // namespace parqubo

#endif  // PARQUBO_COMPOSITE_HPP
