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

/// @file qubo.hpp
/// @brief Sparse QUBO data model and energy evaluation.
///
/// A QUBO instance is the quadratic form x^T Q x over binary variables,
/// stored as an upper-triangular sparse coefficient map: diagonal entries
/// are linear terms (x_i^2 = x_i) and off-diagonal entries are pairwise
/// interactions.  Absent pairs are implicitly zero and the canonical form
/// never stores an explicit zero.

#ifndef PARQUBO_QUBO_HPP
#define PARQUBO_QUBO_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parqubo/error.hpp"

namespace parqubo {

/// Variable index within a QUBO.
using Index = std::uint32_t;

/// One candidate solution: a vector of 0/1 values, one per variable.
using Assignment = std::vector<std::uint8_t>;

/// Coefficient storage: ordered pair (i, j) with i <= j mapped to a value.
using TermMap = std::map<std::pair<Index, Index>, double>;

/// Concatenates per-problem assignments into one composite assignment.
inline Assignment concat(const std::vector<Assignment>& parts) {
    Assignment out;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    out.reserve(total);
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

/// Sparse symmetric QUBO over binary variables.
///
/// Coefficients addressed with (j, i), j > i, are folded into the canonical
/// (i, j) entry, so symmetric-full input is accepted and stored exactly once.
class Qubo {
  public:
    Qubo() = default;

    explicit Qubo(Index dimension, std::string label = {})
            : dimension_(dimension), label_(std::move(label)) {}

    Index dimension() const { return dimension_; }

    const std::string& label() const { return label_; }

    void set_label(std::string label) { label_ = std::move(label); }

    /// Adds `value` onto coefficient (i, j); entries that become exactly
    /// zero are erased to keep the map canonical.
    void add_term(Index i, Index j, double value) {
        auto key = canonical_key(i, j);
        check_value(value);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (value != 0.0) terms_.emplace(key, value);
            return;
        }
        it->second += value;
        check_value(it->second);
        if (it->second == 0.0) terms_.erase(it);
    }

    /// Overwrites coefficient (i, j); a zero value erases the entry.
    void set_term(Index i, Index j, double value) {
        auto key = canonical_key(i, j);
        check_value(value);
        if (value == 0.0) {
            terms_.erase(key);
        } else {
            terms_[key] = value;
        }
    }

    /// Returns coefficient (i, j), or 0 when the pair is absent.
    double term(Index i, Index j) const {
        auto it = terms_.find(canonical_key(i, j));
        return it == terms_.end() ? 0.0 : it->second;
    }

    const TermMap& terms() const { return terms_; }

    std::size_t num_terms() const { return terms_.size(); }

    /// Evaluates x^T Q x.  The sum runs over the stored pairs in ascending
    /// (i, j) order, so the result is bit-reproducible for a given map.
    double energy(const Assignment& x) const {
        if (x.size() != dimension_) {
            throw InvalidInputError("energy: assignment length " + std::to_string(x.size()) +
                                    " does not match dimension " + std::to_string(dimension_));
        }
        double e = 0.0;
        for (const auto& [key, value] : terms_) {
            if (x[key.first] & x[key.second]) e += value;
        }
        return e;
    }

    /// Largest coefficient magnitude (0 for an empty map).
    double max_abs_coefficient() const {
        double m = 0.0;
        for (const auto& [key, value] : terms_) m = std::max(m, std::abs(value));
        return m;
    }

    /// Sum of coefficient magnitudes; used for rounding-error budgets.
    double abs_coefficient_sum() const {
        double s = 0.0;
        for (const auto& [key, value] : terms_) s += std::abs(value);
        return s;
    }

    friend bool operator==(const Qubo& a, const Qubo& b) {
        return a.dimension_ == b.dimension_ && a.label_ == b.label_ && a.terms_ == b.terms_;
    }

  private:
    std::pair<Index, Index> canonical_key(Index i, Index j) const {
        if (i > j) std::swap(i, j);
        if (j >= dimension_) {
            throw InvalidInputError("term index " + std::to_string(j) +
                                    " out of range for dimension " + std::to_string(dimension_));
        }
        return {i, j};
    }

    static void check_value(double value) {
        if (!std::isfinite(value)) {
            throw InvalidInputError("coefficient values must be finite");
        }
    }

    Index dimension_ = 0;
    std::string label_;
    TermMap terms_;
};

/// Free-function form of Qubo::energy.
inline double energy(const Qubo& q, const Assignment& x) { return q.energy(x); }

}  // namespace parqubo

#endif  // PARQUBO_QUBO_HPP
