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

/// @file rng.hpp
/// @brief Deterministic random-number helpers shared by generators and solvers.

#ifndef PARQUBO_RNG_HPP
#define PARQUBO_RNG_HPP

#include <cstdint>
#include <random>

namespace parqubo {
namespace detail {

/// Odd constant (2^64 / golden ratio) used to derive independent
/// per-stream seeds from a base seed.
inline constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

/// Uniform double in [0, 1) built from the top 53 bits of the generator.
/// Hand-scaled instead of std::uniform_real_distribution so streams are
/// bit-identical across standard libraries.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(gen);
}

}  // namespace detail
}  // namespace parqubo

#endif  // PARQUBO_RNG_HPP
