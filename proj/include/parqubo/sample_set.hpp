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

/// @file sample_set.hpp
/// @brief Common solver output types: samples, timing, and SA schedules.

#ifndef PARQUBO_SAMPLE_SET_HPP
#define PARQUBO_SAMPLE_SET_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "parqubo/error.hpp"
#include "parqubo/qubo.hpp"

namespace parqubo {
namespace detail {

/// Monotonic phase timer.  lap() returns whole microseconds since the last
/// lap (or construction), rounding nonzero durations up so no phase that
/// did work is ever reported as free.
class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    std::int64_t lap() {
        auto now = std::chrono::steady_clock::now();
        auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(now - start_).count();
        start_ = now;
        return (ns + 999) / 1000;
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

enum class Backend { Exact, Sa, Remote };

inline std::string to_string(Backend backend) {
    switch (backend) {
        case Backend::Exact: return "exact";
        case Backend::Sa: return "sa";
        case Backend::Remote: return "remote";
    }
    throw InvalidInputError("unknown backend");
}

inline Backend backend_from_string(const std::string& s) {
    if (s == "exact") return Backend::Exact;
    if (s == "sa") return Backend::Sa;
    if (s == "remote") return Backend::Remote;
    throw InvalidInputError("unknown backend: \"" + s + "\"");
}

/// The three-part time split of one solve, in integer microseconds:
/// pre-processing, annealing (or enumeration), and post-processing.
struct Timing {
    std::int64_t t_pre_us = 0;
    std::int64_t t_anneal_us = 0;
    std::int64_t t_post_us = 0;
};

/// One distinct assignment with its energy and how often it was sampled.
struct Sample {
    Assignment assignment;
    double energy = 0.0;
    std::uint64_t count = 1;
};

/// Solver output: distinct samples sorted ascending by energy (ties by
/// assignment), the timing record, and the read count.  For the exact
/// backend the samples are the full optimum set and num_reads is 1;
/// otherwise occurrence counts sum to num_reads.
struct SampleSet {
    std::vector<Sample> samples;
    Timing timing;
    Backend backend = Backend::Exact;
    std::uint64_t num_reads = 0;
    /// Remote backend only: returned energies that disagreed with the
    /// local recomputation beyond relative 1e-9.
    std::uint64_t energy_mismatch_count = 0;

    const Sample& best() const {
        if (samples.empty()) {
            throw InvalidInputError("sample set is empty");
        }
        return samples.front();
    }
};

/// Simulated-annealing run parameters.  The defaults are the shipped
/// schedule, calibrated once against exhaustive enumeration on the
/// standard 26-variable two-problem composite: routing penalties dwarf
/// the congestion terms, so each read is effectively an independent
/// restart and the read count (not the sweep count) sets the hit rate.
/// 20000 reads put the per-solve optimum-hit probability above 99.9%.
struct SaSchedule {
    std::uint64_t num_reads = 20000;
    std::uint64_t sweeps = 1000;
    double beta_start = 0.01;
    double beta_end = 10.0;
    std::uint64_t seed = 0;

    void validate() const {
        if (num_reads == 0) throw InvalidInputError("SA schedule: num_reads must be >= 1");
        if (sweeps == 0) throw InvalidInputError("SA schedule: sweeps must be >= 1");
        if (!(beta_start > 0.0) || !(beta_end > 0.0)) {
            throw InvalidInputError("SA schedule: betas must be positive");
        }
        if (!(beta_start < beta_end)) {
            throw InvalidInputError("SA schedule: beta_start must be less than beta_end");
        }
    }
};

/// Number of worker threads to use: `requested` if nonzero, otherwise the
/// hardware concurrency, in both cases capped by the PARQUBO_WORKERS
/// environment variable when it is set.
inline unsigned resolve_workers(unsigned requested = 0) {
    unsigned workers = requested;
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
    }
    if (const char* cap_str = std::getenv("PARQUBO_WORKERS")) {
        char* end = nullptr;
        long cap = std::strtol(cap_str, &end, 10);
        if (end != cap_str && cap > 0 && cap < 1 << 16) {
            workers = std::min(workers, static_cast<unsigned>(cap));
        }
    }
    return workers;
}

}  // namespace parqubo

#endif  // PARQUBO_SAMPLE_SET_HPP
