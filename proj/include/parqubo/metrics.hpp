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

/// @file metrics.hpp
/// @brief Evaluation metrics: solution quality, violation error, TTS, and
/// run-to-run variability.

#ifndef PARQUBO_METRICS_HPP
#define PARQUBO_METRICS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "parqubo/error.hpp"
#include "parqubo/problems.hpp"
#include "parqubo/qubo.hpp"
#include "parqubo/sample_set.hpp"

namespace parqubo {

/// Solution Quality Value: the raw quadratic form x^T Q x of the best
/// sampled assignment.  No sign convention is applied; lower is the
/// energy-ordering optimum and comparisons should pair this with the
/// violation counts.
inline double sqv(const Qubo& q, const Assignment& best) { return q.energy(best); }

/// SQV of a finished solve: the best sample's energy.
inline double sqv(const SampleSet& s) { return s.best().energy; }

/// Mean parallel violation count minus mean sequential violation count.
/// Both lists must be non-empty and report on the same problem kind.
inline double violation_error(const std::vector<ViolationReport>& parallel_runs,
                              const std::vector<ViolationReport>& sequential_runs) {
    if (parallel_runs.empty() || sequential_runs.empty()) {
        throw InvalidInputError("violation_error: run lists must be non-empty");
    }
    const ProblemKind kind = parallel_runs.front().problem_kind;
    auto mean_count = [&](const std::vector<ViolationReport>& runs) {
        double sum = 0.0;
        for (const ViolationReport& r : runs) {
            if (r.problem_kind != kind) {
                throw InvalidInputError("violation_error: mixed problem kinds");
            }
            sum += static_cast<double>(r.count);
        }
        return sum / static_cast<double>(runs.size());
    };
    return mean_count(parallel_runs) - mean_count(sequential_runs);
}

/// Population standard deviation (divisor N) of the given values.
inline double sqv_stddev(const std::vector<double>& sqvs) {
    if (sqvs.empty()) {
        throw InvalidInputError("sqv_stddev: list must be non-empty");
    }
    // Welford's recurrence; the acceptance oracle is an independent
    // two-pass computation.
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (double v : sqvs) {
        ++k;
        double d = v - mean;
        mean += d / static_cast<double>(k);
        m2 += d * (v - mean);
    }
    if (m2 <= 0.0) return 0.0;
    return std::sqrt(m2 / static_cast<double>(sqvs.size()));
}

/// Time-to-solution: pre-processing + annealing + post-processing.
inline std::int64_t tts(const Timing& t) { return t.t_pre_us + t.t_anneal_us + t.t_post_us; }

inline std::int64_t tts(const SampleSet& s) { return tts(s.timing); }

/// Metrics of a single solver invocation.
struct RunMetrics {
    double sqv = 0.0;                    // whole-composite value
    std::vector<double> per_block_sqv;   // one entry per block
    std::vector<ViolationReport> violations;
    std::int64_t tts_us = 0;
    Backend backend = Backend::Exact;
};

/// Statistics across the repeats of one experiment cell.
struct AggregateMetrics {
    std::size_t n_runs = 0;
    double mean_sqv = 0.0;
    double sqv_stddev = 0.0;
    std::vector<double> mean_violations_per_block;
    std::vector<double> violation_error_per_block;  // filled only in BOTH mode
    double mean_tts_us = 0.0;
};

/// Aggregates per-run metrics; violation_error_per_block is left empty
/// (it needs the paired sequential runs, see the benchmark runner).
inline AggregateMetrics aggregate_runs(const std::vector<RunMetrics>& runs) {
    if (runs.empty()) {
        throw InvalidInputError("aggregate_runs: need at least one run");
    }
    const std::size_t blocks = runs.front().per_block_sqv.size();
    AggregateMetrics agg;
    agg.n_runs = runs.size();
    agg.mean_violations_per_block.assign(blocks, 0.0);
    std::vector<double> sqvs;
    sqvs.reserve(runs.size());
    double tts_sum = 0.0;
    for (const RunMetrics& run : runs) {
        if (run.per_block_sqv.size() != blocks || run.violations.size() != blocks) {
            throw InvalidInputError("aggregate_runs: inconsistent block counts");
        }
        sqvs.push_back(run.sqv);
        tts_sum += static_cast<double>(run.tts_us);
        for (std::size_t b = 0; b < blocks; ++b) {
            agg.mean_violations_per_block[b] += static_cast<double>(run.violations[b].count);
        }
    }
    for (double& v : agg.mean_violations_per_block) v /= static_cast<double>(runs.size());
    agg.mean_sqv = 0.0;
    for (double v : sqvs) agg.mean_sqv += v;
    agg.mean_sqv /= static_cast<double>(sqvs.size());
    agg.sqv_stddev = parqubo::sqv_stddev(sqvs);
    agg.mean_tts_us = tts_sum / static_cast<double>(runs.size());
    return agg;
}

}  // namespace parqubo

#endif  // PARQUBO_METRICS_HPP
