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

/// @file bench.hpp
/// @brief Experiment runner: parallel vs sequential grids, sweeps, CSV.
///
/// One experiment cell solves a fixed list of generated problems `repeats`
/// times in parallel (composed into one QUBO), sequentially (one solve per
/// problem), or both.  Normalization, when configured, applies to the
/// parallel composite only — the sequential baseline always solves the raw
/// problems — and all quality metrics are evaluated against the original
/// coefficients so techniques remain comparable.
///
/// Per-repeat rows carry each block's solution quality, violation count,
/// and the solve's three-part timing; when `repeats >= 2` aggregate rows
/// (repeat column "agg") add means and the run-to-run standard deviation.
/// In BOTH mode the parallel rows also carry the violation error (parallel
/// minus sequential violations; per-repeat rows pair the same repeat,
/// aggregate rows subtract the N-run means).

#ifndef PARQUBO_BENCH_HPP
#define PARQUBO_BENCH_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parqubo/composite.hpp"
#include "parqubo/error.hpp"
#include "parqubo/metrics.hpp"
#include "parqubo/normalize.hpp"
#include "parqubo/problems.hpp"
#include "parqubo/qubo.hpp"
#include "parqubo/remote.hpp"
#include "parqubo/sample_set.hpp"
#include "parqubo/serialization.hpp"
#include "parqubo/solve_exact.hpp"
#include "parqubo/solve_sa.hpp"

namespace parqubo {

enum class RunMode { Parallel, Sequential, Both };

inline std::string to_string(RunMode mode) {
    switch (mode) {
        case RunMode::Parallel: return "parallel";
        case RunMode::Sequential: return "sequential";
        case RunMode::Both: return "both";
    }
    throw InvalidInputError("unknown run mode");
}

inline RunMode run_mode_from_string(const std::string& s) {
    if (s == "parallel") return RunMode::Parallel;
    if (s == "sequential") return RunMode::Sequential;
    if (s == "both") return RunMode::Both;
    throw InvalidInputError("unknown run mode: \"" + s + "\"");
}

enum class SweepKind { None, Normalizations, Sizes };

/// What to generate for one block of the experiment.
struct ProblemSpec {
    ProblemKind kind = ProblemKind::Generic;
    Index size = 0;  // QUBO dimension (for TFO: must be a multiple of 3)
    std::uint64_t seed = 0;
};

/// A generated problem with its kind-specific violation counter.
struct GeneratedProblem {
    ProblemKind kind = ProblemKind::Generic;
    std::string label;
    AlmInstance alm;
    TfoInstance tfo;
    Qubo generic_qubo;

    const Qubo& qubo() const {
        switch (kind) {
            case ProblemKind::Alm: return alm.qubo;
            case ProblemKind::Tfo: return tfo.qubo;
            case ProblemKind::Generic: return generic_qubo;
        }
        throw InvalidInputError("unknown problem kind");
    }

    ViolationReport violations(const Assignment& x) const {
        switch (kind) {
            case ProblemKind::Alm: return count_violations_alm(alm, x);
            case ProblemKind::Tfo: return count_violations_tfo(tfo, x);
            case ProblemKind::Generic: {
                if (x.size() != generic_qubo.dimension()) {
                    throw InvalidInputError("violations: assignment length mismatch");
                }
                ViolationReport report;  // no constraints to break
                report.problem_kind = ProblemKind::Generic;
                return report;
            }
        }
        throw InvalidInputError("unknown problem kind");
    }
};

inline GeneratedProblem generate_problem(const ProblemSpec& spec) {
    GeneratedProblem g;
    g.kind = spec.kind;
    switch (spec.kind) {
        case ProblemKind::Alm:
            if (spec.size < 1) throw ConfigError("alm problem size must be at least 1");
            g.alm = gen_alm(spec.size, spec.seed);
            g.label = g.alm.qubo.label();
            return g;
        case ProblemKind::Tfo:
            if (spec.size < 3 || spec.size % 3 != 0) {
                throw ConfigError("tfo problem size must be a positive multiple of 3 (3 routes "
                                  "per vehicle), got " + std::to_string(spec.size));
            }
            g.tfo = gen_tfo(spec.size / 3, spec.seed);
            g.label = g.tfo.qubo.label();
            return g;
        case ProblemKind::Generic:
            if (spec.size < 1) throw ConfigError("generic problem size must be at least 1");
            g.generic_qubo = gen_generic(spec.size, spec.seed);
            g.label = g.generic_qubo.label();
            return g;
    }
    throw ConfigError("unknown problem kind");
}

/// Solver selection plus its parameters.
struct BackendConfig {
    Backend backend = Backend::Sa;
    SaSchedule schedule;        // SA; also supplies reads/sweeps/seed for remote params
    std::string endpoint;       // remote only
    Json remote_params = Json::object();
};

/// Full description of one experiment (or sweep of experiments).
struct ExperimentConfig {
    std::vector<ProblemSpec> problems;
    RunMode mode = RunMode::Both;
    BackendConfig backend;
    std::optional<NormalizationSpec> normalization;  // parallel composite only
    SweepKind sweep = SweepKind::None;
    std::uint32_t repeats = 20;
    std::string output_path = "results.csv";
    std::vector<Index> composite_sizes;  // size sweep targets
    std::int64_t queue_penalty_us = 0;   // what-if per-submission queue cost
    std::string cell_id;                 // derived from size/normalization when empty

    void validate() const {
        if (repeats < 1) throw ConfigError("repeats must be at least 1");
        if (problems.empty()) throw ConfigError("at least one problem is required");
        if (mode != RunMode::Sequential && problems.size() < 2) {
            throw ConfigError("parallel mode requires at least 2 problems");
        }
        if (normalization) {
            const NormalizationKind k = normalization->kind;
            if ((k == NormalizationKind::SqrtFirstBlock ||
                 k == NormalizationKind::SqrtSecondBlock) && problems.size() < 2) {
                throw ConfigError("block-selective normalization requires at least 2 problems");
            }
        }
        if (sweep == SweepKind::Sizes && composite_sizes.empty()) {
            throw ConfigError("size sweep requires composite_sizes");
        }
        if (queue_penalty_us < 0) throw ConfigError("queue_penalty_us must be non-negative");
        if (backend.backend == Backend::Remote && backend.endpoint.empty()) {
            throw ConfigError("remote backend requires an endpoint");
        }
    }
};

/// One CSV row; std::nullopt fields emit as empty cells.
struct ExperimentRecord {
    std::string cell_id;
    RunMode mode = RunMode::Parallel;  // rows are parallel or sequential, never both
    Backend backend = Backend::Sa;
    std::string normalization = "none";
    Index composite_size = 0;
    std::int64_t repeat = -1;  // -1 marks an aggregate row ("agg" in the CSV)
    std::string block_label;
    std::optional<double> block_sqv;
    std::optional<double> block_violations;
    std::optional<double> violation_error;
    std::optional<double> t_pre_us;
    std::optional<double> t_anneal_us;
    std::optional<double> t_post_us;
    std::optional<double> tts_us;
    std::optional<double> sqv_mean;
    std::optional<double> sqv_stddev;
    std::string error;
};

inline constexpr const char* kReportHeader =
        "cell_id,mode,backend,normalization,composite_size,repeat,block_label,block_sqv,"
        "block_violations,violation_error,t_pre_us,t_anneal_us,t_post_us,tts_us,sqv_mean,"
        "sqv_stddev,error";

namespace detail {

inline SampleSet dispatch_solve(const Qubo& q, const BackendConfig& backend,
                                std::uint64_t solve_seed) {
    switch (backend.backend) {
        case Backend::Exact:
            return solve_exact(q);
        case Backend::Sa: {
            SaSchedule sched = backend.schedule;
            sched.seed = solve_seed;
            return solve_sa(q, sched);
        }
        case Backend::Remote: {
            Json params = backend.remote_params.is_null() ? Json::object()
                                                          : backend.remote_params;
            params["num_reads"] = backend.schedule.num_reads;
            params["sweeps"] = backend.schedule.sweeps;
            params["seed"] = solve_seed;
            return solve_remote(q, backend.endpoint, params);
        }
    }
    throw InvalidInputError("unknown backend");
}

/// Gives repeated labels a positional suffix so per-block rows stay
/// distinguishable when two blocks share a label.
inline std::vector<std::string> unique_labels(const std::vector<GeneratedProblem>& problems) {
    std::vector<std::string> labels;
    labels.reserve(problems.size());
    for (const GeneratedProblem& p : problems) labels.push_back(p.label);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::size_t duplicates = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (problems[j].label == problems[i].label) ++duplicates;
        }
        if (duplicates > 0) labels[i] += "-" + std::to_string(duplicates + 1);
    }
    return labels;
}

inline double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace detail

/// Runs one experiment cell and returns its records in deterministic
/// order: per-repeat rows (parallel blocks, then sequential problems),
/// followed by aggregate rows when repeats >= 2.
inline std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();

    std::vector<GeneratedProblem> problems;
    problems.reserve(cfg.problems.size());
    for (const ProblemSpec& spec : cfg.problems) problems.push_back(generate_problem(spec));
    const std::vector<std::string> labels = detail::unique_labels(problems);
    const std::size_t n_blocks = problems.size();

    Index total_dim = 0;
    for (const GeneratedProblem& p : problems) total_dim += p.qubo().dimension();

    // Capacity is checked before any work so an oversized exact request
    // fails fast instead of half-filling a report.
    if (cfg.backend.backend == Backend::Exact) {
        if (cfg.mode != RunMode::Sequential && total_dim > kExactDimensionCap) {
            throw CapacityError("exact backend cannot enumerate the " +
                                std::to_string(total_dim) + "-variable composite (cap " +
                                std::to_string(kExactDimensionCap) + ")");
        }
        for (const GeneratedProblem& p : problems) {
            if (p.qubo().dimension() > kExactDimensionCap) {
                throw CapacityError("exact backend cannot enumerate \"" + p.label + "\" (cap " +
                                    std::to_string(kExactDimensionCap) + ")");
            }
        }
    }

    const bool run_parallel = cfg.mode != RunMode::Sequential;
    const bool run_sequential = cfg.mode != RunMode::Parallel;
    const std::string norm_label = cfg.normalization ? to_string(*cfg.normalization) : "none";
    const std::string cell = cfg.cell_id.empty()
            ? "sz" + std::to_string(total_dim) + "-" + norm_label
            : cfg.cell_id;

    auto base_record = [&](RunMode mode, std::int64_t repeat) {
        ExperimentRecord r;
        r.cell_id = cell;
        r.mode = mode;
        r.backend = cfg.backend.backend;
        r.normalization = norm_label;
        r.composite_size = total_dim;
        r.repeat = repeat;
        return r;
    };

    std::vector<ExperimentRecord> records;

    // Successful-run collections for the aggregate rows.
    std::vector<std::vector<double>> par_block_sqvs(n_blocks);
    std::vector<std::vector<ViolationReport>> par_reports(n_blocks);
    std::vector<double> par_pre, par_anneal, par_post, par_tts;
    std::vector<std::vector<double>> seq_block_sqvs(n_blocks);
    std::vector<std::vector<ViolationReport>> seq_reports(n_blocks);
    std::vector<std::vector<double>> seq_pre(n_blocks), seq_anneal(n_blocks),
            seq_post(n_blocks), seq_tts(n_blocks);

    for (std::uint32_t rep = 0; rep < cfg.repeats; ++rep) {
        const std::uint64_t solve_seed = cfg.backend.schedule.seed + rep;

        // ---- Parallel path: compose, normalize, solve once, decompose.
        std::size_t parallel_rows_begin = records.size();
        bool parallel_ok = false;
        std::vector<ViolationReport> rep_par_reports;
        if (run_parallel) {
            try {
                detail::Stopwatch watch;
                std::vector<Qubo> qs;
                std::vector<ProblemKind> kinds;
                for (std::size_t p = 0; p < n_blocks; ++p) {
                    Qubo q = problems[p].qubo();
                    q.set_label(labels[p]);
                    qs.push_back(std::move(q));
                    kinds.push_back(problems[p].kind);
                }
                CompositeQubo composite = compose(qs, kinds);
                CompositeQubo target =
                        cfg.normalization ? normalize(composite, *cfg.normalization) : composite;
                std::string serialized = to_file_string(to_json(target));
                if (serialized.empty()) throw IoError("serialization produced no output");
                const std::int64_t pre_extra = watch.lap();

                SampleSet ss = detail::dispatch_solve(target.qubo(), cfg.backend, solve_seed);
                watch.lap();  // solver interval, already covered by ss.timing

                const Sample& best = ss.best();
                std::vector<Assignment> slices = decompose(composite, best.assignment);
                std::vector<double> block_sqv(n_blocks);
                for (std::size_t b = 0; b < n_blocks; ++b) {
                    // Metrics use the original coefficients even when the
                    // solver saw a normalized composite.
                    block_sqv[b] = composite.block_qubo(b).energy(slices[b]);
                    rep_par_reports.push_back(problems[b].violations(slices[b]));
                }
                const std::int64_t post_extra = watch.lap();

                Timing t = ss.timing;
                t.t_pre_us += pre_extra + cfg.queue_penalty_us;
                t.t_post_us += post_extra;

                for (std::size_t b = 0; b < n_blocks; ++b) {
                    ExperimentRecord r = base_record(RunMode::Parallel, rep);
                    r.block_label = labels[b];
                    r.block_sqv = block_sqv[b];
                    r.block_violations = static_cast<double>(rep_par_reports[b].count);
                    r.t_pre_us = static_cast<double>(t.t_pre_us);
                    r.t_anneal_us = static_cast<double>(t.t_anneal_us);
                    r.t_post_us = static_cast<double>(t.t_post_us);
                    r.tts_us = static_cast<double>(tts(t));
                    records.push_back(std::move(r));

                    par_block_sqvs[b].push_back(block_sqv[b]);
                    par_reports[b].push_back(rep_par_reports[b]);
                }
                par_pre.push_back(static_cast<double>(t.t_pre_us));
                par_anneal.push_back(static_cast<double>(t.t_anneal_us));
                par_post.push_back(static_cast<double>(t.t_post_us));
                par_tts.push_back(static_cast<double>(tts(t)));
                parallel_ok = true;
            } catch (const Error& e) {
                ExperimentRecord r = base_record(RunMode::Parallel, rep);
                r.error = e.what();
                records.push_back(std::move(r));
            }
        }

        // ---- Sequential path: one solve per problem; a failure aborts
        // the whole repeat and records a single failure row.
        bool sequential_ok = false;
        std::vector<ViolationReport> rep_seq_reports;
        if (run_sequential) {
            std::vector<ExperimentRecord> staged;
            std::vector<double> staged_sqv(n_blocks);
            std::vector<Timing> staged_timing(n_blocks);
            try {
                for (std::size_t p = 0; p < n_blocks; ++p) {
                    detail::Stopwatch watch;
                    const Qubo& q = problems[p].qubo();
                    std::string serialized = to_file_string(to_json(q));
                    if (serialized.empty()) throw IoError("serialization produced no output");
                    const std::int64_t pre_extra = watch.lap();

                    SampleSet ss = detail::dispatch_solve(q, cfg.backend, solve_seed);
                    watch.lap();

                    const Sample& best = ss.best();
                    staged_sqv[p] = q.energy(best.assignment);
                    rep_seq_reports.push_back(problems[p].violations(best.assignment));
                    const std::int64_t post_extra = watch.lap();

                    Timing t = ss.timing;
                    t.t_pre_us += pre_extra + cfg.queue_penalty_us;
                    t.t_post_us += post_extra;
                    staged_timing[p] = t;

                    ExperimentRecord r = base_record(RunMode::Sequential, rep);
                    r.block_label = labels[p];
                    r.block_sqv = staged_sqv[p];
                    r.block_violations = static_cast<double>(rep_seq_reports[p].count);
                    r.t_pre_us = static_cast<double>(t.t_pre_us);
                    r.t_anneal_us = static_cast<double>(t.t_anneal_us);
                    r.t_post_us = static_cast<double>(t.t_post_us);
                    r.tts_us = static_cast<double>(tts(t));
                    staged.push_back(std::move(r));
                }
                for (ExperimentRecord& r : staged) records.push_back(std::move(r));
                for (std::size_t p = 0; p < n_blocks; ++p) {
                    seq_block_sqvs[p].push_back(staged_sqv[p]);
                    seq_reports[p].push_back(rep_seq_reports[p]);
                    seq_pre[p].push_back(static_cast<double>(staged_timing[p].t_pre_us));
                    seq_anneal[p].push_back(static_cast<double>(staged_timing[p].t_anneal_us));
                    seq_post[p].push_back(static_cast<double>(staged_timing[p].t_post_us));
                    seq_tts[p].push_back(static_cast<double>(tts(staged_timing[p])));
                }
                sequential_ok = true;
            } catch (const Error& e) {
                ExperimentRecord r = base_record(RunMode::Sequential, rep);
                r.error = e.what();
                records.push_back(std::move(r));
            }
        }

        // ---- Per-repeat violation error (BOTH mode, paired by repeat).
        if (parallel_ok && sequential_ok) {
            for (std::size_t b = 0; b < n_blocks; ++b) {
                records[parallel_rows_begin + b].violation_error =
                        static_cast<double>(rep_par_reports[b].count) -
                        static_cast<double>(rep_seq_reports[b].count);
            }
        }
    }

    // ---- Aggregate rows (only meaningful across several repeats).
    if (cfg.repeats >= 2) {
        if (run_parallel && !par_tts.empty()) {
            for (std::size_t b = 0; b < n_blocks; ++b) {
                ExperimentRecord r = base_record(RunMode::Parallel, -1);
                r.block_label = labels[b];
                r.block_violations = detail::mean_of([&] {
                    std::vector<double> counts;
                    for (const ViolationReport& v : par_reports[b]) {
                        counts.push_back(static_cast<double>(v.count));
                    }
                    return counts;
                }());
                r.sqv_mean = detail::mean_of(par_block_sqvs[b]);
                r.sqv_stddev = sqv_stddev(par_block_sqvs[b]);
                r.t_pre_us = detail::mean_of(par_pre);
                r.t_anneal_us = detail::mean_of(par_anneal);
                r.t_post_us = detail::mean_of(par_post);
                r.tts_us = detail::mean_of(par_tts);
                if (cfg.mode == RunMode::Both && !seq_reports[b].empty()) {
                    r.violation_error = violation_error(par_reports[b], seq_reports[b]);
                }
                records.push_back(std::move(r));
            }
        }
        if (run_sequential && !seq_tts.empty()) {
            for (std::size_t p = 0; p < n_blocks; ++p) {
                if (seq_block_sqvs[p].empty()) continue;
                ExperimentRecord r = base_record(RunMode::Sequential, -1);
                r.block_label = labels[p];
                r.block_violations = detail::mean_of([&] {
                    std::vector<double> counts;
                    for (const ViolationReport& v : seq_reports[p]) {
                        counts.push_back(static_cast<double>(v.count));
                    }
                    return counts;
                }());
                r.sqv_mean = detail::mean_of(seq_block_sqvs[p]);
                r.sqv_stddev = sqv_stddev(seq_block_sqvs[p]);
                r.t_pre_us = detail::mean_of(seq_pre[p]);
                r.t_anneal_us = detail::mean_of(seq_anneal[p]);
                r.t_post_us = detail::mean_of(seq_post[p]);
                r.tts_us = detail::mean_of(seq_tts[p]);
                records.push_back(std::move(r));
            }
        }
    }
    return records;
}

/// Runs the full normalization grid: the no-normalization baseline plus
/// the 20 technique variants, 21 cells in total.
inline std::vector<ExperimentRecord> sweep_normalizations(const ExperimentConfig& cfg) {
    if (cfg.problems.size() < 2) {
        throw ConfigError("normalization sweep requires at least 2 problems");
    }
    std::vector<ExperimentRecord> records;
    ExperimentConfig sub = cfg;
    sub.sweep = SweepKind::None;
    sub.normalization.reset();
    sub.cell_id = "norm-none";
    auto baseline = run_experiment(sub);
    records.insert(records.end(), baseline.begin(), baseline.end());
    for (const NormalizationSpec& spec : all_normalizations()) {
        sub.normalization = spec;
        sub.cell_id = "norm-" + to_string(spec);
        auto cell = run_experiment(sub);
        records.insert(records.end(), cell.begin(), cell.end());
    }
    return records;
}

/// Runs one cell per configured composite size.  The first problem keeps
/// its configured size; the second absorbs the remainder (the standard
/// grid keeps a 5-asset block and grows the traffic block).
inline std::vector<ExperimentRecord> sweep_sizes(const ExperimentConfig& cfg) {
    if (cfg.composite_sizes.empty()) {
        throw ConfigError("size sweep requires composite_sizes");
    }
    if (cfg.problems.size() != 2) {
        throw ConfigError("size sweep expects exactly 2 problems");
    }
    std::vector<ExperimentRecord> records;
    ExperimentConfig sub = cfg;
    sub.sweep = SweepKind::None;
    sub.composite_sizes.clear();
    for (Index size : cfg.composite_sizes) {
        if (size <= cfg.problems[0].size) {
            throw ConfigError("composite size " + std::to_string(size) +
                              " leaves no room for the second problem");
        }
        sub.problems[1].size = size - cfg.problems[0].size;
        sub.cell_id = "size-" + std::to_string(size);
        auto cell = run_experiment(sub);
        records.insert(records.end(), cell.begin(), cell.end());
    }
    return records;
}

/// Dispatches on cfg.sweep.
inline std::vector<ExperimentRecord> run_configured(const ExperimentConfig& cfg) {
    switch (cfg.sweep) {
        case SweepKind::None: return run_experiment(cfg);
        case SweepKind::Normalizations: return sweep_normalizations(cfg);
        case SweepKind::Sizes: return sweep_sizes(cfg);
    }
    throw ConfigError("unknown sweep kind");
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_number(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace detail

/// Writes the CSV report plus a companion plot-data file at
/// `<path>.plot.json`.  Identical records produce byte-identical files;
/// the only metadata line is a leading `#` comment with the record count.
inline void emit_report(const std::vector<ExperimentRecord>& records, const std::string& path,
                        const std::string& metadata = std::string()) {
    if (records.empty()) {
        throw InvalidInputError("emit_report: no records to write");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open \"" + path + "\" for writing");
    }
    out << "# parqubo bench report; records=" << records.size();
    if (!metadata.empty()) out << "; " << metadata;
    out << "\n" << kReportHeader << "\n";
    for (const ExperimentRecord& r : records) {
        out << detail::csv_escape(r.cell_id) << ',' << to_string(r.mode) << ','
            << to_string(r.backend) << ',' << detail::csv_escape(r.normalization) << ','
            << r.composite_size << ','
            << (r.repeat < 0 ? std::string("agg") : std::to_string(r.repeat)) << ','
            << detail::csv_escape(r.block_label) << ',' << detail::csv_number(r.block_sqv) << ','
            << detail::csv_number(r.block_violations) << ','
            << detail::csv_number(r.violation_error) << ',' << detail::csv_number(r.t_pre_us)
            << ',' << detail::csv_number(r.t_anneal_us) << ',' << detail::csv_number(r.t_post_us)
            << ',' << detail::csv_number(r.tts_us) << ',' << detail::csv_number(r.sqv_mean) << ','
            << detail::csv_number(r.sqv_stddev) << ',' << detail::csv_escape(r.error) << "\n";
    }
    out.flush();
    if (!out) {
        throw IoError("failed while writing \"" + path + "\"");
    }

    // Plot-ready companion: one series point per aggregate row (falling
    // back to the data rows when a single repeat produced no aggregates).
    bool have_aggregates = false;
    for (const ExperimentRecord& r : records) {
        if (r.repeat < 0) {
            have_aggregates = true;
            break;
        }
    }
    Json series = Json::array();
    for (const ExperimentRecord& r : records) {
        if (!r.error.empty()) continue;
        if (have_aggregates && r.repeat >= 0) continue;
        Json p;
        p["cell_id"] = r.cell_id;
        p["mode"] = to_string(r.mode);
        p["block"] = r.block_label;
        p["composite_size"] = r.composite_size;
        p["normalization"] = r.normalization;
        p["sqv_mean"] = r.sqv_mean ? *r.sqv_mean : (r.block_sqv ? *r.block_sqv : 0.0);
        if (r.sqv_stddev) p["sqv_stddev"] = *r.sqv_stddev;
        if (r.block_violations) p["mean_violations"] = *r.block_violations;
        if (r.violation_error) p["violation_error"] = *r.violation_error;
        if (r.tts_us) p["mean_tts_us"] = *r.tts_us;
        series.push_back(std::move(p));
    }
    Json plot;
    plot["series"] = std::move(series);
    save_json_file(path + ".plot.json", plot);
}

/// Parses an ExperimentConfig from its JSON form (see the config
/// reference in the README); every schema problem throws ConfigError.
inline ExperimentConfig config_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        ExperimentConfig cfg;
        if (auto it = j.find("problems"); it != j.end()) {
            if (!it->is_array()) throw ConfigError("\"problems\" must be an array");
            for (const Json& jp : *it) {
                ProblemSpec spec;
                spec.kind = problem_kind_from_string(
                        detail::require_field(jp, "kind", "problem").get<std::string>());
                spec.size = detail::require_field(jp, "size", "problem").get<Index>();
                if (auto s = jp.find("seed"); s != jp.end()) {
                    spec.seed = s->get<std::uint64_t>();
                }
                cfg.problems.push_back(spec);
            }
        }
        if (auto it = j.find("mode"); it != j.end()) {
            cfg.mode = run_mode_from_string(it->get<std::string>());
        }
        if (auto it = j.find("backend"); it != j.end()) {
            const Json& jb = *it;
            if (jb.is_string()) {
                cfg.backend.backend = backend_from_string(jb.get<std::string>());
            } else if (jb.is_object()) {
                if (auto f = jb.find("name"); f != jb.end()) {
                    cfg.backend.backend = backend_from_string(f->get<std::string>());
                }
                if (auto f = jb.find("reads"); f != jb.end()) {
                    cfg.backend.schedule.num_reads = f->get<std::uint64_t>();
                }
                if (auto f = jb.find("sweeps"); f != jb.end()) {
                    cfg.backend.schedule.sweeps = f->get<std::uint64_t>();
                }
                if (auto f = jb.find("beta_start"); f != jb.end()) {
                    cfg.backend.schedule.beta_start = f->get<double>();
                }
                if (auto f = jb.find("beta_end"); f != jb.end()) {
                    cfg.backend.schedule.beta_end = f->get<double>();
                }
                if (auto f = jb.find("seed"); f != jb.end()) {
                    cfg.backend.schedule.seed = f->get<std::uint64_t>();
                }
                if (auto f = jb.find("endpoint"); f != jb.end()) {
                    cfg.backend.endpoint = f->get<std::string>();
                }
                if (auto f = jb.find("params"); f != jb.end()) {
                    cfg.backend.remote_params = *f;
                }
            } else {
                throw ConfigError("\"backend\" must be a string or object");
            }
        }
        if (auto it = j.find("normalization"); it != j.end() && !it->is_null()) {
            if (it->is_string() && it->get<std::string>() == "all") {
                cfg.sweep = SweepKind::Normalizations;
            } else {
                cfg.normalization = normalization_from_json(*it);
            }
        }
        if (auto it = j.find("sweep"); it != j.end()) {
            std::string s = it->get<std::string>();
            if (s == "none") cfg.sweep = SweepKind::None;
            else if (s == "normalizations") cfg.sweep = SweepKind::Normalizations;
            else if (s == "sizes") cfg.sweep = SweepKind::Sizes;
            else throw ConfigError("\"sweep\" must be none, normalizations, or sizes");
        }
        if (auto it = j.find("repeats"); it != j.end()) {
            cfg.repeats = it->get<std::uint32_t>();
        }
        if (auto it = j.find("output"); it != j.end()) {
            cfg.output_path = it->get<std::string>();
        }
        if (auto it = j.find("composite_sizes"); it != j.end()) {
            if (!it->is_array()) throw ConfigError("\"composite_sizes\" must be an array");
            for (const Json& js : *it) cfg.composite_sizes.push_back(js.get<Index>());
        }
        if (auto it = j.find("queue_penalty_us"); it != j.end()) {
            cfg.queue_penalty_us = it->get<std::int64_t>();
        }
        if (auto it = j.find("cell_id"); it != j.end()) {
            cfg.cell_id = it->get<std::string>();
        }
        return cfg;
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

}  // namespace parqubo

#endif  // PARQUBO_BENCH_HPP
