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

/// Tests for the experiment runner, the sweeps, the CSV report writer,
/// and the JSON configuration loader.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "parqubo/bench.hpp"

using namespace parqubo;

namespace {

namespace fs = std::filesystem;

/// Small scratch directory, wiped per test case.
struct ScratchDir {
    fs::path path;
    ScratchDir() {
        path = fs::temp_directory_path() / "parqubo_test_bench";
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~ScratchDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

ExperimentConfig exact_both_config() {
    ExperimentConfig cfg;
    cfg.problems = {ProblemSpec{ProblemKind::Alm, 5, 0}, ProblemSpec{ProblemKind::Tfo, 9, 0}};
    cfg.mode = RunMode::Both;
    cfg.backend.backend = Backend::Exact;
    cfg.repeats = 3;
    return cfg;
}

ExperimentConfig light_sa_config() {
    ExperimentConfig cfg;
    cfg.problems = {ProblemSpec{ProblemKind::Alm, 5, 0}, ProblemSpec{ProblemKind::Tfo, 9, 0}};
    cfg.mode = RunMode::Both;
    cfg.backend.backend = Backend::Sa;
    cfg.backend.schedule.num_reads = 2;
    cfg.backend.schedule.sweeps = 2;
    cfg.repeats = 1;
    return cfg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

TEST_CASE("generate_problem produces the right shapes and labels") {
    GeneratedProblem alm = generate_problem({ProblemKind::Alm, 5, 3});
    CHECK(alm.label == "alm5");
    CHECK(alm.qubo().dimension() == 5);
    CHECK(alm.violations(Assignment(5, 1)).count == 0);

    GeneratedProblem tfo = generate_problem({ProblemKind::Tfo, 9, 3});
    CHECK(tfo.label == "tfo9");
    CHECK(tfo.qubo().dimension() == 9);
    CHECK(tfo.violations({1, 0, 0, 0, 1, 0, 0, 0, 1}).count == 0);

    GeneratedProblem gen = generate_problem({ProblemKind::Generic, 4, 3});
    CHECK(gen.label == "generic4");
    CHECK(gen.violations(Assignment(4, 0)).count == 0);
    CHECK(gen.violations(Assignment(4, 0)).problem_kind == ProblemKind::Generic);
    CHECK_THROWS_AS(gen.violations(Assignment(3, 0)), InvalidInputError);

    CHECK_THROWS_AS(generate_problem({ProblemKind::Tfo, 7, 0}), ConfigError);
    CHECK_THROWS_AS(generate_problem({ProblemKind::Tfo, 0, 0}), ConfigError);
    CHECK_THROWS_AS(generate_problem({ProblemKind::Alm, 0, 0}), ConfigError);
    CHECK_THROWS_AS(generate_problem({ProblemKind::Generic, 0, 0}), ConfigError);
}

TEST_CASE("config validation rejects inconsistent experiments") {
    ExperimentConfig cfg = exact_both_config();
    cfg.repeats = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = exact_both_config();
    cfg.problems.clear();
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = exact_both_config();
    cfg.problems.resize(1);
    CHECK_THROWS_AS(cfg.validate(), ConfigError);  // parallel needs two problems

    cfg = exact_both_config();
    cfg.problems.resize(1);
    cfg.mode = RunMode::Sequential;
    CHECK_NOTHROW(cfg.validate());
    cfg.normalization = NormalizationSpec::of(NormalizationKind::SqrtFirstBlock);
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = exact_both_config();
    cfg.sweep = SweepKind::Sizes;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);  // no composite_sizes

    cfg = exact_both_config();
    cfg.queue_penalty_us = -1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = exact_both_config();
    cfg.backend.backend = Backend::Remote;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);  // no endpoint
}

TEST_CASE("a BOTH-mode exact cell produces paired rows and aggregates") {
    std::vector<ExperimentRecord> records = run_experiment(exact_both_config());

    // 3 repeats x (2 parallel + 2 sequential rows) + 4 aggregate rows.
    REQUIRE(records.size() == 16);

    std::map<std::string, std::vector<const ExperimentRecord*>> by_key;
    for (const ExperimentRecord& r : records) {
        CHECK(r.cell_id == "sz14-none");
        CHECK(r.backend == Backend::Exact);
        CHECK(r.normalization == "none");
        CHECK(r.composite_size == 14);
        CHECK(r.error.empty());
        by_key[to_string(r.mode) + "/" + r.block_label].push_back(&r);
    }
    REQUIRE(by_key["parallel/alm5"].size() == 4);  // 3 data + 1 aggregate
    REQUIRE(by_key["parallel/tfo9"].size() == 4);
    REQUIRE(by_key["sequential/alm5"].size() == 4);
    REQUIRE(by_key["sequential/tfo9"].size() == 4);

    for (const ExperimentRecord& r : records) {
        if (r.repeat < 0) {
            // Aggregate rows carry statistics, not per-run values.
            REQUIRE(r.sqv_mean.has_value());
            REQUIRE(r.sqv_stddev.has_value());
            CHECK(r.sqv_stddev.value() == 0.0);  // exact solver: no spread
            CHECK_FALSE(r.block_sqv.has_value());
            if (r.mode == RunMode::Parallel) {
                REQUIRE(r.violation_error.has_value());
                CHECK(r.violation_error.value() == 0.0);
            }
        } else {
            REQUIRE(r.block_sqv.has_value());
            REQUIRE(r.block_violations.has_value());
            CHECK(r.block_violations.value() == 0.0);  // optima are feasible
            REQUIRE(r.t_pre_us.has_value());
            REQUIRE(r.t_anneal_us.has_value());
            REQUIRE(r.t_post_us.has_value());
            REQUIRE(r.tts_us.has_value());
            CHECK(r.tts_us.value() ==
                  r.t_pre_us.value() + r.t_anneal_us.value() + r.t_post_us.value());
            if (r.mode == RunMode::Parallel) {
                REQUIRE(r.violation_error.has_value());
                CHECK(r.violation_error.value() == 0.0);
            } else {
                CHECK_FALSE(r.violation_error.has_value());
            }
        }
    }

    // The exact backend makes parallel and sequential block values equal.
    for (int rep = 0; rep < 3; ++rep) {
        for (const std::string& block : {std::string("alm5"), std::string("tfo9")}) {
            const ExperimentRecord* par = by_key["parallel/" + block][rep];
            const ExperimentRecord* seq = by_key["sequential/" + block][rep];
            CHECK(par->repeat == rep);
            CHECK(seq->repeat == rep);
            CHECK(par->block_sqv.value() == seq->block_sqv.value());
        }
    }

    // Aggregate means match the data rows they summarize.
    for (const auto& [key, rows] : by_key) {
        const ExperimentRecord* agg = rows.back();
        REQUIRE(agg->repeat == -1);
        double mean = 0.0;
        for (int rep = 0; rep < 3; ++rep) mean += rows[rep]->block_sqv.value();
        mean /= 3.0;
        CHECK_THAT(agg->sqv_mean.value(), Catch::Matchers::WithinRel(mean, 1e-12));
    }
}

TEST_CASE("experiment records are deterministic apart from timing") {
    auto a = run_experiment(exact_both_config());
    auto b = run_experiment(exact_both_config());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].cell_id == b[i].cell_id);
        CHECK(a[i].mode == b[i].mode);
        CHECK(a[i].repeat == b[i].repeat);
        CHECK(a[i].block_label == b[i].block_label);
        CHECK(a[i].block_sqv == b[i].block_sqv);
        CHECK(a[i].block_violations == b[i].block_violations);
        CHECK(a[i].violation_error == b[i].violation_error);
        CHECK(a[i].sqv_mean == b[i].sqv_mean);
        CHECK(a[i].sqv_stddev == b[i].sqv_stddev);
        CHECK(a[i].error == b[i].error);
    }
}

TEST_CASE("parallel-only mode never reports a violation error") {
    ExperimentConfig cfg = exact_both_config();
    cfg.mode = RunMode::Parallel;
    cfg.repeats = 2;
    auto records = run_experiment(cfg);
    REQUIRE(records.size() == 6);  // 2 repeats x 2 blocks + 2 aggregates
    for (const ExperimentRecord& r : records) {
        CHECK(r.mode == RunMode::Parallel);
        CHECK_FALSE(r.violation_error.has_value());
    }
}

TEST_CASE("a single sequential repeat produces exactly one record") {
    ExperimentConfig cfg;
    cfg.problems = {ProblemSpec{ProblemKind::Generic, 6, 2}};
    cfg.mode = RunMode::Sequential;
    cfg.backend.backend = Backend::Exact;
    cfg.repeats = 1;
    auto records = run_experiment(cfg);
    REQUIRE(records.size() == 1);
    CHECK(records[0].mode == RunMode::Sequential);
    CHECK(records[0].repeat == 0);
    CHECK(records[0].block_label == "generic6");
    CHECK(records[0].block_sqv.has_value());
    CHECK_FALSE(records[0].sqv_mean.has_value());
}

TEST_CASE("duplicate problem labels get positional suffixes") {
    ExperimentConfig cfg;
    cfg.problems = {ProblemSpec{ProblemKind::Generic, 4, 1},
                    ProblemSpec{ProblemKind::Generic, 4, 2},
                    ProblemSpec{ProblemKind::Generic, 4, 3}};
    cfg.mode = RunMode::Parallel;
    cfg.backend.backend = Backend::Exact;
    cfg.repeats = 1;
    auto records = run_experiment(cfg);
    REQUIRE(records.size() == 3);
    CHECK(records[0].block_label == "generic4");
    CHECK(records[1].block_label == "generic4-2");
    CHECK(records[2].block_label == "generic4-3");
}

TEST_CASE("oversized exact requests fail before any solving") {
    ExperimentConfig cfg = exact_both_config();
    cfg.problems[1].size = 30;  // 5 + 30 = 35 > enumeration cap
    CHECK_THROWS_AS(run_experiment(cfg), CapacityError);

    ExperimentConfig seq;
    seq.problems = {ProblemSpec{ProblemKind::Generic, 31, 0}};
    seq.mode = RunMode::Sequential;
    seq.backend.backend = Backend::Exact;
    CHECK_THROWS_AS(run_experiment(seq), CapacityError);
}

TEST_CASE("solver failures become failure rows instead of aborting") {
    ExperimentConfig cfg = exact_both_config();
    cfg.backend.backend = Backend::Remote;
    cfg.backend.endpoint = "http://127.0.0.1:9";  // discard port: nothing listens
    cfg.repeats = 1;
    auto records = run_experiment(cfg);
    REQUIRE(records.size() == 2);  // one parallel failure + one sequential failure
    for (const ExperimentRecord& r : records) {
        CHECK_FALSE(r.error.empty());
        CHECK(r.block_label.empty());
        CHECK_FALSE(r.block_sqv.has_value());
        CHECK_FALSE(r.tts_us.has_value());
    }
    CHECK(records[0].mode == RunMode::Parallel);
    CHECK(records[1].mode == RunMode::Sequential);
}

TEST_CASE("scalar normalization changes the solver input, not the metrics") {
    ExperimentConfig base = exact_both_config();
    base.repeats = 1;
    auto baseline = run_experiment(base);

    ExperimentConfig scaled = base;
    scaled.normalization = NormalizationSpec::scalar(10.0, ScalarOp::Multiply);
    auto records = run_experiment(scaled);

    REQUIRE(baseline.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].normalization == "scalar:x10");
        CHECK(records[i].cell_id == "sz14-scalar:x10");
        // Same argmin, metrics on original coefficients: identical values.
        CHECK(records[i].block_sqv.value() == baseline[i].block_sqv.value());
        CHECK(records[i].block_violations.value() == baseline[i].block_violations.value());
    }
}

TEST_CASE("the normalization sweep runs the baseline plus twenty variants") {
    ExperimentConfig cfg = light_sa_config();
    cfg.sweep = SweepKind::Normalizations;
    auto records = run_configured(cfg);

    // 21 cells x 1 repeat x (2 parallel + 2 sequential rows).
    REQUIRE(records.size() == 21 * 4);

    std::vector<std::string> cell_order;
    for (const ExperimentRecord& r : records) {
        if (cell_order.empty() || cell_order.back() != r.cell_id) {
            cell_order.push_back(r.cell_id);
        }
    }
    std::vector<std::string> expected{"norm-none"};
    for (const NormalizationSpec& spec : all_normalizations()) {
        expected.push_back("norm-" + to_string(spec));
    }
    CHECK(cell_order == expected);

    for (const ExperimentRecord& r : records) {
        CHECK(r.error.empty());
        if (r.cell_id == "norm-none") {
            CHECK(r.normalization == "none");
        } else {
            CHECK("norm-" + r.normalization == r.cell_id);
        }
        // Sequential rows are untouched by normalization by construction;
        // parallel rows are measured against the original composite.  Either
        // way the reported block energy must be a real (unnormalized) energy,
        // which for these instances is never positive at the solver's best.
        CHECK(r.block_sqv.value() <= 0.0);
    }
}

TEST_CASE("the size sweep grows the second problem to hit each target") {
    ExperimentConfig cfg = light_sa_config();
    cfg.sweep = SweepKind::Sizes;
    cfg.composite_sizes = {14, 26};
    auto records = run_configured(cfg);
    REQUIRE(records.size() == 2 * 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(records[i].cell_id == "size-14");
        CHECK(records[i].composite_size == 14);
    }
    for (std::size_t i = 4; i < 8; ++i) {
        CHECK(records[i].cell_id == "size-26");
        CHECK(records[i].composite_size == 26);
    }
    // Block labels reflect the grown second problem.
    CHECK(records[1].block_label == "tfo9");
    CHECK(records[5].block_label == "tfo21");
}

TEST_CASE("size sweep error paths") {
    ExperimentConfig cfg = light_sa_config();
    cfg.sweep = SweepKind::Sizes;

    cfg.composite_sizes = {};
    CHECK_THROWS_AS(run_configured(cfg), ConfigError);

    cfg.composite_sizes = {5};
    CHECK_THROWS_AS(run_configured(cfg), ConfigError);  // no room for problem 2

    cfg.composite_sizes = {15};  // second block would need 10 vars: not 3k
    CHECK_THROWS_AS(run_configured(cfg), ConfigError);

    cfg.composite_sizes = {14};
    cfg.problems.push_back(ProblemSpec{ProblemKind::Generic, 2, 0});
    CHECK_THROWS_AS(run_configured(cfg), ConfigError);  // needs exactly 2 problems
}

TEST_CASE("queue penalties are charged per submission") {
    ExperimentConfig cfg = exact_both_config();
    cfg.repeats = 2;
    cfg.queue_penalty_us = 5000;
    auto records = run_experiment(cfg);
    for (const ExperimentRecord& r : records) {
        REQUIRE(r.t_pre_us.has_value());
        CHECK(r.t_pre_us.value() >= 5000.0);
    }
}

TEST_CASE("emit_report writes the documented CSV shape") {
    ScratchDir dir;
    auto records = run_experiment(exact_both_config());
    const std::string path = dir.file("report.csv");
    emit_report(records, path, "config=test");

    std::istringstream in(read_file(path));
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "# parqubo bench report; records=16; config=test");
    REQUIRE(std::getline(in, line));
    CHECK(line == kReportHeader);

    std::size_t data_rows = 0;
    std::size_t agg_rows = 0;
    while (std::getline(in, line)) {
        auto fields = split_csv_line(line);
        REQUIRE(fields.size() == 17);
        CHECK(fields[0] == "sz14-none");
        CHECK((fields[1] == "parallel" || fields[1] == "sequential"));
        CHECK(fields[2] == "exact");
        CHECK(fields[3] == "none");
        CHECK(fields[4] == "14");
        if (fields[5] == "agg") {
            ++agg_rows;
            CHECK(fields[7].empty());        // no per-run block_sqv
            CHECK_FALSE(fields[14].empty()); // sqv_mean
            CHECK_FALSE(fields[15].empty()); // sqv_stddev
        } else {
            ++data_rows;
            CHECK_FALSE(fields[7].empty());
            CHECK(fields[14].empty());
        }
        CHECK(fields[16].empty());  // no errors
    }
    CHECK(data_rows == 12);
    CHECK(agg_rows == 4);
}

TEST_CASE("emit_report escapes embedded delimiters") {
    ScratchDir dir;
    ExperimentRecord r;
    r.cell_id = "cell";
    r.mode = RunMode::Sequential;
    r.backend = Backend::Remote;
    r.composite_size = 3;
    r.repeat = 0;
    r.error = "boom, \"quoted\"";
    const std::string path = dir.file("escape.csv");
    emit_report({r}, path);
    std::string text = read_file(path);
    CHECK(text.find("\"boom, \"\"quoted\"\"\"") != std::string::npos);
}

TEST_CASE("emit_report rejects empty input and unwritable paths") {
    CHECK_THROWS_AS(emit_report({}, "unused.csv"), InvalidInputError);

    ExperimentRecord r;
    r.cell_id = "x";
    CHECK_THROWS_AS(emit_report({r}, "/nonexistent-dir/report.csv"), IoError);
}

TEST_CASE("emit_report is byte-stable and its plot companion parses") {
    ScratchDir dir;
    auto records = run_experiment(exact_both_config());
    const std::string p1 = dir.file("a.csv");
    const std::string p2 = dir.file("b.csv");
    emit_report(records, p1);
    emit_report(records, p2);
    CHECK(read_file(p1) == read_file(p2));
    CHECK(read_file(p1 + ".plot.json") == read_file(p2 + ".plot.json"));

    Json plot = load_json_file(p1 + ".plot.json");
    REQUIRE(plot.contains("series"));
    REQUIRE(plot["series"].is_array());
    // With aggregates present, only the 4 aggregate rows are plotted.
    CHECK(plot["series"].size() == 4);
    for (const Json& point : plot["series"]) {
        CHECK(point.contains("cell_id"));
        CHECK(point.contains("sqv_mean"));
        CHECK(point.contains("mean_tts_us"));
    }
}

TEST_CASE("aggregate rows can be reproduced from the CSV data rows") {
    ScratchDir dir;
    ExperimentConfig cfg = light_sa_config();
    cfg.backend.schedule.num_reads = 5;
    cfg.backend.schedule.sweeps = 20;
    cfg.repeats = 4;
    auto records = run_experiment(cfg);
    const std::string path = dir.file("agg.csv");
    emit_report(records, path);

    std::istringstream in(read_file(path));
    std::string line;
    std::getline(in, line);  // comment
    std::getline(in, line);  // header

    std::map<std::string, std::vector<double>> data_sqv;
    std::map<std::string, std::pair<double, double>> agg_stats;
    while (std::getline(in, line)) {
        auto fields = split_csv_line(line);
        REQUIRE(fields.size() == 17);
        const std::string key = fields[1] + "/" + fields[6];
        if (fields[5] == "agg") {
            agg_stats[key] = {std::stod(fields[14]), std::stod(fields[15])};
        } else {
            data_sqv[key].push_back(std::stod(fields[7]));
        }
    }
    REQUIRE(agg_stats.size() == 4);
    for (const auto& [key, stats] : agg_stats) {
        const auto& values = data_sqv.at(key);
        REQUIRE(values.size() == 4);
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        double stddev = std::sqrt(var / static_cast<double>(values.size()));
        CHECK_THAT(stats.first, Catch::Matchers::WithinRel(mean, 1e-9) ||
                                        Catch::Matchers::WithinAbs(mean, 1e-9));
        CHECK_THAT(stats.second, Catch::Matchers::WithinRel(stddev, 1e-6) ||
                                         Catch::Matchers::WithinAbs(stddev, 1e-9));
    }
}

TEST_CASE("config_from_json maps every field") {
    Json j = Json::parse(R"({
        "problems": [{"kind": "alm", "size": 5, "seed": 3},
                     {"kind": "tfo", "size": 9}],
        "mode": "parallel",
        "backend": {"name": "sa", "reads": 7, "sweeps": 11,
                    "beta_start": 0.5, "beta_end": 6.0, "seed": 13,
                    "endpoint": "http://127.0.0.1:1", "params": {"a": 1}},
        "normalization": "sqrt",
        "sweep": "none",
        "repeats": 4,
        "output": "out.csv",
        "composite_sizes": [14, 26],
        "queue_penalty_us": 250,
        "cell_id": "custom"
    })");
    ExperimentConfig cfg = config_from_json(j);
    REQUIRE(cfg.problems.size() == 2);
    CHECK(cfg.problems[0].kind == ProblemKind::Alm);
    CHECK(cfg.problems[0].size == 5);
    CHECK(cfg.problems[0].seed == 3);
    CHECK(cfg.problems[1].kind == ProblemKind::Tfo);
    CHECK(cfg.problems[1].seed == 0);  // defaulted
    CHECK(cfg.mode == RunMode::Parallel);
    CHECK(cfg.backend.backend == Backend::Sa);
    CHECK(cfg.backend.schedule.num_reads == 7);
    CHECK(cfg.backend.schedule.sweeps == 11);
    CHECK(cfg.backend.schedule.beta_start == 0.5);
    CHECK(cfg.backend.schedule.beta_end == 6.0);
    CHECK(cfg.backend.schedule.seed == 13);
    CHECK(cfg.backend.endpoint == "http://127.0.0.1:1");
    CHECK(cfg.backend.remote_params["a"] == 1);
    REQUIRE(cfg.normalization.has_value());
    CHECK(cfg.normalization->kind == NormalizationKind::Sqrt);
    CHECK(cfg.sweep == SweepKind::None);
    CHECK(cfg.repeats == 4);
    CHECK(cfg.output_path == "out.csv");
    CHECK(cfg.composite_sizes == std::vector<Index>{14, 26});
    CHECK(cfg.queue_penalty_us == 250);
    CHECK(cfg.cell_id == "custom");
}

TEST_CASE("config defaults match the shipped schedule") {
    ExperimentConfig cfg = config_from_json(Json::parse(
            R"({"problems": [{"kind": "alm", "size": 5}, {"kind": "tfo", "size": 9}]})"));
    CHECK(cfg.mode == RunMode::Both);
    CHECK(cfg.backend.backend == Backend::Sa);
    CHECK(cfg.backend.schedule.num_reads == 20000);
    CHECK(cfg.backend.schedule.sweeps == 1000);
    CHECK(cfg.backend.schedule.beta_start == 0.01);
    CHECK(cfg.backend.schedule.beta_end == 10.0);
    CHECK(cfg.repeats == 20);
    CHECK(cfg.output_path == "results.csv");
    CHECK_FALSE(cfg.normalization.has_value());
    CHECK(cfg.sweep == SweepKind::None);
    CHECK(cfg.queue_penalty_us == 0);
}

TEST_CASE("config special forms and error cases") {
    // "all" switches on the normalization sweep.
    ExperimentConfig all = config_from_json(Json::parse(
            R"({"problems": [{"kind": "alm", "size": 5}, {"kind": "tfo", "size": 9}],
                "normalization": "all"})"));
    CHECK(all.sweep == SweepKind::Normalizations);
    CHECK_FALSE(all.normalization.has_value());

    // Scalar normalization as a structured object.
    ExperimentConfig scalar = config_from_json(Json::parse(
            R"({"problems": [{"kind": "alm", "size": 5}, {"kind": "tfo", "size": 9}],
                "normalization": {"kind": "scalar", "scalar_value": 20, "scalar_op": "divide"}})"));
    REQUIRE(scalar.normalization.has_value());
    CHECK(scalar.normalization->kind == NormalizationKind::Scalar);
    CHECK(scalar.normalization->scalar_value == 20.0);
    CHECK(scalar.normalization->scalar_op == ScalarOp::Divide);

    // A null normalization is the explicit baseline.
    ExperimentConfig none = config_from_json(Json::parse(
            R"({"problems": [{"kind": "alm", "size": 5}, {"kind": "tfo", "size": 9}],
                "normalization": null})"));
    CHECK_FALSE(none.normalization.has_value());

    CHECK_THROWS_AS(config_from_json(Json::parse("[]")), ConfigError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"problems": 5})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"problems": [{"size": 5}]})")),
                    ConfigError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"problems": [{"kind": "alm"}]})")),
                    ConfigError);
    CHECK_THROWS_AS(
            config_from_json(Json::parse(
                    R"({"problems": [{"kind": "nope", "size": 5}]})")),
            ConfigError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"backend": 42})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"sweep": "diagonal"})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"mode": "sideways"})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"repeats": "many"})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"normalization": "quantum"})")),
                    ConfigError);
}
