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

/// @file parqubo.cpp
/// @brief Command line front end: generate / compose / solve / bench.
///
/// Exit codes: 0 success, 2 configuration or usage error, 3 capacity
/// exceeded, 4 I/O or transport failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parqubo/parqubo.hpp"

namespace {

using parqubo::Json;

constexpr const char* kVersion = "parqubo 0.1.0";

/// A QUBO plus the problem kind recovered from an input file, which may
/// hold a bare QUBO, a {"qubo":..., "meta":...} wrapper, or a composite.
struct LoadedProblem {
    parqubo::Qubo qubo;
    parqubo::ProblemKind kind = parqubo::ProblemKind::Generic;
};

LoadedProblem load_problem(const std::string& path) {
    Json j = parqubo::load_json_file(path);
    if (!j.is_object()) {
        throw parqubo::InvalidInputError("\"" + path + "\": expected a JSON object");
    }
    LoadedProblem loaded;
    if (j.contains("qubo")) {  // {"qubo": ..., "meta": ...} wrapper
        loaded.qubo = parqubo::qubo_from_json(j.at("qubo"));
    } else if (j.contains("blocks")) {
        loaded.qubo = parqubo::composite_from_json(j).qubo();
    } else {
        loaded.qubo = parqubo::qubo_from_json(j);
    }
    if (j.contains("meta") && j.at("meta").is_object() && j.at("meta").contains("kind")) {
        loaded.kind =
                parqubo::problem_kind_from_string(j.at("meta").at("kind").get<std::string>());
    }
    return loaded;
}

void write_output(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << parqubo::to_file_string(j);
    } else {
        parqubo::save_json_file(out_path, j);
    }
}

struct SolveOptions {
    std::string in_path;
    std::string backend_name = "sa";
    parqubo::SaSchedule schedule;
    unsigned workers = 0;
    std::string endpoint;
    std::string params_json;
    std::string out_path;
};

int cmd_generate(const std::string& kind, parqubo::Index size, std::uint64_t seed,
                 const std::string& out_path) {
    parqubo::ProblemSpec spec;
    spec.kind = parqubo::problem_kind_from_string(kind);
    spec.size = size;
    spec.seed = seed;
    parqubo::GeneratedProblem g = parqubo::generate_problem(spec);
    Json j;
    switch (spec.kind) {
        case parqubo::ProblemKind::Alm:
            j = parqubo::to_json(g.alm);
            break;
        case parqubo::ProblemKind::Tfo:
            j = parqubo::to_json(g.tfo);
            break;
        case parqubo::ProblemKind::Generic:
            j = parqubo::to_json(g.generic_qubo);
            j["meta"]["kind"] = "generic";
            j["meta"]["seed"] = seed;
            break;
    }
    write_output(j, out_path);
    return 0;
}

int cmd_compose(const std::vector<std::string>& inputs, const std::string& normalize_flag,
                const std::string& out_path) {
    std::vector<parqubo::Qubo> qubos;
    std::vector<parqubo::ProblemKind> kinds;
    for (const std::string& path : inputs) {
        LoadedProblem loaded = load_problem(path);
        qubos.push_back(std::move(loaded.qubo));
        kinds.push_back(loaded.kind);
    }
    parqubo::CompositeQubo composite = parqubo::compose(qubos, kinds);
    if (!normalize_flag.empty()) {
        composite = parqubo::normalize(composite, parqubo::parse_normalization(normalize_flag));
    }
    write_output(parqubo::to_json(composite), out_path);
    return 0;
}

int cmd_solve(const SolveOptions& opt) {
    LoadedProblem loaded = load_problem(opt.in_path);
    parqubo::Backend backend = parqubo::backend_from_string(opt.backend_name);
    parqubo::SampleSet result;
    switch (backend) {
        case parqubo::Backend::Exact:
            result = parqubo::solve_exact(loaded.qubo);
            break;
        case parqubo::Backend::Sa:
            result = parqubo::solve_sa(loaded.qubo, opt.schedule, opt.workers);
            break;
        case parqubo::Backend::Remote: {
            if (opt.endpoint.empty()) {
                throw parqubo::ConfigError("remote backend requires --endpoint");
            }
            Json params = Json::object();
            if (!opt.params_json.empty()) {
                params = Json::parse(opt.params_json, nullptr, false);
                if (params.is_discarded() || !params.is_object()) {
                    throw parqubo::ConfigError("--params must be a JSON object");
                }
            }
            params["num_reads"] = opt.schedule.num_reads;
            params["sweeps"] = opt.schedule.sweeps;
            params["seed"] = opt.schedule.seed;
            result = parqubo::solve_remote(loaded.qubo, opt.endpoint, params);
            break;
        }
    }
    if (result.energy_mismatch_count > 0) {
        std::cerr << "warning: " << result.energy_mismatch_count
                  << " remote energies disagreed with local evaluation and were replaced\n";
    }
    write_output(parqubo::to_json(result), opt.out_path);
    return 0;
}

struct BenchOverrides {
    std::string out;
    std::string mode;
    std::string normalize_flag;
    std::int64_t repeats = -1;
};

int cmd_bench(const std::string& config_path, const BenchOverrides& over) {
    Json j = parqubo::load_json_file(config_path);
    parqubo::ExperimentConfig cfg = parqubo::config_from_json(j);
    if (!over.out.empty()) cfg.output_path = over.out;
    if (!over.mode.empty()) cfg.mode = parqubo::run_mode_from_string(over.mode);
    if (!over.normalize_flag.empty()) {
        if (over.normalize_flag == "all") {
            cfg.sweep = parqubo::SweepKind::Normalizations;
            cfg.normalization.reset();
        } else {
            cfg.normalization = parqubo::parse_normalization(over.normalize_flag);
        }
    }
    if (over.repeats >= 0) cfg.repeats = static_cast<std::uint32_t>(over.repeats);
    std::vector<parqubo::ExperimentRecord> records = parqubo::run_configured(cfg);
    parqubo::emit_report(records, cfg.output_path, "config=" + config_path);
    std::size_t failures = 0;
    for (const parqubo::ExperimentRecord& r : records) {
        if (!r.error.empty()) ++failures;
    }
    std::cout << "wrote " << records.size() << " records to " << cfg.output_path << " ("
              << failures << " failure rows); plot data at " << cfg.output_path
              << ".plot.json\n";
    return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parqubo: parallel QUBO solving workbench"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // generate
    std::string gen_kind;
    parqubo::Index gen_size = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    CLI::App* generate = app.add_subcommand("generate", "Generate a problem instance as JSON");
    generate->add_option("--problem,--kind", gen_kind, "Problem family: alm, tfo, or generic")
            ->required()
            ->check(CLI::IsMember({"alm", "tfo", "generic"}));
    generate->add_option("--size", gen_size, "QUBO dimension (tfo: multiple of 3)")->required();
    generate->add_option("--seed", gen_seed, "Generator seed");
    generate->add_option("--out", gen_out, "Output file (default: stdout)");

    // compose
    std::vector<std::string> compose_inputs;
    std::string compose_normalize;
    std::string compose_out;
    CLI::App* compose = app.add_subcommand("compose", "Stack problem files into one composite");
    compose->add_option("--in", compose_inputs, "Input problem JSON files (repeatable)")
            ->required()
            ->expected(-1);
    compose->add_option("--normalize", compose_normalize,
                        "Normalization <kind>[:<op><k>], e.g. sqrt or scalar:x10");
    compose->add_option("--out", compose_out, "Output file (default: stdout)");

    // solve
    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "Solve a problem or composite file");
    solve->add_option("--in", solve_opt.in_path, "Input problem/composite JSON file")->required();
    solve->add_option("--backend", solve_opt.backend_name, "exact, sa, or remote")
            ->check(CLI::IsMember({"exact", "sa", "remote"}));
    solve->add_option("--reads", solve_opt.schedule.num_reads, "Annealing restarts");
    solve->add_option("--sweeps", solve_opt.schedule.sweeps, "Sweeps per read");
    solve->add_option("--beta-start", solve_opt.schedule.beta_start, "Initial inverse temperature");
    solve->add_option("--beta-end", solve_opt.schedule.beta_end, "Final inverse temperature");
    solve->add_option("--seed", solve_opt.schedule.seed, "Annealer seed");
    solve->add_option("--workers", solve_opt.workers, "Worker threads (0 = auto)");
    solve->add_option("--endpoint", solve_opt.endpoint, "Remote solver base URL");
    solve->add_option("--params", solve_opt.params_json, "Extra remote params (JSON object)");
    solve->add_option("--out", solve_opt.out_path, "Output file (default: stdout)");

    // bench
    std::string bench_config;
    BenchOverrides bench_over;
    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark grid from a config file");
    bench->add_option("--config", bench_config, "Experiment config JSON file")->required();
    bench->add_option("--out", bench_over.out, "Override the config's output path");
    bench->add_option("--mode", bench_over.mode, "Override mode: parallel, sequential, both")
            ->check(CLI::IsMember({"parallel", "sequential", "both"}));
    bench->add_option("--normalize", bench_over.normalize_flag,
                      "Override normalization (<kind>[:<op><k>] or \"all\")");
    bench->add_option("--repeats", bench_over.repeats, "Override the repeat count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen_kind, gen_size, gen_seed, gen_out);
        if (compose->parsed()) return cmd_compose(compose_inputs, compose_normalize, compose_out);
        if (solve->parsed()) return cmd_solve(solve_opt);
        if (bench->parsed()) return cmd_bench(bench_config, bench_over);
        std::cerr << "error: no subcommand given\n";
        return 2;
    } catch (const parqubo::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parqubo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const parqubo::TransportError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const parqubo::ProtocolError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const parqubo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
