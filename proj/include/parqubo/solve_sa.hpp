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

/// @file solve_sa.hpp
/// @brief Single-bit-flip Metropolis simulated annealing.
///
/// Each read is an independent restart: a random initial assignment is
/// annealed for `sweeps` passes over the variables while the inverse
/// temperature is interpolated geometrically from beta_start to beta_end.
/// A flip of x_i changes the energy by (1 - 2 x_i) * f_i where
/// f_i = Q_ii + sum_{j != i} Q_ij x_j is the local field, so proposals are
/// O(1) and accepted flips update the neighboring fields in O(row).
///
/// Reads are seeded independently from the schedule seed, so results do
/// not depend on how reads are distributed over worker threads, and the
/// first k reads of a (seed, k+m)-read run equal a (seed, k)-read run.

#ifndef PARQUBO_SOLVE_SA_HPP
#define PARQUBO_SOLVE_SA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <thread>
#include <utility>
#include <vector>

#include "parqubo/error.hpp"
#include "parqubo/qubo.hpp"
#include "parqubo/rng.hpp"
#include "parqubo/sample_set.hpp"

namespace parqubo {
namespace detail {

/// Flattened problem view for the hot loop.
struct SaView {
    Index n = 0;
    std::vector<double> diag;
    std::vector<std::uint32_t> row_start;  // CSR over both triangle halves
    std::vector<Index> adj_index;
    std::vector<double> adj_weight;
    // Stored pairs in canonical (ascending) order, for the final energy
    // fold; evaluating through this list is bit-identical to Qubo::energy.
    std::vector<std::pair<std::pair<Index, Index>, double>> flat_terms;

    explicit SaView(const Qubo& q) : n(q.dimension()), diag(q.dimension(), 0.0) {
        std::vector<std::uint32_t> degree(n, 0);
        for (const auto& [key, value] : q.terms()) {
            flat_terms.emplace_back(key, value);
            if (key.first == key.second) {
                diag[key.first] += value;
            } else {
                ++degree[key.first];
                ++degree[key.second];
            }
        }
        row_start.assign(n + 1, 0);
        for (Index i = 0; i < n; ++i) row_start[i + 1] = row_start[i] + degree[i];
        adj_index.resize(row_start[n]);
        adj_weight.resize(row_start[n]);
        std::vector<std::uint32_t> fill(row_start.begin(), row_start.end() - 1);
        for (const auto& [key, value] : flat_terms) {
            if (key.first == key.second) continue;
            adj_index[fill[key.first]] = key.second;
            adj_weight[fill[key.first]++] = value;
            adj_index[fill[key.second]] = key.first;
            adj_weight[fill[key.second]++] = value;
        }
    }

    double energy(const std::uint8_t* x) const {
        double e = 0.0;
        for (const auto& [key, value] : flat_terms) {
            if (x[key.first] & x[key.second]) e += value;
        }
        return e;
    }
};

/// Runs one independent SA read into `x` (length n).
inline void sa_read(const SaView& view, const std::vector<double>& beta,
                    const std::vector<double>& accept_threshold, std::uint64_t stream_seed,
                    std::uint8_t* x, double* f) {
    const Index n = view.n;
    std::mt19937_64 gen(stream_seed);
    for (Index i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(gen() >> 63);

    for (Index i = 0; i < n; ++i) f[i] = view.diag[i];
    for (Index i = 0; i < n; ++i) {
        if (!x[i]) continue;
        for (std::uint32_t k = view.row_start[i]; k < view.row_start[i + 1]; ++k) {
            f[view.adj_index[k]] += view.adj_weight[k];
        }
    }

    const std::size_t sweeps = beta.size();
    for (std::size_t s = 0; s < sweeps; ++s) {
        const double b = beta[s];
        const double threshold = accept_threshold[s];
        for (Index i = 0; i < n; ++i) {
            double delta = x[i] ? -f[i] : f[i];
            if (delta > 0.0) {
                // Uphill move.  Beyond the threshold the acceptance
                // probability is below 2^-72, cheaper to reject outright
                // than to draw (keeps the frozen phase RNG-free).
                if (delta >= threshold) continue;
                if (uniform_unit(gen) >= std::exp(-b * delta)) continue;
            }
            const double sign = x[i] ? -1.0 : 1.0;
            x[i] ^= 1u;
            for (std::uint32_t k = view.row_start[i]; k < view.row_start[i + 1]; ++k) {
                f[view.adj_index[k]] += sign * view.adj_weight[k];
            }
        }
    }
}

}  // namespace detail

/// Runs `sched.num_reads` independent annealing restarts and returns the
/// aggregated sample set (distinct assignments with occurrence counts,
/// sorted by energy then assignment).  Deterministic in sched.seed;
/// `workers` = 0 selects hardware concurrency, capped by PARQUBO_WORKERS.
inline SampleSet solve_sa(const Qubo& q, const SaSchedule& sched, unsigned workers = 0) {
    sched.validate();
    const Index n = q.dimension();
    if (n == 0) {
        throw InvalidInputError("solve_sa: dimension must be at least 1");
    }

    detail::Stopwatch watch;
    Timing timing;

    detail::SaView view(q);

    // Geometric interpolation of the inverse temperature across sweeps,
    // plus the per-sweep uphill cutoff beta * delta >= 50.
    const std::uint64_t sweeps = sched.sweeps;
    std::vector<double> beta(sweeps);
    std::vector<double> accept_threshold(sweeps);
    const double ratio = sched.beta_end / sched.beta_start;
    for (std::uint64_t s = 0; s < sweeps; ++s) {
        double t = sweeps == 1 ? 0.0
                               : static_cast<double>(s) / static_cast<double>(sweeps - 1);
        beta[s] = sched.beta_start * std::pow(ratio, t);
        accept_threshold[s] = 50.0 / beta[s];
    }
    timing.t_pre_us = watch.lap();

    const std::uint64_t reads = sched.num_reads;
    std::vector<std::uint8_t> states(reads * n);
    std::vector<double> energies(reads);

    auto run_range = [&](std::uint64_t first, std::uint64_t last) {
        std::vector<double> f(n);
        for (std::uint64_t r = first; r < last; ++r) {
            std::uint8_t* x = states.data() + r * n;
            detail::sa_read(view, beta, accept_threshold,
                            sched.seed + detail::kSeedStride * (r + 1), x, f.data());
            energies[r] = view.energy(x);
        }
    };

    unsigned pool = std::min<std::uint64_t>(resolve_workers(workers), reads);
    if (pool <= 1) {
        run_range(0, reads);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (unsigned t = 0; t < pool; ++t) {
            std::uint64_t first = reads * t / pool;
            std::uint64_t last = reads * (t + 1) / pool;
            threads.emplace_back(run_range, first, last);
        }
        for (auto& th : threads) th.join();
    }
    timing.t_anneal_us = watch.lap();

    // Merge: group identical assignments, order by (energy, assignment).
    std::vector<std::uint64_t> order(reads);
    std::iota(order.begin(), order.end(), 0);
    auto read_less = [&](std::uint64_t a, std::uint64_t b) {
        if (energies[a] != energies[b]) return energies[a] < energies[b];
        const std::uint8_t* xa = states.data() + a * n;
        const std::uint8_t* xb = states.data() + b * n;
        return std::lexicographical_compare(xa, xa + n, xb, xb + n);
    };
    std::sort(order.begin(), order.end(), read_less);

    SampleSet out;
    out.backend = Backend::Sa;
    out.num_reads = reads;
    for (std::uint64_t k = 0; k < reads; ++k) {
        const std::uint64_t r = order[k];
        const std::uint8_t* x = states.data() + r * n;
        if (!out.samples.empty()) {
            Sample& last = out.samples.back();
            if (last.energy == energies[r] &&
                std::equal(last.assignment.begin(), last.assignment.end(), x)) {
                ++last.count;
                continue;
            }
        }
        out.samples.push_back(Sample{Assignment(x, x + n), energies[r], 1});
    }
    timing.t_post_us = watch.lap();
    out.timing = timing;
    return out;
}

}  // namespace parqubo

#endif  // PARQUBO_SOLVE_SA_HPP
