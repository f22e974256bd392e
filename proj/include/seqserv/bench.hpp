#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "seqserv/exact.hpp"
#include "seqserv/heuristics.hpp"
#include "seqserv/instance.hpp"

namespace seqserv {

enum class BenchAlgorithmKind { Losos, Rosol, Warm };

struct BenchAlgorithm {
    std::string label;
    BenchAlgorithmKind kind = BenchAlgorithmKind::Losos;
    HeuristicOptions options;
    std::chrono::milliseconds time_limit{0};  // Warm only
};

// LOSOS, ROSOL, LOSOS_SE, LOSOS_SEIC and the warm-started solve.
std::vector<BenchAlgorithm> default_bench_algorithms(std::uint64_t seed,
                                                     std::chrono::milliseconds warm_limit);

struct BenchCell {
    std::optional<Time> objective;
    std::optional<double> rd;  // to the LB ceiling
    double runtime_seconds = 0.0;
    std::string error;
};

struct BenchRow {
    std::string instance;
    std::size_t machines = 0;
    std::size_t tasks = 0;
    std::size_t servers = 0;
    Time lower_bound = 0;
    std::vector<BenchCell> cells;
};

struct BenchReport {
    std::vector<std::string> labels;
    std::vector<BenchRow> rows;

    // Sum of objectives over rows where the algorithm succeeded, and the LB
    // sum over the same rows.
    Time objective_sum(std::size_t algorithm) const;
    Time lower_bound_sum(std::size_t algorithm) const;
    // (sum objective - sum LB) / sum LB; nullopt when no row succeeded.
    std::optional<double> aggregate_rd(std::size_t algorithm) const;

    std::string text() const;
    std::string csv() const;  // `;` separated
};

struct BenchOptions {
    // Solution files <instance>__<label>.sched go here when set.
    std::optional<std::string> solution_dir;
    // 0: SEQSERV_WORKERS if set, else the hardware concurrency.
    std::size_t workers = 0;
};

std::size_t bench_workers(std::size_t requested, std::size_t jobs);

// Runs every algorithm on every instance. Failures are kept in their cell.
// Rows follow the input order whatever the worker count.
BenchReport run_bench(const std::vector<Instance>& instances,
                      const std::vector<BenchAlgorithm>& algorithms,
                      const BenchOptions& options = {});

// File-name-safe form of a label.
std::string label_slug(const std::string& label);

} // namespace seqserv
