#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqserv/instance.hpp"

namespace seqserv {

struct GeneratorConfig {
    std::size_t machines = 1;
    std::size_t tasks = 1;
    std::size_t servers = 1;
    Time p_min = 1;
    Time p_max = 50;
    Time o_min = 1;
    Time o_max = 50;
    std::uint64_t seed = 0;
};

// Draws all processing times by task index, then the off-diagonal setups row
// by row, from one mt19937_64 seeded with config.seed. Diagonal entries are 0.
// Throws InputError on empty dimensions or inverted ranges.
Instance generate_instance(const GeneratorConfig& config);

// The 30-instance benchmark grid: m in {12,14,16,18,20}, t in {15m,20m,25m},
// r in {2,5}, p and o uniform on [1,50]. Both server counts of one (m, t)
// share the processing and setup data.
struct GridEntry {
    std::size_t id;  // 1-based
    GeneratorConfig config;
};
std::vector<GridEntry> benchmark_grid(std::uint64_t base_seed);

// Machine of each task, 0-based.
using DedicationMap = std::vector<MachineId>;

// Forbids co-location by setting o_ij = INF wherever the dedications of i and
// j differ. Throws InputError when the map does not cover every task exactly
// or names a machine outside the instance.
Instance transform_dedicated(const Instance& instance, const DedicationMap& dedication);

// Sequence-independent setups: task j needs setup_per_task[j] after any
// predecessor. Appends m virtual tasks (indices t..t+m-1) with p = 0 whose
// incoming setups are INF, so each can only open a machine and the first real
// task on every machine pays its setup. The setup matrix of `instance` is
// ignored. Throws InputError on a length mismatch.
Instance transform_sequence_independent(const std::vector<SetupTime>& setup_per_task,
                                        const Instance& instance);

} // namespace seqserv
