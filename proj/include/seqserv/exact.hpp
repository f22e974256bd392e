#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqserv/heuristics.hpp"
#include "seqserv/instance.hpp"
#include "seqserv/lower_bound.hpp"
#include "seqserv/schedule.hpp"

namespace seqserv {

using Sequences = std::vector<std::vector<TaskId>>;
using Clock = std::chrono::steady_clock;

struct ExactLimits {
    std::size_t max_tasks = 8;
    std::size_t max_machines = 3;
    std::chrono::milliseconds time_limit{60'000};
    std::optional<Schedule> warm_start;
    // Lifts the task and machine caps (up to 64 tasks).
    bool override_caps = false;
};

struct ExactResult {
    // Empty only when no finite-makespan schedule exists or was found in time.
    std::optional<Schedule> schedule;
    bool proven_optimal = false;
    std::uint64_t nodes = 0;
};

// Branch-and-bound over task-to-machine assignments and machine orders; every
// complete set of sequences is timed exactly. The incumbent starts from the
// warm start when one is given, and the result is never worse than it.
// Throws InputError for instances over the caps.
ExactResult exact_solve(const Instance& instance, const ExactLimits& limits);

struct TimingResult {
    Time makespan = 0;
    Schedule schedule;
};

inline constexpr std::size_t kMaxTimedSetups = 12;

// Minimum makespan for fixed machine sequences under the server limit.
// Throws InputError for more than kMaxTimedSetups positive setups or for
// sequences that do not partition the tasks; returns nullopt when a sequence
// uses an INF setup.
std::optional<TimingResult> exact_timing(const Instance& instance, const Sequences& sequences);

// Same without the setup cap; returns nullopt when nothing beats `cutoff`.
std::optional<TimingResult> exact_timing_below(const Instance& instance,
                                               const Sequences& sequences, Time cutoff);

// Anytime neighbourhood descent from `start`: relocations and exchanges of
// tasks, each candidate timed with time_sequences. Stops at a local optimum
// or at `deadline`. Never returns a longer schedule than `start`.
Schedule improve_schedule(const Instance& instance, const Schedule& start,
                          Clock::time_point deadline);

struct SolveReport {
    std::string algorithm;
    HeuristicOptions options;
    Schedule schedule;
    Time makespan = 0;
    Time warm_start_makespan = 0;
    double runtime_seconds = 0.0;
    LowerBoundReport lower_bound;
    double rd_to_lb = 0.0;
    bool proven_optimal = false;
};

// Runs LOSOS with all improvements and ROSOL with starting-task selection
// and end optimization, keeps the shorter as warm start, then spends the rest
// of `time_limit` improving it: exact search within the exact caps, the
// neighbourhood descent beyond them. `options` supplies the seed.
SolveReport warm_started_solve(const Instance& instance, const HeuristicOptions& options,
                               std::chrono::milliseconds time_limit,
                               const ExactLimits& caps = {});

} // namespace seqserv
