#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqserv/instance.hpp"

namespace seqserv {

struct TaskPlacement {
    TaskId task = 0;
    Time start = 0;
    Time end = 0;
    MachineId machine = 0;

    friend bool operator==(const TaskPlacement&, const TaskPlacement&) = default;
};

// A setup performed between two consecutive tasks on one machine.
struct SetupRecord {
    TaskId from_task = 0;
    TaskId to_task = 0;
    MachineId machine = 0;
    Time start = 0;
    Time end = 0;
    std::optional<ServerId> server;

    Time length() const { return end - start; }

    friend bool operator==(const SetupRecord&, const SetupRecord&) = default;
};

// Per-machine ordered task placements plus the setups between them.
struct Schedule {
    std::vector<std::vector<TaskPlacement>> machines;
    std::vector<SetupRecord> setups;

    Schedule() = default;
    explicit Schedule(std::size_t machine_count) : machines(machine_count) {}

    std::size_t machine_count() const { return machines.size(); }
    std::size_t task_count() const;

    // Task order on each machine, dropping timing.
    std::vector<std::vector<TaskId>> sequences() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Latest task completion; 0 for a schedule without tasks.
Time compute_makespan(const Schedule& schedule);

// Fills server ids by greedy interval colouring: setups in ascending start
// (ties by machine), each takes the lowest-indexed server free at its start.
// Zero-length setups get no server. Throws InputError when more than
// `servers` setups overlap.
Schedule assign_servers(const Schedule& schedule, std::size_t servers);

// (compared - baseline) / baseline. Throws InputError when baseline <= 0.
double relative_difference(double compared, double baseline);

} // namespace seqserv
