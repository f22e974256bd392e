#pragma once

#include <vector>

#include "seqserv/instance.hpp"
#include "seqserv/schedule.hpp"

namespace seqserv {

// Working representation used while building and repairing schedules:
// each machine holds its tasks in order, each with the setup that precedes
// it. The first task on a machine carries a zero-length setup.
struct PlannedTask {
    TaskId task = 0;
    Time setup_start = 0;
    Time setup_length = 0;
    Time start = 0;
    Time end = 0;

    Time setup_end() const { return setup_start + setup_length; }

    friend bool operator==(const PlannedTask&, const PlannedTask&) = default;
};

using MachinePlan = std::vector<PlannedTask>;

struct Plan {
    std::vector<MachinePlan> machines;

    Plan() = default;
    explicit Plan(std::size_t machine_count) : machines(machine_count) {}

    Time machine_end(MachineId k) const {
        return machines[k].empty() ? 0 : machines[k].back().end;
    }
    Time makespan() const;

    friend bool operator==(const Plan&, const Plan&) = default;
};

Plan to_plan(const Instance& instance, const Schedule& schedule);

// Converts to a Schedule with setup records in (machine, position) order and
// no server ids.
Schedule to_schedule(const Plan& plan);

// Re-times machine `k` from position `from` on with every setup started as
// soon as its predecessor completes. Returns false on an infinite setup.
bool pack_tail(const Instance& instance, MachinePlan& machine, std::size_t from);

// Server-conflict sweep: walks the timeline from `from` and, wherever more
// positive setups would start than there are free servers, commits the ones
// on machines with the lowest tolerance coefficient (slack to the makespan
// plus setup length, ties to the lower machine index) and shifts the rest of
// each other machine to the next event. Setups already running at an event
// are never moved. Items strictly before `from` must be server-feasible.
void resolve_server_conflicts(Plan& plan, std::size_t servers, Time from = 0);

// Times fixed task sequences with the greedy rule used by LOSOS: repeatedly
// extend the machine whose current end is earliest (ties to the lower index),
// starting its next setup at max(end, earliest free server). The result is
// server-feasible. Throws InfeasibleConstruction on an infinite setup.
Plan time_sequences(const Instance& instance, const std::vector<std::vector<TaskId>>& sequences);

} // namespace seqserv
