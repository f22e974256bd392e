#include <numeric>
#include <sstream>

#include "seqserv/heuristics.hpp"

namespace seqserv {

namespace {

std::vector<TaskId> starting_tasks_for(const Instance& instance, const HeuristicOptions& options) {
    if (instance.tasks() < instance.machines()) {
        if (options.starting == StartingMode::Informed) {
            throw InputError("informed starting tasks need at least as many tasks as machines");
        }
        // Every task starts a machine; the remaining machines stay empty.
        std::vector<TaskId> all(instance.tasks());
        std::iota(all.begin(), all.end(), TaskId{0});
        return all;
    }
    return generate_starting_tasks(instance, options.starting, options.seed);
}

// Shared chain construction. With `gate_servers` every setup waits for the
// earliest free server.
Plan build_chains(const Instance& instance, const HeuristicOptions& options, bool gate_servers) {
    const std::vector<TaskId> starts = starting_tasks_for(instance, options);
    BuilderState state(instance, starts, gate_servers);
    while (!state.unscheduled().empty()) {
        const MachineId k = state.earliest_machine();
        const Selection next =
            select_next_task(state, k, options.selection, options.idleness_reduction);
        if (next.setup.is_infinite()) {
            throw InfeasibleConstruction("every remaining task needs an infinite setup after T" +
                                         std::to_string(state.last_task(k) + 1));
        }
        state.append(k, next.task);
    }
    return state.release_plan();
}

} // namespace

std::string describe(const HeuristicOptions& options) {
    std::ostringstream out;
    out << "start=" << (options.starting == StartingMode::Random ? "random" : "informed")
        << " select=" << (options.selection == SelectionMode::Greedy ? "greedy" : "coeff")
        << " idle=" << (options.idleness_reduction ? "on" : "off")
        << " optimize-ends=" << (options.optimize_ends ? "on" : "off")
        << " seed=" << options.seed;
    return out.str();
}

Schedule losos(const Instance& instance, const HeuristicOptions& options) {
    Plan plan = build_chains(instance, options, true);
    plan = optimize_plan_ends(instance, std::move(plan), options.optimize_ends, false);
    return assign_servers(to_schedule(plan), instance.servers());
}

Schedule rosol(const Instance& instance, const HeuristicOptions& options) {
    if (options.idleness_reduction) {
        throw InputError("idleness reduction applies to LOSOS only");
    }
    Plan plan = build_chains(instance, options, false);
    plan = optimize_plan_ends(instance, std::move(plan), options.optimize_ends, true);
    const Plan relaxed = plan;
    resolve_server_conflicts(plan, instance.servers());
    if (!(plan == relaxed)) {
        plan = optimize_plan_ends(instance, std::move(plan), options.optimize_ends, false);
    }
    return assign_servers(to_schedule(plan), instance.servers());
}

} // namespace seqserv
