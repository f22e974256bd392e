#include <algorithm>
#include <functional>
#include <optional>
#include <tuple>

#include "seqserv/heuristics.hpp"

namespace seqserv {

namespace {

std::vector<Time> ends_descending(const Plan& plan) {
    std::vector<Time> ends(plan.machines.size());
    for (MachineId k = 0; k < plan.machines.size(); ++k) {
        ends[k] = plan.machine_end(k);
    }
    std::sort(ends.begin(), ends.end(), std::greater<>());
    return ends;
}

Time first_changed(const MachinePlan& row) {
    return row.size() <= 1 ? 0 : row.back().setup_start;
}

class MoveEvaluator {
public:
    MoveEvaluator(const Instance& instance, bool server_free)
        : instance_(instance), server_free_(server_free) {}

    // Re-times the last item of each listed machine and repairs from the
    // earliest changed instant. Returns false on an infinite setup.
    bool finish(Plan& candidate, std::initializer_list<MachineId> touched) const {
        Time from = std::numeric_limits<Time>::max();
        for (MachineId k : touched) {
            auto& row = candidate.machines[k];
            if (row.empty()) {
                continue;
            }
            if (!pack_tail(instance_, row, row.size() - 1)) {
                return false;
            }
            from = std::min(from, first_changed(row));
        }
        if (!server_free_ && from != std::numeric_limits<Time>::max()) {
            resolve_server_conflicts(candidate, instance_.servers(), from);
        }
        return true;
    }

private:
    const Instance& instance_;
    bool server_free_;
};

// Moves the last task of the longest machine to another machine's end if that
// strictly lowers the makespan; with `repeat`, until no such move remains.
void relocate_phase(const MoveEvaluator& eval, Plan& plan, bool repeat) {
    const std::size_t m = plan.machines.size();
    for (bool again = true; again; again = repeat) {
        const Time makespan = plan.makespan();
        MachineId longest = 0;
        for (MachineId k = 1; k < m; ++k) {
            if (plan.machine_end(k) > plan.machine_end(longest)) {
                longest = k;
            }
        }
        if (plan.machines[longest].empty()) {
            return;
        }
        const PlannedTask moved = plan.machines[longest].back();

        std::optional<std::tuple<Time, Time, MachineId>> best_key;
        Plan best;
        for (MachineId k = 0; k < m; ++k) {
            if (k == longest) {
                continue;
            }
            Plan candidate = plan;
            candidate.machines[longest].pop_back();
            candidate.machines[k].push_back({moved.task, 0, 0, 0, 0});
            if (!eval.finish(candidate, {k})) {
                continue;
            }
            const Time new_makespan = candidate.makespan();
            if (new_makespan >= makespan) {
                continue;
            }
            // Shortest resulting target machine wins.
            std::tuple<Time, Time, MachineId> key{candidate.machine_end(k), new_makespan, k};
            if (!best_key || key < *best_key) {
                best_key = key;
                best = std::move(candidate);
            }
        }
        if (!best_key) {
            return;
        }
        plan = std::move(best);
    }
}

// Exchanges last tasks between machine pairs: first any exchange that lowers
// the makespan (largest drop), otherwise one that lowers the pair's longer
// schedule without raising the makespan. Balancing moves must also shrink the
// descending vector of machine ends lexicographically, so the loop ends.
void swap_phase(const MoveEvaluator& eval, Plan& plan) {
    const std::size_t m = plan.machines.size();
    while (true) {
        const Time makespan = plan.makespan();
        const std::vector<Time> ends = ends_descending(plan);

        std::optional<std::tuple<Time, Time, MachineId, MachineId>> improve_key;
        Plan improve;
        std::optional<std::tuple<Time, MachineId, MachineId>> balance_key;
        Plan balance;
        for (MachineId a = 0; a < m; ++a) {
            if (plan.machines[a].empty()) {
                continue;
            }
            for (MachineId b = a + 1; b < m; ++b) {
                if (plan.machines[b].empty()) {
                    continue;
                }
                Plan candidate = plan;
                std::swap(candidate.machines[a].back().task, candidate.machines[b].back().task);
                if (!eval.finish(candidate, {a, b})) {
                    continue;
                }
                const Time new_makespan = candidate.makespan();
                const Time old_pair = std::max(plan.machine_end(a), plan.machine_end(b));
                const Time new_pair = std::max(candidate.machine_end(a), candidate.machine_end(b));
                if (new_makespan < makespan) {
                    std::tuple<Time, Time, MachineId, MachineId> key{new_makespan, new_pair, a, b};
                    if (!improve_key || key < *improve_key) {
                        improve_key = key;
                        improve = std::move(candidate);
                    }
                } else if (!improve_key && new_makespan <= makespan && new_pair < old_pair &&
                           ends_descending(candidate) < ends) {
                    std::tuple<Time, MachineId, MachineId> key{new_pair - old_pair, a, b};
                    if (!balance_key || key < *balance_key) {
                        balance_key = key;
                        balance = std::move(candidate);
                    }
                }
            }
        }
        if (improve_key) {
            plan = std::move(improve);
        } else if (balance_key) {
            plan = std::move(balance);
        } else {
            return;
        }
    }
}

} // namespace

Plan optimize_plan_ends(const Instance& instance, Plan plan, bool swaps, bool server_free) {
    if (plan.machines.size() < 2) {
        return plan;
    }
    const MoveEvaluator eval(instance, server_free);
    relocate_phase(eval, plan, swaps);
    if (swaps) {
        swap_phase(eval, plan);
    }
    return plan;
}

Schedule optimize_schedule_ends(const Instance& instance, const Schedule& schedule, bool swaps) {
    Plan plan = optimize_plan_ends(instance, to_plan(instance, schedule), swaps, false);
    return assign_servers(to_schedule(plan), instance.servers());
}

} // namespace seqserv
