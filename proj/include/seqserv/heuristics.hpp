#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seqserv/instance.hpp"
#include "seqserv/plan.hpp"
#include "seqserv/schedule.hpp"

namespace seqserv {

enum class StartingMode { Random, Informed };
enum class SelectionMode { Greedy, Coefficient };

struct HeuristicOptions {
    StartingMode starting = StartingMode::Random;
    SelectionMode selection = SelectionMode::Greedy;
    bool idleness_reduction = false;  // LOSOS only
    // Off: only the relocation phase of end-of-schedule optimization runs.
    // On: relocation followed by pairwise swapping of last tasks.
    bool optimize_ends = false;
    std::uint64_t seed = 0;

    static HeuristicOptions baseline(std::uint64_t seed = 0) { return {.seed = seed}; }
    static HeuristicOptions se(std::uint64_t seed = 0) {
        return {.starting = StartingMode::Informed, .optimize_ends = true, .seed = seed};
    }
    static HeuristicOptions seic(std::uint64_t seed = 0) {
        return {.starting = StartingMode::Informed,
                .selection = SelectionMode::Coefficient,
                .idleness_reduction = true,
                .optimize_ends = true,
                .seed = seed};
    }
};

std::string describe(const HeuristicOptions& options);

// Locally Optimal Selection of Setups: builds machine chains one task at a
// time, always extending the machine that ends first and gating each setup on
// the earliest free server. A Schedule with server ids filled is returned.
Schedule losos(const Instance& instance, const HeuristicOptions& options);

// Resolution of Setup Overlaps Lazily: builds the same chains without server
// gating, then resolves server conflicts with a timeline sweep.
Schedule rosol(const Instance& instance, const HeuristicOptions& options);

// m distinct starting tasks, one per machine in machine order. Random draws
// from a seeded generator; Informed takes the m largest shortest-incoming
// setups (all-INF columns first, ties by lower index).
std::vector<TaskId> generate_starting_tasks(const Instance& instance, StartingMode mode,
                                            std::uint64_t seed);

// z_j: shortest finite setup into each task from any other task, INF when
// every incoming setup is INF.
std::vector<SetupTime> shortest_incoming_setups(const Instance& instance);

// Signed score with an INF state. Larger finite magnitudes saturate.
struct Score {
    bool infinite = false;
    std::int64_t value = 0;

    static Score inf() { return {true, 0}; }
    friend bool operator==(const Score&, const Score&) = default;
    friend bool operator<(const Score& a, const Score& b) {
        if (a.infinite || b.infinite) {
            return !a.infinite && b.infinite;
        }
        return a.value < b.value;
    }
};

// Task coefficient: o^4 + |o-x1|(o-x1) + |o-x2|(o-x2) + (o-x3), where o is the
// candidate setup and x1 <= x2 <= x3 the three smallest setups into the
// candidate from unresolved tasks. Any INF argument yields INF.
Score task_coefficient(SetupTime o_ij, SetupTime o_x1, SetupTime o_x2, SetupTime o_x3);

// Same with the first term replaced by max(0, o - gap)^4.
Score task_coefficient_idle(SetupTime o_ij, Time gap, SetupTime o_x1, SetupTime o_x2,
                            SetupTime o_x3);

// Mutable state of one constructive run.
class BuilderState {
public:
    // Places each starting task at time 0 on machine k = its position.
    // `track_servers` enables the server-free-from times (LOSOS).
    BuilderState(const Instance& instance, std::span<const TaskId> starting_tasks,
                 bool track_servers);

    const Instance& instance() const { return *instance_; }
    std::size_t machines() const { return plan_.machines.size(); }
    Time machine_end(MachineId k) const { return plan_.machine_end(k); }
    // Precondition: machine k holds a task.
    TaskId last_task(MachineId k) const { return plan_.machines[k].back().task; }

    bool is_unscheduled(TaskId task) const { return position_[task] != kScheduled; }
    // Unscheduled, or last on some machine (still able to precede a new task).
    bool is_unresolved(TaskId task) const { return is_unscheduled(task) || last_on_[task]; }
    const std::vector<TaskId>& unscheduled() const { return unscheduled_; }

    const std::vector<Time>& server_free_from() const { return server_free_; }
    bool tracks_servers() const { return track_servers_; }

    // Machine with the earliest current end among machines holding a task,
    // ties to the lower index.
    MachineId earliest_machine() const;

    // Appends `task` after the last task on machine k. Under server tracking
    // the setup starts at max(end, earliest free server) and occupies that
    // server; otherwise it starts at the machine end. Returns the setup start.
    Time append(MachineId k, TaskId task);

    // Up to three smallest setups into `task` from unresolved tasks other than
    // itself, ascending; shorter when fewer predecessors exist.
    std::vector<SetupTime> smallest_incoming(TaskId task) const;

    const Plan& plan() const { return plan_; }
    Plan release_plan() { return std::move(plan_); }

private:
    static constexpr std::size_t kScheduled = static_cast<std::size_t>(-1);

    void build_incoming_index() const;

    const Instance* instance_;
    Plan plan_;
    std::vector<TaskId> unscheduled_;
    std::vector<std::size_t> position_;
    std::vector<char> last_on_;
    std::vector<Time> server_free_;
    bool track_servers_;

    // Lazily built: for each task, its incoming setups sorted ascending.
    mutable std::vector<std::vector<std::pair<SetupTime, TaskId>>> incoming_;
    mutable std::vector<std::size_t> incoming_head_;
};

struct Selection {
    TaskId task;
    SetupTime setup;

    friend bool operator==(const Selection&, const Selection&) = default;
};

// Chooses the task to follow the last task on machine k. Greedy takes the
// shortest setup; Coefficient the smallest task coefficient; ties to the lower
// task index and INF setups only when nothing finite remains. With
// `idleness` (LOSOS only), when exactly one server is unoccupied at the
// machine end, candidates whose setup fits in the gap to the next machine end
// are preferred.
Selection select_next_task(const BuilderState& state, MachineId k, SelectionMode mode,
                           bool idleness);

// End-of-schedule optimization on a complete schedule. Relocates the last task
// of the longest machine while that lowers the makespan; with `swaps`, then
// exchanges last tasks between machine pairs. Candidate moves are re-timed
// and repaired with the server-conflict sweep; the returned schedule carries
// server ids.
Schedule optimize_schedule_ends(const Instance& instance, const Schedule& schedule,
                                bool swaps = true);

// Plan-level form used inside the constructive heuristics. With
// `server_free`, moves are judged on packed timing without the sweep.
Plan optimize_plan_ends(const Instance& instance, Plan plan, bool swaps, bool server_free);

} // namespace seqserv
