#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "seqserv/exact.hpp"

namespace seqserv {

namespace {

constexpr std::size_t kHardTaskCap = 64;
constexpr std::uint64_t kClockInterval = 1024;

Time ceil_div(Time a, Time b) { return a / b + (a % b != 0 ? 1 : 0); }

// Builds machines one after another. A node either appends an unassigned task
// to the open machine or closes it and opens the next one. First tasks have
// increasing rank across machines, which removes machine permutations.
class BranchAndBound {
public:
    BranchAndBound(const Instance& instance, Clock::time_point deadline)
        : instance_(instance),
          deadline_(deadline),
          m_(instance.machines()),
          t_(instance.tasks()),
          seqs_(instance.machines()),
          assigned_(instance.tasks(), 0) {
        order_.resize(t_);
        std::iota(order_.begin(), order_.end(), TaskId{0});
        std::stable_sort(order_.begin(), order_.end(), [&](TaskId a, TaskId b) {
            return instance.processing(a) > instance.processing(b);
        });
        rank_.resize(t_);
        for (std::size_t q = 0; q < t_; ++q) {
            rank_[order_[q]] = q;
        }
        p_min_ = std::numeric_limits<Time>::max();
        for (TaskId i = 0; i < t_; ++i) {
            p_min_ = std::min(p_min_, instance.processing(i));
        }
    }

    void set_incumbent(const Schedule& schedule, Time makespan) {
        best_ = makespan;
        best_schedule_ = schedule;
    }

    // Returns false when the deadline interrupted the search.
    bool run() {
        aborted_ = false;
        remaining_p_ = instance_.total_processing();
        search(0, 0, 0);
        return !aborted_;
    }

    const std::optional<Schedule>& best_schedule() const { return best_schedule_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool out_of_time() {
        if (++nodes_ % kClockInterval == 0 && Clock::now() >= deadline_) {
            aborted_ = true;
        }
        return aborted_;
    }

    // Lower bound on the makespan of any completion of this node.
    Time bound(MachineId k, Time load) const {
        const std::size_t q = m_ - 1 - k;
        const bool open_empty = seqs_[k].empty();
        std::vector<SetupTime> z;
        z.reserve(t_);
        for (TaskId j = 0; j < t_; ++j) {
            if (assigned_[j]) {
                continue;
            }
            SetupTime best = SetupTime::infinite();
            for (TaskId i = 0; i < t_; ++i) {
                if (i != j && (!assigned_[i] || (!open_empty && i == seqs_[k].back()))) {
                    best = std::min(best, instance_.setup(i, j));
                }
            }
            z.push_back(best);
        }
        // Each task either starts a machine (open one when it is empty, or a
        // later one) or pays at least its shortest feasible incoming setup.
        const std::size_t starters = q + (open_empty ? 1 : 0);
        std::sort(z.begin(), z.end(), std::greater<>());
        if (z.size() > starters && z[starters].is_infinite()) {
            return std::numeric_limits<Time>::max();
        }
        Time setups = 0;
        for (std::size_t a = std::min(starters, z.size()); a < z.size(); ++a) {
            setups += z[a].value();
        }
        const Time machine_bound = ceil_div(load + remaining_p_ + setups, static_cast<Time>(q + 1));
        Time server_bound = 0;
        const Time all_setups = placed_setups_ + setups;
        if (all_setups > 0) {
            server_bound = 2 * p_min_ + ceil_div(all_setups, static_cast<Time>(instance_.servers()));
        }
        return std::max({load, machine_bound, server_bound, max_closed_});
    }

    void leaf() {
        const auto timed = exact_timing_below(instance_, seqs_, best_);
        if (timed && timed->makespan < best_) {
            best_ = timed->makespan;
            best_schedule_ = timed->schedule;
        }
    }

    void search(MachineId k, Time load, std::size_t placed) {
        if (aborted_ || out_of_time()) {
            return;
        }
        if (placed == t_) {
            leaf();
            return;
        }
        if (bound(k, load) >= best_) {
            return;
        }

        struct Child {
            SetupTime setup;
            std::size_t rank;
            TaskId task;
        };
        std::vector<Child> children;
        const bool empty = seqs_[k].empty();
        const std::size_t min_rank = (k > 0 && empty) ? rank_[seqs_[k - 1].front()] + 1 : 0;
        for (std::size_t q = min_rank; q < t_; ++q) {
            const TaskId j = order_[q];
            if (assigned_[j]) {
                continue;
            }
            const SetupTime o = empty ? SetupTime(0) : instance_.setup(seqs_[k].back(), j);
            if (o.is_infinite()) {
                continue;
            }
            children.push_back({o, q, j});
        }
        std::stable_sort(children.begin(), children.end(),
                         [](const Child& a, const Child& b) { return a.setup < b.setup; });

        for (const Child& c : children) {
            const Time p = instance_.processing(c.task);
            const Time next_load = load + c.setup.value() + p;
            if (next_load >= best_) {
                continue;
            }
            seqs_[k].push_back(c.task);
            assigned_[c.task] = 1;
            remaining_p_ -= p;
            placed_setups_ += c.setup.value();

            search(k, next_load, placed + 1);

            placed_setups_ -= c.setup.value();
            remaining_p_ += p;
            assigned_[c.task] = 0;
            seqs_[k].pop_back();
            if (aborted_) {
                return;
            }
        }
        if (!empty && k + 1 < m_) {
            const Time saved = max_closed_;
            max_closed_ = std::max(max_closed_, load);
            search(k + 1, 0, placed);
            max_closed_ = saved;
        }
    }

    const Instance& instance_;
    Clock::time_point deadline_;
    std::size_t m_;
    std::size_t t_;
    std::vector<TaskId> order_;
    std::vector<std::size_t> rank_;
    Sequences seqs_;
    std::vector<char> assigned_;
    Time p_min_ = 0;
    Time remaining_p_ = 0;
    Time placed_setups_ = 0;
    // Packed end bound of closed machines; timing can only delay them.
    Time max_closed_ = 0;
    Time best_ = std::numeric_limits<Time>::max();
    std::optional<Schedule> best_schedule_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace

ExactResult exact_solve(const Instance& instance, const ExactLimits& limits) {
    const bool within = instance.tasks() <= limits.max_tasks &&
                        instance.machines() <= limits.max_machines;
    if (!within && !limits.override_caps) {
        throw InputError("instance exceeds the exact caps (" + std::to_string(limits.max_tasks) +
                         " tasks, " + std::to_string(limits.max_machines) + " machines)");
    }
    if (instance.tasks() > kHardTaskCap) {
        throw InputError("exact search supports at most " + std::to_string(kHardTaskCap) +
                         " tasks");
    }

    const Clock::time_point deadline = Clock::now() + limits.time_limit;
    BranchAndBound search(instance, deadline);
    if (limits.warm_start) {
        search.set_incumbent(*limits.warm_start, compute_makespan(*limits.warm_start));
    }
    ExactResult result;
    result.proven_optimal = search.run();
    result.schedule = search.best_schedule();
    result.nodes = search.nodes();
    return result;
}

} // namespace seqserv
