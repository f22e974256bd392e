#include <algorithm>
#include <limits>

#include "seqserv/exact.hpp"

namespace seqserv {

namespace {

constexpr Time kUnbounded = std::numeric_limits<Time>::max();

// Enumerates the order in which positive setups claim a server. Each setup
// starts at max(machine ready, earliest free server). Some optimal schedule
// is produced by an order whose start times never decrease, so orders that
// would start a setup before its predecessor in the order are skipped.
class OrderSearch {
public:
    OrderSearch(const Instance& instance, const Sequences& sequences)
        : instance_(instance),
          seqs_(sequences),
          pos_(sequences.size(), 0),
          ready_(sequences.size(), 0),
          remaining_(sequences.size(), 0),
          free_(instance.servers(), 0) {}

    // Returns false when some sequence crosses an INF setup.
    bool init() {
        for (MachineId k = 0; k < seqs_.size(); ++k) {
            const auto& seq = seqs_[k];
            for (std::size_t q = 1; q < seq.size(); ++q) {
                const SetupTime o = instance_.setup(seq[q - 1], seq[q]);
                if (o.is_infinite()) {
                    return false;
                }
                remaining_[k] += o.value() + instance_.processing(seq[q]);
            }
            if (!seq.empty()) {
                pos_[k] = 1;
                ready_[k] = instance_.processing(seq[0]);
                skip_zero_setups(k);
            }
        }
        return true;
    }

    std::optional<std::vector<MachineId>> run(Time cutoff) {
        best_ = cutoff;
        found_ = false;
        order_.clear();
        search(0);
        if (!found_) {
            return std::nullopt;
        }
        return best_order_;
    }

    Time best() const { return best_; }

private:
    Time setup_len(MachineId k) const {
        return instance_.setup(seqs_[k][pos_[k] - 1], seqs_[k][pos_[k]]).value();
    }

    // Zero-length setups need no server; their successors run at once.
    void skip_zero_setups(MachineId k) {
        while (pos_[k] < seqs_[k].size() && setup_len(k) == 0) {
            const Time p = instance_.processing(seqs_[k][pos_[k]]);
            ready_[k] += p;
            remaining_[k] -= p;
            ++pos_[k];
        }
    }

    void search(Time last_start) {
        Time bound = 0;
        bool pending = false;
        for (MachineId k = 0; k < seqs_.size(); ++k) {
            bound = std::max(bound, ready_[k] + remaining_[k]);
            pending = pending || pos_[k] < seqs_[k].size();
        }
        if (bound >= best_) {
            return;
        }
        if (!pending) {
            best_ = bound;
            best_order_ = order_;
            found_ = true;
            return;
        }
        for (MachineId k = 0; k < seqs_.size(); ++k) {
            if (pos_[k] >= seqs_[k].size()) {
                continue;
            }
            const Time start = std::max(ready_[k], free_.front());
            if (start < last_start) {
                continue;
            }
            const Time len = setup_len(k);
            const Time p = instance_.processing(seqs_[k][pos_[k]]);

            const std::vector<Time> saved_free = free_;
            const Time saved_ready = ready_[k];
            const Time saved_remaining = remaining_[k];
            const std::size_t saved_pos = pos_[k];

            free_.front() = start + len;
            std::sort(free_.begin(), free_.end());
            ready_[k] = start + len + p;
            remaining_[k] -= len + p;
            ++pos_[k];
            skip_zero_setups(k);
            order_.push_back(k);

            search(start);

            order_.pop_back();
            free_ = saved_free;
            ready_[k] = saved_ready;
            remaining_[k] = saved_remaining;
            pos_[k] = saved_pos;
        }
    }

    const Instance& instance_;
    const Sequences& seqs_;
    std::vector<std::size_t> pos_;
    std::vector<Time> ready_;
    std::vector<Time> remaining_;
    std::vector<Time> free_;
    std::vector<MachineId> order_;
    std::vector<MachineId> best_order_;
    Time best_ = kUnbounded;
    bool found_ = false;
};

// Replays an order of server claims into a plan.
Plan replay(const Instance& instance, const Sequences& seqs, const std::vector<MachineId>& order) {
    Plan plan(seqs.size());
    std::vector<std::size_t> pos(seqs.size(), 0);
    std::vector<Time> free(instance.servers(), 0);

    auto place_next = [&](MachineId k, Time setup_start, Time len) {
        const TaskId task = seqs[k][pos[k]++];
        const Time start = setup_start + len;
        plan.machines[k].push_back({task, setup_start, len, start, start + instance.processing(task)});
    };
    auto advance_zero = [&](MachineId k) {
        while (pos[k] < seqs[k].size() &&
               instance.setup(seqs[k][pos[k] - 1], seqs[k][pos[k]]).value() == 0) {
            place_next(k, plan.machine_end(k), 0);
        }
    };
    for (MachineId k = 0; k < seqs.size(); ++k) {
        if (!seqs[k].empty()) {
            place_next(k, 0, 0);
            advance_zero(k);
        }
    }
    for (MachineId k : order) {
        const Time len = instance.setup(seqs[k][pos[k] - 1], seqs[k][pos[k]]).value();
        auto srv = std::min_element(free.begin(), free.end());
        const Time start = std::max(plan.machine_end(k), *srv);
        *srv = start + len;
        place_next(k, start, len);
        advance_zero(k);
    }
    return plan;
}

void check_partition(const Instance& instance, const Sequences& sequences) {
    if (sequences.size() != instance.machines()) {
        throw InputError("sequences must list every machine");
    }
    std::vector<char> seen(instance.tasks(), 0);
    std::size_t count = 0;
    for (const auto& seq : sequences) {
        for (TaskId task : seq) {
            if (task >= instance.tasks() || seen[task]) {
                throw InputError("sequences do not partition the tasks");
            }
            seen[task] = 1;
            ++count;
        }
    }
    if (count != instance.tasks()) {
        throw InputError("sequences do not partition the tasks");
    }
}

} // namespace

std::optional<TimingResult> exact_timing_below(const Instance& instance,
                                               const Sequences& sequences, Time cutoff) {
    OrderSearch search(instance, sequences);
    if (!search.init()) {
        return std::nullopt;
    }
    const auto order = search.run(cutoff);
    if (!order) {
        return std::nullopt;
    }
    TimingResult result;
    result.schedule = assign_servers(to_schedule(replay(instance, sequences, *order)),
                                     instance.servers());
    result.makespan = compute_makespan(result.schedule);
    return result;
}

std::optional<TimingResult> exact_timing(const Instance& instance, const Sequences& sequences) {
    check_partition(instance, sequences);
    std::size_t positive = 0;
    for (const auto& seq : sequences) {
        for (std::size_t q = 1; q < seq.size(); ++q) {
            const SetupTime o = instance.setup(seq[q - 1], seq[q]);
            if (o.is_infinite()) {
                return std::nullopt;
            }
            positive += o.value() > 0 ? 1 : 0;
        }
    }
    if (positive > kMaxTimedSetups) {
        throw InputError("exact timing refuses " + std::to_string(positive) +
                         " setups (cap " + std::to_string(kMaxTimedSetups) + ")");
    }
    return exact_timing_below(instance, sequences, kUnbounded);
}

} // namespace seqserv
