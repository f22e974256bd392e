#include <algorithm>
#include <optional>
#include <tuple>

#include "seqserv/exact.hpp"

namespace seqserv {

namespace {

// (makespan, machines attaining it, sum of machine ends)
using Key = std::tuple<Time, std::size_t, Time>;

// Allocation-free copy of the time_sequences rule that keeps only the key.
class Evaluator {
public:
    explicit Evaluator(const Instance& instance)
        : instance_(instance),
          end_(instance.machines()),
          next_(instance.machines()),
          free_(instance.servers()) {}

    std::optional<Key> operator()(const Sequences& seqs) {
        const std::size_t m = seqs.size();
        std::fill(free_.begin(), free_.end(), 0);
        for (MachineId k = 0; k < m; ++k) {
            end_[k] = seqs[k].empty() ? 0 : instance_.processing(seqs[k].front());
            next_[k] = seqs[k].empty() ? 0 : 1;
        }
        while (true) {
            MachineId best = m;
            for (MachineId k = 0; k < m; ++k) {
                if (next_[k] < seqs[k].size() && (best == m || end_[k] < end_[best])) {
                    best = k;
                }
            }
            if (best == m) {
                break;
            }
            const TaskId prev = seqs[best][next_[best] - 1];
            const TaskId task = seqs[best][next_[best]++];
            const SetupTime o = instance_.setup(prev, task);
            if (o.is_infinite()) {
                return std::nullopt;
            }
            Time setup_start = end_[best];
            if (o.value() > 0) {
                auto srv = std::min_element(free_.begin(), free_.end());
                setup_start = std::max(end_[best], *srv);
                *srv = setup_start + o.value();
            }
            end_[best] = setup_start + o.value() + instance_.processing(task);
        }
        Time makespan = 0;
        Time sum = 0;
        for (Time e : end_) {
            makespan = std::max(makespan, e);
            sum += e;
        }
        const auto critical =
            static_cast<std::size_t>(std::count(end_.begin(), end_.end(), makespan));
        return Key{makespan, critical, sum};
    }

    // Machine ends of the last evaluation.
    const std::vector<Time>& ends() const { return end_; }

private:
    const Instance& instance_;
    std::vector<Time> end_;
    std::vector<std::size_t> next_;
    std::vector<Time> free_;
};

class Descent {
public:
    Descent(const Instance& instance, Sequences seqs, Key key, Clock::time_point deadline)
        : eval_(instance), seqs_(std::move(seqs)), key_(key), deadline_(deadline) {}

    void run() {
        while (!expired_ && step()) {
        }
    }

    const Sequences& sequences() const { return seqs_; }

private:
    bool try_candidate(const Sequences& candidate) {
        if (Clock::now() >= deadline_) {
            expired_ = true;
            return false;
        }
        const auto key = eval_(candidate);
        if (key && *key < key_) {
            key_ = *key;
            seqs_ = candidate;
            return true;
        }
        return false;
    }

    std::vector<MachineId> critical_machines() {
        eval_(seqs_);
        const auto& ends = eval_.ends();
        std::vector<MachineId> out;
        for (MachineId k = 0; k < ends.size(); ++k) {
            if (ends[k] == std::get<0>(key_)) {
                out.push_back(k);
            }
        }
        return out;
    }

    // First improving relocation or exchange that involves a task of a
    // machine attaining the makespan.
    bool step() {
        const std::size_t m = seqs_.size();
        for (MachineId c : critical_machines()) {
            for (std::size_t a = seqs_[c].size(); a-- > 0;) {
                Sequences candidate = seqs_;
                const TaskId task = candidate[c][a];
                candidate[c].erase(candidate[c].begin() + static_cast<std::ptrdiff_t>(a));
                for (MachineId k = 0; k < m; ++k) {
                    auto& row = candidate[k];
                    for (std::size_t b = row.size() + 1; b-- > 0;) {
                        if (k == c && b == a) {
                            continue;
                        }
                        row.insert(row.begin() + static_cast<std::ptrdiff_t>(b), task);
                        const bool improved = try_candidate(candidate);
                        row.erase(row.begin() + static_cast<std::ptrdiff_t>(b));
                        if (improved || expired_) {
                            return improved;
                        }
                    }
                }
            }
            for (std::size_t a = seqs_[c].size(); a-- > 0;) {
                Sequences candidate = seqs_;
                for (MachineId k = 0; k < m; ++k) {
                    if (k == c) {
                        continue;
                    }
                    for (std::size_t b = candidate[k].size(); b-- > 0;) {
                        std::swap(candidate[c][a], candidate[k][b]);
                        const bool improved = try_candidate(candidate);
                        std::swap(candidate[c][a], candidate[k][b]);
                        if (improved || expired_) {
                            return improved;
                        }
                    }
                }
            }
        }
        return false;
    }

    Evaluator eval_;
    Sequences seqs_;
    Key key_;
    Clock::time_point deadline_;
    bool expired_ = false;
};

} // namespace

Schedule improve_schedule(const Instance& instance, const Schedule& start,
                          Clock::time_point deadline) {
    if (Clock::now() >= deadline || start.machine_count() != instance.machines()) {
        return start;
    }
    Sequences seqs = start.sequences();
    Evaluator eval(instance);
    const auto key = eval(seqs);
    if (!key) {
        return start;
    }
    Descent descent(instance, std::move(seqs), *key, deadline);
    descent.run();

    Schedule improved = assign_servers(to_schedule(time_sequences(instance, descent.sequences())),
                                       instance.servers());
    return compute_makespan(improved) < compute_makespan(start) ? improved : start;
}

} // namespace seqserv
