#include "seqserv/plan.hpp"

#include <algorithm>
#include <limits>

namespace seqserv {

Time Plan::makespan() const {
    Time makespan = 0;
    for (MachineId k = 0; k < machines.size(); ++k) {
        makespan = std::max(makespan, machine_end(k));
    }
    return makespan;
}

Plan to_plan(const Instance& instance, const Schedule& schedule) {
    std::vector<const SetupRecord*> incoming(instance.tasks(), nullptr);
    for (const auto& s : schedule.setups) {
        incoming.at(s.to_task) = &s;
    }
    Plan plan(schedule.machine_count());
    for (MachineId k = 0; k < schedule.machine_count(); ++k) {
        for (std::size_t pos = 0; pos < schedule.machines[k].size(); ++pos) {
            const auto& p = schedule.machines[k][pos];
            PlannedTask item{p.task, p.start, 0, p.start, p.end};
            if (pos > 0) {
                const SetupRecord* s = incoming[p.task];
                if (s == nullptr) {
                    throw InputError("missing setup before task " + std::to_string(p.task + 1));
                }
                item.setup_start = s->start;
                item.setup_length = s->length();
            }
            plan.machines[k].push_back(item);
        }
    }
    return plan;
}

Schedule to_schedule(const Plan& plan) {
    Schedule schedule(plan.machines.size());
    for (MachineId k = 0; k < plan.machines.size(); ++k) {
        const auto& row = plan.machines[k];
        for (std::size_t pos = 0; pos < row.size(); ++pos) {
            const auto& item = row[pos];
            schedule.machines[k].push_back({item.task, item.start, item.end, k});
            if (pos > 0) {
                schedule.setups.push_back({row[pos - 1].task, item.task, k, item.setup_start,
                                           item.setup_end(), std::nullopt});
            }
        }
    }
    return schedule;
}

bool pack_tail(const Instance& instance, MachinePlan& machine, std::size_t from) {
    for (std::size_t pos = from; pos < machine.size(); ++pos) {
        auto& item = machine[pos];
        if (pos == 0) {
            item.setup_start = 0;
            item.setup_length = 0;
            item.start = 0;
        } else {
            const auto& prev = machine[pos - 1];
            const SetupTime o = instance.setup(prev.task, item.task);
            if (o.is_infinite()) {
                return false;
            }
            item.setup_start = prev.end;
            item.setup_length = o.value();
            item.start = prev.end + o.value();
        }
        item.end = item.start + instance.processing(item.task);
    }
    return true;
}

void resolve_server_conflicts(Plan& plan, std::size_t servers, Time from) {
    const std::size_t m = plan.machines.size();
    if (servers >= m) {
        return;  // one setup per machine at a time never exceeds the servers
    }
    constexpr Time kNever = std::numeric_limits<Time>::max();

    // cursor[k]: first item on machine k that has not completed by `now`.
    std::vector<std::size_t> cursor(m, 0);
    for (MachineId k = 0; k < m; ++k) {
        const auto& row = plan.machines[k];
        cursor[k] = static_cast<std::size_t>(
            std::partition_point(row.begin(), row.end(),
                                 [&](const PlannedTask& it) { return it.end <= from; }) -
            row.begin());
    }

    struct Candidate {
        Time coefficient;
        MachineId machine;
    };
    std::vector<Candidate> starting;
    Time makespan = plan.makespan();
    Time now = from;
    while (now < makespan) {
        std::size_t running = 0;
        starting.clear();
        Time step = kNever;
        for (MachineId k = 0; k < m; ++k) {
            const auto& row = plan.machines[k];
            std::size_t& c = cursor[k];
            while (c < row.size() && row[c].end <= now) {
                ++c;
            }
            if (c == row.size()) {
                continue;
            }
            const PlannedTask& it = row[c];
            Time next = kNever;
            for (Time b : {it.setup_start, it.setup_end(), it.start, it.end}) {
                if (b > now) {
                    next = std::min(next, b);
                }
            }
            step = std::min(step, next - now);
            if (it.setup_length > 0 && it.setup_start <= now && now < it.setup_end()) {
                if (it.setup_start == now) {
                    const Time reserve = makespan - plan.machine_end(k);
                    starting.push_back({reserve + it.setup_length, k});
                } else {
                    ++running;
                }
            }
        }
        if (step == kNever) {
            break;
        }
        if (running + starting.size() > servers) {
            std::sort(starting.begin(), starting.end(), [](const Candidate& a, const Candidate& b) {
                if (a.coefficient != b.coefficient) {
                    return a.coefficient < b.coefficient;
                }
                return a.machine < b.machine;
            });
            const std::size_t keep = servers > running ? servers - running : 0;
            for (std::size_t q = keep; q < starting.size(); ++q) {
                auto& row = plan.machines[starting[q].machine];
                for (std::size_t pos = cursor[starting[q].machine]; pos < row.size(); ++pos) {
                    row[pos].setup_start += step;
                    row[pos].start += step;
                    row[pos].end += step;
                }
            }
            makespan = plan.makespan();
        }
        now += step;
    }
}

Plan time_sequences(const Instance& instance, const std::vector<std::vector<TaskId>>& sequences) {
    const std::size_t m = sequences.size();
    Plan plan(m);
    std::vector<Time> server_free(instance.servers(), 0);
    std::vector<std::size_t> next(m, 0);
    for (MachineId k = 0; k < m; ++k) {
        plan.machines[k].reserve(sequences[k].size());
        if (!sequences[k].empty()) {
            const TaskId first = sequences[k].front();
            plan.machines[k].push_back({first, 0, 0, 0, instance.processing(first)});
            next[k] = 1;
        }
    }
    while (true) {
        MachineId best = m;
        Time best_end = 0;
        for (MachineId k = 0; k < m; ++k) {
            if (next[k] < sequences[k].size()) {
                const Time end = plan.machine_end(k);
                if (best == m || end < best_end) {
                    best = k;
                    best_end = end;
                }
            }
        }
        if (best == m) {
            break;
        }
        const TaskId prev = plan.machines[best].back().task;
        const TaskId task = sequences[best][next[best]++];
        const SetupTime o = instance.setup(prev, task);
        if (o.is_infinite()) {
            throw InfeasibleConstruction("infinite setup T" + std::to_string(prev + 1) + "->T" +
                                         std::to_string(task + 1));
        }
        Time setup_start = best_end;
        if (o.value() > 0) {
            auto srv = std::min_element(server_free.begin(), server_free.end());
            setup_start = std::max(best_end, *srv);
            *srv = setup_start + o.value();
        }
        const Time start = setup_start + o.value();
        plan.machines[best].push_back(
            {task, setup_start, o.value(), start, start + instance.processing(task)});
    }
    return plan;
}

} // namespace seqserv
