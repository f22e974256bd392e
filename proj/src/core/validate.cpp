#include "seqserv/validate.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace seqserv {

namespace {

std::string task_name(TaskId task) { return "T" + std::to_string(task + 1); }
std::string machine_name(MachineId m) { return "M" + std::to_string(m + 1); }

std::string setup_name(const SetupRecord& s) {
    return "setup " + task_name(s.from_task) + "->" + task_name(s.to_task) + " on " +
           machine_name(s.machine);
}

void check_references(const Instance& instance, const Schedule& schedule) {
    if (schedule.machine_count() != instance.machines()) {
        throw InputError("schedule has " + std::to_string(schedule.machine_count()) +
                         " machines, instance has " + std::to_string(instance.machines()));
    }
    for (std::size_t k = 0; k < schedule.machines.size(); ++k) {
        for (const auto& p : schedule.machines[k]) {
            if (p.task >= instance.tasks()) {
                throw InputError("unknown task index " + std::to_string(p.task + 1));
            }
            if (p.machine != k) {
                throw InputError(task_name(p.task) + " is listed on " + machine_name(k) +
                                 " but records " + machine_name(p.machine));
            }
        }
    }
    for (const auto& s : schedule.setups) {
        if (s.from_task >= instance.tasks() || s.to_task >= instance.tasks()) {
            throw InputError("setup references an unknown task");
        }
        if (s.machine >= instance.machines()) {
            throw InputError("setup references unknown machine " + std::to_string(s.machine + 1));
        }
    }
}

} // namespace

std::string_view to_string(Condition condition) {
    switch (condition) {
    case Condition::A1: return "A1";
    case Condition::A2: return "A2";
    case Condition::A3: return "A3";
    case Condition::A4: return "A4";
    case Condition::A5: return "A5";
    case Condition::A6: return "A6";
    case Condition::Coverage: return "coverage";
    }
    return "?";
}

bool FeasibilityReport::has(Condition condition) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.condition == condition; });
}

std::size_t max_setup_concurrency(const std::vector<SetupRecord>& setups) {
    // Ends sort before starts at the same instant: [a, b) and [b, c) do not meet.
    std::vector<std::pair<Time, int>> events;
    for (const auto& s : setups) {
        if (s.length() > 0) {
            events.emplace_back(s.start, +1);
            events.emplace_back(s.end, -1);
        }
    }
    std::sort(events.begin(), events.end());
    std::size_t current = 0;
    std::size_t peak = 0;
    for (const auto& [time, delta] : events) {
        if (delta > 0) {
            peak = std::max(peak, ++current);
        } else {
            --current;
        }
    }
    return peak;
}

FeasibilityReport validate_schedule(const Instance& instance, const Schedule& schedule) {
    check_references(instance, schedule);
    FeasibilityReport report;
    auto add = [&](Condition c, std::string detail, std::vector<std::size_t> idx) {
        report.violations.push_back({c, std::move(detail), std::move(idx)});
    };

    // Coverage.
    std::vector<std::size_t> seen(instance.tasks(), 0);
    for (const auto& row : schedule.machines) {
        for (const auto& p : row) {
            ++seen[p.task];
        }
    }
    for (TaskId i = 0; i < instance.tasks(); ++i) {
        if (seen[i] != 1) {
            add(Condition::Coverage,
                task_name(i) + " appears " + std::to_string(seen[i]) + " times", {i});
        }
    }

    // A1.
    for (const auto& row : schedule.machines) {
        for (const auto& p : row) {
            if (p.start < 0) {
                add(Condition::A1, task_name(p.task) + " starts before time 0", {p.task});
            }
            if (p.end - p.start != instance.processing(p.task)) {
                add(Condition::A1,
                    task_name(p.task) + " runs " + std::to_string(p.end - p.start) +
                        " instead of " + std::to_string(instance.processing(p.task)),
                    {p.task});
            }
        }
    }

    // Index setups by (machine, from, to).
    std::map<std::tuple<MachineId, TaskId, TaskId>, std::vector<std::size_t>> by_pair;
    for (std::size_t y = 0; y < schedule.setups.size(); ++y) {
        const auto& s = schedule.setups[y];
        by_pair[{s.machine, s.from_task, s.to_task}].push_back(y);
    }

    // A2 and A5 per consecutive pair.
    std::size_t expected_setups = 0;
    for (MachineId k = 0; k < schedule.machines.size(); ++k) {
        const auto& row = schedule.machines[k];
        for (std::size_t pos = 1; pos < row.size(); ++pos) {
            ++expected_setups;
            const auto& prev = row[pos - 1];
            const auto& next = row[pos];
            const SetupTime o = instance.setup(prev.task, next.task);
            if (o.is_infinite()) {
                add(Condition::A2,
                    task_name(next.task) + " follows " + task_name(prev.task) +
                        " across an infinite setup",
                    {prev.task, next.task});
                continue;
            }
            if (next.start - prev.end < o.value()) {
                add(Condition::A2,
                    task_name(next.task) + " starts " + std::to_string(next.start - prev.end) +
                        " after " + task_name(prev.task) + ", setup needs " +
                        std::to_string(o.value()),
                    {prev.task, next.task});
            }
            auto it = by_pair.find({k, prev.task, next.task});
            if (it == by_pair.end() || it->second.empty()) {
                add(Condition::A2,
                    "missing setup " + task_name(prev.task) + "->" + task_name(next.task) +
                        " on " + machine_name(k),
                    {prev.task, next.task});
                continue;
            }
            if (it->second.size() > 1) {
                add(Condition::A2,
                    "duplicate setup " + task_name(prev.task) + "->" + task_name(next.task),
                    it->second);
            }
            const auto& s = schedule.setups[it->second.front()];
            if (s.start < prev.end || s.end > next.start) {
                add(Condition::A5, setup_name(s) + " leaves the window between its tasks",
                    {it->second.front()});
            }
        }
    }
    if (schedule.setups.size() != expected_setups) {
        // Some record does not match a consecutive pair (A2: nothing before a first task).
        for (std::size_t y = 0; y < schedule.setups.size(); ++y) {
            const auto& s = schedule.setups[y];
            const auto& row = schedule.machines[s.machine];
            bool matched = false;
            for (std::size_t pos = 1; pos < row.size(); ++pos) {
                if (row[pos - 1].task == s.from_task && row[pos].task == s.to_task) {
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                add(Condition::A2, setup_name(s) + " does not join consecutive tasks", {y});
            }
        }
    }

    // A4.
    for (std::size_t y = 0; y < schedule.setups.size(); ++y) {
        const auto& s = schedule.setups[y];
        const SetupTime o = instance.setup(s.from_task, s.to_task);
        if (o.is_infinite() || s.length() != o.value()) {
            add(Condition::A4, setup_name(s) + " has length " + std::to_string(s.length()),
                {y});
        }
    }

    // A3 and A6.
    const std::size_t peak = max_setup_concurrency(schedule.setups);
    if (peak > instance.servers()) {
        add(Condition::A6,
            std::to_string(peak) + " setups run concurrently with " +
                std::to_string(instance.servers()) + " servers",
            {});
    }
    std::vector<std::vector<std::size_t>> per_server(instance.servers());
    for (std::size_t y = 0; y < schedule.setups.size(); ++y) {
        const auto& s = schedule.setups[y];
        if (!s.server) {
            continue;
        }
        if (*s.server >= instance.servers()) {
            add(Condition::A3, setup_name(s) + " uses unknown server", {y});
            continue;
        }
        if (s.length() > 0) {
            per_server[*s.server].push_back(y);
        }
    }
    for (ServerId x = 0; x < per_server.size(); ++x) {
        auto& ids = per_server[x];
        std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
            return schedule.setups[a].start < schedule.setups[b].start;
        });
        for (std::size_t q = 1; q < ids.size(); ++q) {
            const auto& a = schedule.setups[ids[q - 1]];
            const auto& b = schedule.setups[ids[q]];
            if (b.start < a.end) {
                add(Condition::A6,
                    "server R" + std::to_string(x + 1) + " runs " + setup_name(a) + " and " +
                        setup_name(b) + " at once",
                    {ids[q - 1], ids[q]});
            }
        }
    }
    return report;
}

} // namespace seqserv
