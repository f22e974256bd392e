#include "seqserv/schedule.hpp"

#include <algorithm>
#include <numeric>

namespace seqserv {

std::size_t Schedule::task_count() const {
    std::size_t n = 0;
    for (const auto& row : machines) {
        n += row.size();
    }
    return n;
}

std::vector<std::vector<TaskId>> Schedule::sequences() const {
    std::vector<std::vector<TaskId>> out(machines.size());
    for (std::size_t k = 0; k < machines.size(); ++k) {
        for (const auto& p : machines[k]) {
            out[k].push_back(p.task);
        }
    }
    return out;
}

Time compute_makespan(const Schedule& schedule) {
    Time makespan = 0;
    for (const auto& row : schedule.machines) {
        for (const auto& p : row) {
            makespan = std::max(makespan, p.end);
        }
    }
    return makespan;
}

Schedule assign_servers(const Schedule& schedule, std::size_t servers) {
    Schedule out = schedule;
    std::vector<std::size_t> order(out.setups.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& sa = out.setups[a];
        const auto& sb = out.setups[b];
        if (sa.start != sb.start) {
            return sa.start < sb.start;
        }
        return sa.machine < sb.machine;
    });

    std::vector<Time> free_from(servers, 0);
    for (std::size_t idx : order) {
        auto& setup = out.setups[idx];
        if (setup.length() <= 0) {
            setup.server.reset();
            continue;
        }
        auto it = std::find_if(free_from.begin(), free_from.end(),
                               [&](Time t) { return t <= setup.start; });
        if (it == free_from.end()) {
            throw InputError("more than " + std::to_string(servers) +
                             " setups overlap at time " + std::to_string(setup.start));
        }
        setup.server = static_cast<ServerId>(it - free_from.begin());
        *it = setup.end;
    }
    return out;
}

double relative_difference(double compared, double baseline) {
    if (!(baseline > 0.0)) {
        throw InputError("relative difference needs a positive baseline");
    }
    return (compared - baseline) / baseline;
}

} // namespace seqserv
