#include <algorithm>
#include <numeric>
#include <random>

#include "seqserv/heuristics.hpp"
#include "seqserv/random.hpp"

namespace seqserv {

std::vector<SetupTime> shortest_incoming_setups(const Instance& instance) {
    const std::size_t t = instance.tasks();
    std::vector<SetupTime> z(t, SetupTime::infinite());
    for (TaskId i = 0; i < t; ++i) {
        for (TaskId j = 0; j < t; ++j) {
            if (i != j) {
                z[j] = std::min(z[j], instance.setup(i, j));
            }
        }
    }
    return z;
}

std::vector<TaskId> generate_starting_tasks(const Instance& instance, StartingMode mode,
                                            std::uint64_t seed) {
    const std::size_t t = instance.tasks();
    const std::size_t m = instance.machines();
    if (t < m) {
        throw InputError("starting-task selection needs at least as many tasks as machines");
    }
    std::vector<TaskId> order(t);
    std::iota(order.begin(), order.end(), TaskId{0});

    if (mode == StartingMode::Random) {
        // Partial Fisher-Yates: the first m slots become the draw.
        std::mt19937_64 rng(seed);
        for (std::size_t k = 0; k < m; ++k) {
            const auto pick = static_cast<std::size_t>(
                uniform_int(rng, static_cast<std::int64_t>(k), static_cast<std::int64_t>(t - 1)));
            std::swap(order[k], order[pick]);
        }
        order.resize(m);
        return order;
    }

    const std::vector<SetupTime> z = shortest_incoming_setups(instance);
    std::stable_sort(order.begin(), order.end(),
                     [&](TaskId a, TaskId b) { return z[a] > z[b]; });
    order.resize(m);
    return order;
}

} // namespace seqserv
