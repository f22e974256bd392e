#include "seqserv/generator.hpp"

namespace seqserv {

Instance transform_dedicated(const Instance& instance, const DedicationMap& dedication) {
    const std::size_t t = instance.tasks();
    if (dedication.size() != t) {
        throw InputError("dedication lists " + std::to_string(dedication.size()) +
                         " tasks, instance has " + std::to_string(t));
    }
    for (TaskId i = 0; i < t; ++i) {
        if (dedication[i] >= instance.machines()) {
            throw InputError("task " + std::to_string(i + 1) + " dedicated to unknown machine " +
                             std::to_string(dedication[i] + 1));
        }
    }
    std::vector<SetupTime> o = instance.setup_matrix();
    for (TaskId i = 0; i < t; ++i) {
        for (TaskId j = 0; j < t; ++j) {
            if (dedication[i] != dedication[j]) {
                o[i * t + j] = SetupTime::infinite();
            }
        }
    }
    return Instance(instance.machines(), instance.servers(), instance.processing_times(),
                    std::move(o), instance.name());
}

Instance transform_sequence_independent(const std::vector<SetupTime>& setup_per_task,
                                        const Instance& instance) {
    const std::size_t t = instance.tasks();
    if (setup_per_task.size() != t) {
        throw InputError("expected " + std::to_string(t) + " per-task setups, got " +
                         std::to_string(setup_per_task.size()));
    }
    const std::size_t n = t + instance.machines();
    std::vector<Time> p = instance.processing_times();
    p.resize(n, 0);
    std::vector<SetupTime> o(n * n, SetupTime::infinite());
    for (TaskId i = 0; i < n; ++i) {
        o[i * n + i] = SetupTime(0);
        for (TaskId j = 0; j < t; ++j) {
            if (i != j) {
                o[i * n + j] = setup_per_task[j];
            }
        }
    }
    return Instance(instance.machines(), instance.servers(), std::move(p), std::move(o),
                    instance.name());
}

} // namespace seqserv
