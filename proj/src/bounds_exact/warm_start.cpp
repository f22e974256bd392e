#include <optional>

#include "seqserv/exact.hpp"

namespace seqserv {

namespace {

std::optional<Schedule> try_build(const Instance& instance, bool use_losos,
                                  const HeuristicOptions& options) {
    try {
        return use_losos ? losos(instance, options) : rosol(instance, options);
    } catch (const InfeasibleConstruction&) {
        return std::nullopt;
    } catch (const InputError&) {
        // Informed starts need t >= m.
        return std::nullopt;
    }
}

} // namespace

SolveReport warm_started_solve(const Instance& instance, const HeuristicOptions& options,
                               std::chrono::milliseconds time_limit, const ExactLimits& caps) {
    const Clock::time_point started = Clock::now();
    const Clock::time_point deadline = started + time_limit;

    SolveReport report;
    report.algorithm = "warm";
    report.options = options;
    report.lower_bound = lower_bound(instance);

    const auto seic = try_build(instance, true, HeuristicOptions::seic(options.seed));
    const auto se = try_build(instance, false, HeuristicOptions::se(options.seed));
    std::optional<Schedule> warm = seic;
    if (se && (!warm || compute_makespan(*se) < compute_makespan(*warm))) {
        warm = se;
    }

    const bool within = instance.tasks() <= caps.max_tasks &&
                        instance.machines() <= caps.max_machines;
    if (within || caps.override_caps) {
        ExactLimits limits = caps;
        limits.warm_start = warm;
        limits.time_limit = std::max(std::chrono::milliseconds(0),
                                     std::chrono::duration_cast<std::chrono::milliseconds>(
                                         deadline - Clock::now()));
        ExactResult exact = exact_solve(instance, limits);
        if (!exact.schedule) {
            throw InfeasibleConstruction("no finite-makespan schedule exists");
        }
        report.schedule = std::move(*exact.schedule);
        report.proven_optimal = exact.proven_optimal;
    } else {
        if (!warm) {
            throw InfeasibleConstruction("both heuristics hit an infinite setup");
        }
        report.schedule = improve_schedule(instance, *warm, deadline);
    }

    report.makespan = compute_makespan(report.schedule);
    report.warm_start_makespan = warm ? compute_makespan(*warm) : report.makespan;
    report.proven_optimal = report.proven_optimal || report.makespan == report.lower_bound.ceiling;
    if (report.lower_bound.ceiling > 0) {
        report.rd_to_lb = relative_difference(static_cast<double>(report.makespan),
                                              static_cast<double>(report.lower_bound.ceiling));
    }
    report.runtime_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return report;
}

} // namespace seqserv
