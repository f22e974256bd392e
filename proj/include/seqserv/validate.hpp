#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seqserv/instance.hpp"
#include "seqserv/schedule.hpp"

namespace seqserv {

// Feasibility conditions of a schedule. Coverage is the
// every-task-exactly-once check that sits outside the A1-A6 list.
enum class Condition { A1, A2, A3, A4, A5, A6, Coverage };

std::string_view to_string(Condition condition);

struct Violation {
    Condition condition;
    std::string detail;
    std::vector<std::size_t> indices;
};

struct FeasibilityReport {
    std::vector<Violation> violations;

    bool feasible() const { return violations.empty(); }
    bool has(Condition condition) const;
};

// Checks A1 (durations), A2 (consecutive pairs have their setup and enough
// gap), A4 (setup durations), A5 (setup window), A3/A6 (at most r positive
// setups in execution at any instant, setups as half-open intervals; explicit
// server ids, when present, must be in range and pairwise disjoint per
// server) and task coverage. Infeasibility is reported, never thrown.
// Throws InputError only for references outside the instance.
FeasibilityReport validate_schedule(const Instance& instance, const Schedule& schedule);

// Maximum number of positive-length setups overlapping at one instant.
std::size_t max_setup_concurrency(const std::vector<SetupRecord>& setups);

} // namespace seqserv
