#pragma once

#include <optional>
#include <vector>

#include "seqserv/instance.hpp"

namespace oracle {

using Sequences = std::vector<std::vector<seqserv::TaskId>>;
using seqserv::Time;

// Minimum makespan of fixed machine sequences: every assignment of positive
// setups to servers and every order on each server, timed by a longest-path
// pass over machine chains plus server chains. nullopt on an INF setup.
std::optional<Time> timing(const seqserv::Instance& instance, const Sequences& sequences);

// Optimum over all sets of machine sequences, each timed by `timing`.
// Unordered machine sets are enumerated once; sets whose packed makespan
// cannot beat the best so far are skipped. nullopt when every set uses INF.
std::optional<Time> optimum(const seqserv::Instance& instance);

} // namespace oracle
