#pragma once

#include <string>

#include "seqserv/schedule.hpp"

namespace seqserv {

struct GanttLayout {
    double unit = 20.0;  // pixels per time unit
    double row_height = 30.0;
    double label_width = 50.0;
    double margin = 10.0;
};

// One row per machine (tasks as filled boxes T<i>, setups as light spans),
// then one row per server (setups labelled O<i>,<j>), over a time axis.
// `servers` fixes the number of server rows; 0 takes the highest id used.
// Throws InputError when a positive setup has no server id.
std::string emit_gantt_svg(const Schedule& schedule, std::size_t servers = 0,
                           const GanttLayout& layout = {});

} // namespace seqserv
