#include "seqserv/gantt.hpp"

#include <algorithm>
#include <cstdio>

namespace seqserv {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

Time tick_step(Time makespan) {
    for (Time step : {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000}) {
        if (makespan / step <= 30) {
            return step;
        }
    }
    return 1000 * (makespan / 30000 + 1);
}

} // namespace

std::string emit_gantt_svg(const Schedule& schedule, std::size_t servers,
                           const GanttLayout& layout) {
    std::size_t server_rows = servers;
    for (const SetupRecord& s : schedule.setups) {
        if (s.length() > 0 && !s.server) {
            throw InputError("setup T" + std::to_string(s.from_task + 1) + "->T" +
                             std::to_string(s.to_task + 1) +
                             " has no server id; run assign_servers first");
        }
        if (s.server && servers == 0) {
            server_rows = std::max(server_rows, *s.server + 1);
        }
    }

    const Time makespan = compute_makespan(schedule);
    const std::size_t rows = schedule.machine_count() + server_rows;
    const double x0 = layout.margin + layout.label_width;
    const double axis_y = layout.margin + static_cast<double>(rows) * layout.row_height;
    const double width = x0 + static_cast<double>(makespan) * layout.unit + layout.margin;
    const double height = axis_y + 30.0;
    auto x = [&](Time v) { return x0 + static_cast<double>(v) * layout.unit; };
    auto row_y = [&](std::size_t row) {
        return layout.margin + static_cast<double>(row) * layout.row_height;
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
           fmt(height) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";

    for (std::size_t row = 0; row < rows; ++row) {
        const bool is_machine = row < schedule.machine_count();
        const std::string label = is_machine
                                      ? "M" + std::to_string(row + 1)
                                      : "R" + std::to_string(row - schedule.machine_count() + 1);
        const double cy = row_y(row) + layout.row_height / 2.0 + 4.0;
        out += "<text x=\"" + fmt(layout.margin) + "\" y=\"" + fmt(cy) + "\">" + label +
               "</text>\n";
    }

    const double box_h = layout.row_height - 6.0;
    for (MachineId k = 0; k < schedule.machine_count(); ++k) {
        const double y = row_y(k) + 3.0;
        for (const SetupRecord& s : schedule.setups) {
            if (s.machine == k && s.length() > 0) {
                out += "<rect class=\"setup\" x=\"" + fmt(x(s.start)) + "\" y=\"" + fmt(y) +
                       "\" width=\"" + fmt(x(s.end) - x(s.start)) + "\" height=\"" + fmt(box_h) +
                       "\" fill=\"#dddddd\" stroke=\"#999999\"/>\n";
            }
        }
        for (const TaskPlacement& p : schedule.machines[k]) {
            out += "<rect class=\"task\" x=\"" + fmt(x(p.start)) + "\" y=\"" + fmt(y) +
                   "\" width=\"" + fmt(x(p.end) - x(p.start)) + "\" height=\"" + fmt(box_h) +
                   "\" fill=\"#7fa7d9\" stroke=\"#1f3f6f\"/>\n";
            out += "<text x=\"" + fmt((x(p.start) + x(p.end)) / 2.0) + "\" y=\"" +
                   fmt(y + box_h / 2.0 + 4.0) + "\" text-anchor=\"middle\">T" +
                   std::to_string(p.task + 1) + "</text>\n";
        }
    }
    for (const SetupRecord& s : schedule.setups) {
        if (!s.server || s.length() == 0) {
            continue;
        }
        const double y = row_y(schedule.machine_count() + *s.server) + 3.0;
        out += "<rect class=\"setup\" x=\"" + fmt(x(s.start)) + "\" y=\"" + fmt(y) +
               "\" width=\"" + fmt(x(s.end) - x(s.start)) + "\" height=\"" + fmt(box_h) +
               "\" fill=\"#f2c48d\" stroke=\"#8a5a1f\"/>\n";
        out += "<text x=\"" + fmt((x(s.start) + x(s.end)) / 2.0) + "\" y=\"" +
               fmt(y + box_h / 2.0 + 4.0) + "\" text-anchor=\"middle\">O" +
               std::to_string(s.from_task + 1) + "," + std::to_string(s.to_task + 1) +
               "</text>\n";
    }

    out += "<line x1=\"" + fmt(x0) + "\" y1=\"" + fmt(axis_y) + "\" x2=\"" + fmt(x(makespan)) +
           "\" y2=\"" + fmt(axis_y) + "\" stroke=\"black\"/>\n";
    const Time step = tick_step(makespan);
    for (Time v = 0; v <= makespan; v += step) {
        out += "<line x1=\"" + fmt(x(v)) + "\" y1=\"" + fmt(axis_y) + "\" x2=\"" + fmt(x(v)) +
               "\" y2=\"" + fmt(axis_y + 5.0) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + fmt(x(v)) + "\" y=\"" + fmt(axis_y + 18.0) +
               "\" text-anchor=\"middle\">" + std::to_string(v) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace seqserv
