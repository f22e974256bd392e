#include "seqserv/io.hpp"
#include "tokens.hpp"

namespace seqserv {

using detail::expect_nonneg;
using detail::expect_word;
using detail::fail_at;
using detail::Line;

namespace {

std::size_t index_at(const Line& line, std::size_t at, std::size_t limit, const char* what) {
    if (at >= line.tokens.size()) {
        fail_at(line.number, 1, std::string("missing ") + what);
    }
    const auto v = expect_nonneg(line, line.tokens[at], what);
    if (v < 1 || static_cast<std::size_t>(v) > limit) {
        fail_at(line.number, line.tokens[at].column,
                std::string("unknown ") + what + " " + std::to_string(v));
    }
    return static_cast<std::size_t>(v - 1);
}

Time time_at(const Line& line, std::size_t at, const char* what) {
    if (at >= line.tokens.size()) {
        fail_at(line.number, 1, std::string("missing ") + what);
    }
    return expect_nonneg(line, line.tokens[at], what);
}

} // namespace

Schedule parse_schedule(std::string_view text, const Instance& instance) {
    const std::vector<Line> lines = detail::split_lines(text);
    if (lines.empty()) {
        throw InputError("empty schedule");
    }
    expect_word(lines[0], 0, "makespan");
    const Time declared = time_at(lines[0], 1, "makespan");
    if (lines[0].tokens.size() != 2) {
        fail_at(lines[0].number, lines[0].tokens[2].column, "trailing tokens after makespan");
    }

    Schedule schedule(instance.machines());
    std::vector<char> machine_seen(instance.machines(), 0);
    for (std::size_t q = 1; q < lines.size(); ++q) {
        const Line& line = lines[q];
        const std::string_view head = line.tokens[0].text;
        if (head == "machine") {
            const MachineId k = index_at(line, 1, instance.machines(), "machine");
            if (machine_seen[k]) {
                fail_at(line.number, line.tokens[1].column, "machine listed twice");
            }
            machine_seen[k] = 1;
            expect_word(line, 2, ":");
            std::size_t at = 3;
            while (at < line.tokens.size()) {
                TaskPlacement placement;
                placement.task = index_at(line, at, instance.tasks(), "task");
                placement.start = time_at(line, at + 1, "start");
                placement.end = time_at(line, at + 2, "end");
                placement.machine = k;
                schedule.machines[k].push_back(placement);
                at += 3;
                if (at < line.tokens.size()) {
                    expect_word(line, at, ";");
                    ++at;
                    if (at == line.tokens.size()) {
                        fail_at(line.number, line.tokens[at - 1].column, "dangling ';'");
                    }
                }
            }
        } else if (head == "setup") {
            SetupRecord setup;
            setup.from_task = index_at(line, 1, instance.tasks(), "task");
            setup.to_task = index_at(line, 2, instance.tasks(), "task");
            expect_word(line, 3, "machine");
            setup.machine = index_at(line, 4, instance.machines(), "machine");
            expect_word(line, 5, "server");
            if (line.tokens.size() > 6 && line.tokens[6].text == "-") {
                setup.server.reset();
            } else {
                setup.server = index_at(line, 6, instance.servers(), "server");
            }
            expect_word(line, 7, "start");
            setup.start = time_at(line, 8, "start");
            expect_word(line, 9, "end");
            setup.end = time_at(line, 10, "end");
            if (line.tokens.size() != 11) {
                fail_at(line.number, line.tokens[11].column, "trailing tokens after setup");
            }
            if (setup.end < setup.start) {
                fail_at(line.number, line.tokens[10].column, "setup ends before it starts");
            }
            schedule.setups.push_back(setup);
        } else {
            fail_at(line.number, line.tokens[0].column,
                    "expected 'machine' or 'setup', got '" + std::string(head) + "'");
        }
    }
    const Time actual = compute_makespan(schedule);
    if (actual != declared) {
        throw InputError("declared makespan " + std::to_string(declared) +
                         " differs from the placements (" + std::to_string(actual) + ")");
    }
    return schedule;
}

std::string emit_schedule(const Schedule& schedule) {
    std::string out = "makespan " + std::to_string(compute_makespan(schedule)) + "\n";
    for (MachineId k = 0; k < schedule.machines.size(); ++k) {
        out += "machine " + std::to_string(k + 1) + ":";
        const auto& row = schedule.machines[k];
        for (std::size_t q = 0; q < row.size(); ++q) {
            out += q == 0 ? " " : "; ";
            out += std::to_string(row[q].task + 1) + " " + std::to_string(row[q].start) + " " +
                   std::to_string(row[q].end);
        }
        out += '\n';
    }
    for (const SetupRecord& s : schedule.setups) {
        out += "setup " + std::to_string(s.from_task + 1) + " " + std::to_string(s.to_task + 1) +
               " machine " + std::to_string(s.machine + 1) + " server " +
               (s.server ? std::to_string(*s.server + 1) : std::string("-")) + " start " +
               std::to_string(s.start) + " end " + std::to_string(s.end) + "\n";
    }
    return out;
}

} // namespace seqserv
