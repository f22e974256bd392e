#pragma once

#include <string>
#include <string_view>

#include "seqserv/instance.hpp"
#include "seqserv/schedule.hpp"

namespace seqserv {

// Instance text format, indices 1-based where they appear:
//   machines <m>
//   servers <r>
//   tasks <t>
//   p: <t integers>
//   O:
//   <t rows of t integers or `inf`; diagonal 0>
// Lines starting with `#` and blank lines are ignored. Errors are InputError
// with "line L, column C: " prefixes.
Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& instance);

// Schedule text format:
//   makespan <V>
//   machine <k>: <task> <start> <end>; <task> <start> <end>; ...
//   setup <i> <j> machine <k> server <s|-> start <a> end <b>
// `-` marks a setup without a server (zero length or not yet assigned).
// Parsing checks indices against `instance` and the makespan header against
// the placements; feasibility is left to validate_schedule.
Schedule parse_schedule(std::string_view text, const Instance& instance);
std::string emit_schedule(const Schedule& schedule);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace seqserv
