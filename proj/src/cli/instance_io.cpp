#include <fstream>
#include <sstream>

#include "seqserv/io.hpp"
#include "tokens.hpp"

namespace seqserv {

using detail::expect_nonneg;
using detail::expect_word;
using detail::fail_at;
using detail::Line;

namespace {

std::size_t header_value(const std::vector<Line>& lines, std::size_t index, const char* key) {
    if (index >= lines.size()) {
        throw InputError(std::string("unexpected end of input, expected '") + key + "'");
    }
    const Line& line = lines[index];
    expect_word(line, 0, key);
    if (line.tokens.size() != 2) {
        fail_at(line.number, line.tokens.back().column,
                std::string("'") + key + "' takes exactly one value");
    }
    const auto v = expect_nonneg(line, line.tokens[1], key);
    if (v == 0) {
        fail_at(line.number, line.tokens[1].column, std::string(key) + " must be positive");
    }
    return static_cast<std::size_t>(v);
}

} // namespace

Instance parse_instance(std::string_view text) {
    const std::vector<Line> lines = detail::split_lines(text);
    const std::size_t m = header_value(lines, 0, "machines");
    const std::size_t r = header_value(lines, 1, "servers");
    const std::size_t t = header_value(lines, 2, "tasks");

    if (lines.size() < 4) {
        throw InputError("unexpected end of input, expected 'p:'");
    }
    const Line& pline = lines[3];
    expect_word(pline, 0, "p");
    expect_word(pline, 1, ":");
    if (pline.tokens.size() - 2 != t) {
        fail_at(pline.number, 1,
                "expected " + std::to_string(t) + " processing times, got " +
                    std::to_string(pline.tokens.size() - 2));
    }
    std::vector<Time> p(t);
    for (std::size_t i = 0; i < t; ++i) {
        p[i] = expect_nonneg(pline, pline.tokens[i + 2], "processing time");
    }

    if (lines.size() < 5) {
        throw InputError("unexpected end of input, expected 'O:'");
    }
    const Line& oline = lines[4];
    expect_word(oline, 0, "O");
    expect_word(oline, 1, ":");
    if (oline.tokens.size() != 2) {
        fail_at(oline.number, oline.tokens[2].column, "'O:' must stand on its own line");
    }

    std::vector<SetupTime> o(t * t);
    for (std::size_t i = 0; i < t; ++i) {
        if (5 + i >= lines.size()) {
            throw InputError("unexpected end of input: setup matrix has " + std::to_string(i) +
                             " of " + std::to_string(t) + " rows");
        }
        const Line& row = lines[5 + i];
        if (row.tokens.size() != t) {
            fail_at(row.number, 1,
                    "setup row " + std::to_string(i + 1) + " has " +
                        std::to_string(row.tokens.size()) + " entries, expected " +
                        std::to_string(t));
        }
        for (std::size_t j = 0; j < t; ++j) {
            const auto& tok = row.tokens[j];
            if (tok.text == "inf") {
                o[i * t + j] = SetupTime::infinite();
            } else {
                const auto v = expect_nonneg(row, tok, "setup time");
                if (v > SetupTime::max_finite) {
                    fail_at(row.number, tok.column, "setup time too large");
                }
                o[i * t + j] = SetupTime(v);
            }
            if (i == j && o[i * t + j] != SetupTime(0)) {
                fail_at(row.number, tok.column, "diagonal entry must be 0");
            }
        }
    }
    if (lines.size() > 5 + t) {
        fail_at(lines[5 + t].number, 1, "unexpected content after the setup matrix");
    }
    return Instance(m, r, std::move(p), std::move(o));
}

std::string emit_instance(const Instance& instance) {
    const std::size_t t = instance.tasks();
    std::string out;
    out += "machines " + std::to_string(instance.machines()) + "\n";
    out += "servers " + std::to_string(instance.servers()) + "\n";
    out += "tasks " + std::to_string(t) + "\n";
    out += "p:";
    for (TaskId i = 0; i < t; ++i) {
        out += ' ';
        out += std::to_string(instance.processing(i));
    }
    out += "\nO:\n";
    for (TaskId i = 0; i < t; ++i) {
        for (TaskId j = 0; j < t; ++j) {
            if (j > 0) {
                out += ' ';
            }
            const SetupTime o = instance.setup(i, j);
            if (i == j) {
                out += '0';
            } else if (o.is_infinite()) {
                out += "inf";
            } else {
                out += std::to_string(o.value());
            }
        }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw InputError("cannot write " + path);
    }
}

} // namespace seqserv
