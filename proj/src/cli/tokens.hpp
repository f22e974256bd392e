#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqserv/instance.hpp"

namespace seqserv::detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number = 0;  // 1-based
    std::vector<Token> tokens;
};

[[noreturn]] inline void fail_at(std::size_t line, std::size_t column, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + what);
}

// Splits into whitespace-separated tokens; `;` and `:` stand alone.
// Comment and blank lines are dropped.
inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view raw = text.substr(pos, eol - pos);
        ++number;
        pos = eol + 1;
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        const std::size_t first = raw.find_first_not_of(" \t");
        if (first == std::string_view::npos || raw[first] == '#') {
            continue;
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            const char c = raw[i];
            if (c == ' ' || c == '\t') {
                ++i;
            } else if (c == ';' || c == ':') {
                line.tokens.push_back({raw.substr(i, 1), i + 1});
                ++i;
            } else {
                std::size_t j = i;
                while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != ';' &&
                       raw[j] != ':') {
                    ++j;
                }
                line.tokens.push_back({raw.substr(i, j - i), i + 1});
                i = j;
            }
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

inline std::optional<std::int64_t> to_int(std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

inline std::int64_t expect_nonneg(const Line& line, const Token& tok, const char* what) {
    const auto v = to_int(tok.text);
    if (!v) {
        fail_at(line.number, tok.column,
                std::string("expected integer ") + what + ", got '" + std::string(tok.text) + "'");
    }
    if (*v < 0) {
        fail_at(line.number, tok.column, std::string("negative ") + what);
    }
    return *v;
}

inline void expect_word(const Line& line, std::size_t index, std::string_view word) {
    if (index >= line.tokens.size()) {
        fail_at(line.number, 1, "expected '" + std::string(word) + "'");
    }
    if (line.tokens[index].text != word) {
        fail_at(line.number, line.tokens[index].column,
                "expected '" + std::string(word) + "', got '" +
                    std::string(line.tokens[index].text) + "'");
    }
}

} // namespace seqserv::detail
