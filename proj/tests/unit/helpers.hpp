#pragma once

#include <string>
#include <vector>

#include "seqserv/generator.hpp"
#include "seqserv/instance.hpp"
#include "seqserv/io.hpp"
#include "seqserv/random.hpp"
#include "seqserv/schedule.hpp"

namespace testing {

using namespace seqserv;

constexpr Time INF = -1;

// Setup rows with INF marked by -1; the diagonal is forced to 0.
inline Instance make_instance(std::size_t m, std::size_t r, std::vector<Time> p,
                              const std::vector<std::vector<Time>>& rows) {
    const std::size_t t = p.size();
    std::vector<SetupTime> o(t * t, SetupTime(0));
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
            if (i != j) {
                o[i * t + j] = rows[i][j] == INF ? SetupTime::infinite() : SetupTime(rows[i][j]);
            }
        }
    }
    return Instance(m, r, std::move(p), std::move(o));
}

inline Instance uniform_setups(std::size_t m, std::size_t r, std::vector<Time> p, Time c) {
    const std::size_t t = p.size();
    return make_instance(m, r, std::move(p), std::vector<std::vector<Time>>(t, std::vector<Time>(t, c)));
}

inline Instance tiny_random(std::uint64_t seed, std::size_t m, std::size_t t, std::size_t r,
                            Time hi = 10) {
    GeneratorConfig c;
    c.machines = m;
    c.tasks = t;
    c.servers = r;
    c.p_min = 1;
    c.p_max = hi;
    c.o_min = 1;
    c.o_max = hi;
    c.seed = seed;
    return generate_instance(c);
}

inline std::string fixture(const std::string& name) {
    return read_file(std::string(SEQSERV_FIXTURES) + "/" + name);
}

} // namespace testing
