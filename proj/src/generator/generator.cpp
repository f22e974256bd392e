#include "seqserv/generator.hpp"

#include <random>

#include "seqserv/random.hpp"

namespace seqserv {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

Instance generate_instance(const GeneratorConfig& config) {
    if (config.machines == 0 || config.tasks == 0 || config.servers == 0) {
        throw InputError("generator needs m, t, r >= 1");
    }
    if (config.p_min < 1 || config.p_min > config.p_max) {
        throw InputError("generator needs 1 <= p_min <= p_max");
    }
    if (config.o_min < 0 || config.o_min > config.o_max || config.o_max > SetupTime::max_finite) {
        throw InputError("generator needs 0 <= o_min <= o_max");
    }
    const std::size_t t = config.tasks;
    std::mt19937_64 rng(config.seed);
    std::vector<Time> p(t);
    for (auto& v : p) {
        v = uniform_int(rng, config.p_min, config.p_max);
    }
    std::vector<SetupTime> o(t * t, SetupTime(0));
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
            if (i != j) {
                o[i * t + j] = SetupTime(uniform_int(rng, config.o_min, config.o_max));
            }
        }
    }
    return Instance(config.machines, config.servers, std::move(p), std::move(o));
}

std::vector<GridEntry> benchmark_grid(std::uint64_t base_seed) {
    std::vector<GridEntry> grid;
    std::size_t id = 1;
    for (std::size_t m = 12; m <= 20; m += 2) {
        for (std::size_t factor : {15, 20, 25}) {
            const std::size_t t = factor * m;
            const std::uint64_t seed = splitmix64(base_seed ^ (m << 32 | t));
            for (std::size_t r : {2, 5}) {
                GeneratorConfig config;
                config.machines = m;
                config.tasks = t;
                config.servers = r;
                config.seed = seed;
                grid.push_back({id++, config});
            }
        }
    }
    return grid;
}

} // namespace seqserv
