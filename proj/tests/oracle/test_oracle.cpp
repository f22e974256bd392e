#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "../unit/helpers.hpp"
#include "seqserv/exact.hpp"
#include "seqserv/heuristics.hpp"
#include "seqserv/lower_bound.hpp"
#include "seqserv/validate.hpp"

using namespace testing;

namespace {

Sequences random_sequences(std::mt19937_64& rng, std::size_t m, std::size_t t) {
    std::vector<TaskId> order(t);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Sequences seqs(m);
    for (std::size_t k = 0; k < m; ++k) {
        seqs[k].push_back(order[k]);
    }
    for (std::size_t q = m; q < t; ++q) {
        seqs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(m) - 1))]
            .push_back(order[q]);
    }
    return seqs;
}

} // namespace

TEST_CASE("oracle timing on hand cases") {
    // One server, two machines each needing a setup of 3 right after a task of 1.
    const Instance a = uniform_setups(2, 1, {1, 1, 1, 1}, 3);
    CHECK(*oracle::timing(a, {{0, 1}, {2, 3}}) == 8);
    CHECK(*oracle::timing(uniform_setups(2, 2, {1, 1, 1, 1}, 3), {{0, 1}, {2, 3}}) == 5);
    const Instance inst = parse_instance(fixture("fig1.inst"));
    const Schedule fig = parse_schedule(fixture("fig1.sched"), inst);
    CHECK(*oracle::timing(inst, fig.sequences()) <= 21);
}

TEST_CASE("exact timing agrees with the assignment oracle") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 120; ++n) {
        const std::size_t m = 1 + n % 3;
        const std::size_t t = m + 1 + static_cast<std::size_t>(n % 5);
        const std::size_t r = 1 + static_cast<std::size_t>(n % 2);
        const Instance inst = tiny_random(500 + static_cast<std::uint64_t>(n), m, t, r);
        const Sequences seqs = random_sequences(rng, m, t);
        const auto exact = exact_timing(inst, seqs);
        const auto ref = oracle::timing(inst, seqs);
        REQUIRE(exact);
        REQUIRE(ref);
        CHECK(exact->makespan == *ref);
        CHECK(validate_schedule(inst, exact->schedule).feasible());
        CHECK(compute_makespan(exact->schedule) == exact->makespan);
    }
}

TEST_CASE("exact search, heuristics and bound against the optimum") {
    const std::vector<HeuristicOptions> modes = {
        HeuristicOptions::baseline(1), HeuristicOptions::se(1), HeuristicOptions::seic(1)};
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const std::size_t m = 2 + seed % 2;
        const std::size_t t = 4 + seed % 3;
        const std::size_t r = 1 + (seed / 2) % 2;
        const Instance inst = tiny_random(900 + seed, m, t, r);
        const auto opt = oracle::optimum(inst);
        REQUIRE(opt);
        CAPTURE(seed);

        const ExactResult exact = exact_solve(inst, {});
        REQUIRE(exact.schedule);
        CHECK(exact.proven_optimal);
        CHECK(compute_makespan(*exact.schedule) == *opt);
        CHECK(validate_schedule(inst, *exact.schedule).feasible());

        CHECK(lower_bound(inst).ceiling <= *opt);
        for (const auto& mode : modes) {
            CHECK(compute_makespan(losos(inst, mode)) >= *opt);
            if (!mode.idleness_reduction) {
                CHECK(compute_makespan(rosol(inst, mode)) >= *opt);
            }
        }
    }
}

TEST_CASE("exact search with INF setups") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance base = tiny_random(70 + seed, 2, 5, 1);
        std::vector<SetupTime> o = base.setup_matrix();
        std::mt19937_64 rng(seed);
        for (auto& v : o) {
            if (v.value() > 0 && uniform_int(rng, 0, 3) == 0) {
                v = SetupTime::infinite();
            }
        }
        const Instance inst(2, 1, base.processing_times(), o);
        const auto opt = oracle::optimum(inst);
        const ExactResult exact = exact_solve(inst, {});
        CAPTURE(seed);
        CHECK(exact.schedule.has_value() == opt.has_value());
        if (opt) {
            CHECK(compute_makespan(*exact.schedule) == *opt);
        }
    }
}
