#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "seqserv/exact.hpp"
#include "seqserv/generator.hpp"
#include "seqserv/validate.hpp"

using namespace testing;

TEST_CASE("generation is a pure function of the config") {
    GeneratorConfig c;
    c.machines = 3;
    c.tasks = 20;
    c.servers = 2;
    c.seed = 99;
    const Instance a = generate_instance(c);
    const Instance b = generate_instance(c);
    CHECK(a.processing_times() == b.processing_times());
    CHECK(a.setup_matrix() == b.setup_matrix());
    c.seed = 100;
    CHECK(generate_instance(c).setup_matrix() != a.setup_matrix());
    for (TaskId i = 0; i < a.tasks(); ++i) {
        CHECK(a.setup(i, i) == SetupTime(0));
        CHECK(a.processing(i) >= 1);
        CHECK(a.processing(i) <= 50);
        for (TaskId j = 0; j < a.tasks(); ++j) {
            if (i != j) {
                CHECK(a.setup(i, j) >= SetupTime(1));
                CHECK(a.setup(i, j) <= SetupTime(50));
            }
        }
    }
}

TEST_CASE("draw order: processing times first, then setups row by row") {
    GeneratorConfig c;
    c.tasks = 3;
    c.seed = 5;
    const Instance a = generate_instance(c);
    std::mt19937_64 rng(5);
    for (TaskId i = 0; i < 3; ++i) {
        CHECK(a.processing(i) == uniform_int(rng, 1, 50));
    }
    for (TaskId i = 0; i < 3; ++i) {
        for (TaskId j = 0; j < 3; ++j) {
            if (i != j) {
                CHECK(a.setup(i, j) == SetupTime(uniform_int(rng, 1, 50)));
            }
        }
    }
}

TEST_CASE("degenerate ranges") {
    GeneratorConfig c;
    c.machines = 2;
    c.tasks = 6;
    c.p_min = c.p_max = 5;
    c.o_min = c.o_max = 3;
    const Instance a = generate_instance(c);
    for (TaskId i = 0; i < 6; ++i) {
        CHECK(a.processing(i) == 5);
        for (TaskId j = 0; j < 6; ++j) {
            CHECK(a.setup(i, j) == SetupTime(i == j ? 0 : 3));
        }
    }
}

TEST_CASE("invalid generator configs") {
    GeneratorConfig c;
    c.p_min = 0;
    CHECK_THROWS_AS(generate_instance(c), InputError);
    c = {};
    c.p_min = 10;
    c.p_max = 9;
    CHECK_THROWS_AS(generate_instance(c), InputError);
    c = {};
    c.o_min = -1;
    CHECK_THROWS_AS(generate_instance(c), InputError);
    c = {};
    c.o_min = 4;
    c.o_max = 3;
    CHECK_THROWS_AS(generate_instance(c), InputError);
    c = {};
    c.tasks = 0;
    CHECK_THROWS_AS(generate_instance(c), InputError);
}

TEST_CASE("benchmark grid shapes") {
    const auto grid = benchmark_grid(1);
    REQUIRE(grid.size() == 30);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> shapes;
    for (std::size_t q = 0; q < grid.size(); ++q) {
        const auto& c = grid[q].config;
        CHECK(grid[q].id == q + 1);
        CHECK(c.tasks % c.machines == 0);
        const std::size_t ratio = c.tasks / c.machines;
        CHECK((ratio == 15 || ratio == 20 || ratio == 25));
        CHECK((c.servers == 2 || c.servers == 5));
        CHECK((c.p_min == 1 && c.p_max == 50 && c.o_min == 1 && c.o_max == 50));
        shapes.insert({c.machines, c.tasks, c.servers});
    }
    CHECK(shapes.size() == 30);
    CHECK(grid[0].config.machines == 12);
    CHECK(grid[0].config.tasks == 180);
    CHECK(grid[0].config.servers == 2);
    CHECK(grid[29].config.machines == 20);
    CHECK(grid[29].config.tasks == 500);
    CHECK(grid[29].config.servers == 5);
    // Both server counts of a shape share the data.
    CHECK(grid[0].config.seed == grid[1].config.seed);
    CHECK(grid[0].config.seed != grid[2].config.seed);
}

TEST_CASE("dedicated transformation") {
    const Instance base = tiny_random(3, 2, 5, 1);
    SUBCASE("single machine dedication keeps the matrix") {
        CHECK(transform_dedicated(base, DedicationMap(5, 0)).setup_matrix() ==
              base.setup_matrix());
    }
    SUBCASE("different machines get INF both ways") {
        const Instance t = transform_dedicated(base, {0, 1, 0, 0, 0});
        CHECK(t.setup(0, 1).is_infinite());
        CHECK(t.setup(1, 0).is_infinite());
        CHECK(t.setup(0, 2) == base.setup(0, 2));
        CHECK(t.processing_times() == base.processing_times());
        CHECK(t.machines() == base.machines());
        CHECK(t.servers() == base.servers());
    }
    SUBCASE("partial or out-of-range maps") {
        CHECK_THROWS_AS(transform_dedicated(base, {0, 1}), InputError);
        CHECK_THROWS_AS(transform_dedicated(base, {0, 1, 2, 0, 0}), InputError);
    }
    SUBCASE("exact search never co-locates differently dedicated tasks") {
        const DedicationMap map{0, 1, 1, 0, 1};
        const Instance t = transform_dedicated(base, map);
        const ExactResult r = exact_solve(t, {});
        REQUIRE(r.schedule);
        CHECK(validate_schedule(t, *r.schedule).feasible());
        for (const auto& row : r.schedule->machines) {
            for (const auto& p : row) {
                CHECK(map[p.task] == map[row.front().task]);
            }
        }
    }
}

TEST_CASE("sequence-independent transformation") {
    SUBCASE("one task with setup 4") {
        const Instance core = uniform_setups(1, 1, {3}, 0);
        const Instance t = transform_sequence_independent({SetupTime(4)}, core);
        REQUIRE(t.tasks() == 2);
        CHECK(t.processing(1) == 0);
        CHECK(t.setup(1, 0) == SetupTime(4));
        CHECK(t.setup(0, 1).is_infinite());
        CHECK(*oracle::optimum(t) == 7);
        CHECK(compute_makespan(*exact_solve(t, {}).schedule) == 7);
    }
    SUBCASE("virtual tasks can only come first") {
        const Instance core = uniform_setups(2, 1, {1, 2, 3}, 0);
        const Instance t =
            transform_sequence_independent({SetupTime(1), SetupTime(2), SetupTime(3)}, core);
        REQUIRE(t.tasks() == 5);
        for (TaskId i = 0; i < 5; ++i) {
            for (TaskId v = 3; v < 5; ++v) {
                if (i != v) {
                    CHECK(t.setup(i, v).is_infinite());
                }
            }
            for (TaskId j = 0; j < 3; ++j) {
                if (i != j) {
                    CHECK(t.setup(i, j) == SetupTime(static_cast<Time>(j + 1)));
                }
            }
        }
    }
    SUBCASE("zero setups leave the optimum unchanged") {
        const Instance core = uniform_setups(2, 1, {4, 2, 3, 3}, 0);
        const std::vector<SetupTime> zeros(4, SetupTime(0));
        const Instance t = transform_sequence_independent(zeros, core);
        CHECK(*oracle::optimum(t) == *oracle::optimum(core));
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(transform_sequence_independent({SetupTime(1)}, uniform_setups(1, 1, {1, 1}, 0)),
                        InputError);
    }
}
