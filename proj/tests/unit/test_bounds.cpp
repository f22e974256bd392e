#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "seqserv/exact.hpp"
#include "seqserv/lower_bound.hpp"
#include "seqserv/validate.hpp"

using namespace testing;
using namespace std::chrono_literals;

TEST_CASE("lower bound with zero setups is the average load") {
    const Instance instance = uniform_setups(1, 1, {3, 4}, 0);
    const LowerBoundReport lb = lower_bound(instance);
    CHECK(lb.mbar_p == Rational(7));
    CHECK(lb.mbar_o == Rational(0));
    CHECK(lb.bound == Rational(7));
    CHECK(lb.ceiling == 7);
}

TEST_CASE("lower bound hand evaluation with a server bottleneck") {
    const Instance instance = uniform_setups(2, 1, {2, 2, 2, 2}, 4);
    const LowerBoundReport lb = lower_bound(instance);
    CHECK(lb.z == std::vector<SetupTime>(4, SetupTime(4)));
    CHECK(lb.mbar_p == Rational(4));
    CHECK(lb.mbar_o == Rational(4));
    CHECK(lb.rbar_o == Rational(8));
    CHECK(lb.bound == Rational(8));
    const auto opt = oracle::optimum(instance);
    REQUIRE(opt);
    CHECK(*opt >= 8);
}

TEST_CASE("lower bound keeps fractions and rounds up") {
    const Instance instance = uniform_setups(2, 3, {1, 2, 2}, 1);
    const LowerBoundReport lb = lower_bound(instance);
    CHECK(lb.mbar_p == Rational(5, 2));
    CHECK(lb.mbar_o == Rational(1, 2));
    CHECK(lb.rbar_o == Rational(1, 3));
    CHECK(lb.bound == Rational(3));
    CHECK(lb.ceiling == 3);
    const LowerBoundReport frac = lower_bound(uniform_setups(2, 1, {1, 2, 1}, 0));
    CHECK(frac.bound == Rational(2));
    CHECK(lower_bound(uniform_setups(2, 1, {1, 2, 2}, 0)).ceiling == 3);
}

TEST_CASE("tasks without finite incoming setups are removed first") {
    // z = (1, 1, INF): INF is among the m = 1 removed, Z' = {1, 1}.
    const Instance instance =
        make_instance(1, 1, {1, 1, 1}, {{0, 1, INF}, {1, 0, INF}, {1, 1, 0}});
    const LowerBoundReport lb = lower_bound(instance);
    CHECK(lb.z[2].is_infinite());
    CHECK(lb.mbar_o == Rational(2));
    CHECK(lb.bound == Rational(5));
    // Two INF columns with one machine: the surplus INF counts as 0.
    const Instance two =
        make_instance(1, 1, {1, 1, 1}, {{0, INF, INF}, {1, 0, INF}, {1, INF, 0}});
    CHECK(lower_bound(two).mbar_o == Rational(1));
}

TEST_CASE("exact timing examples") {
    SUBCASE("no setups: packed load") {
        const Instance instance = uniform_setups(2, 1, {3, 4, 5}, 0);
        const auto r = exact_timing(instance, {{0, 1}, {2}});
        REQUIRE(r);
        CHECK(r->makespan == 7);
    }
    SUBCASE("four equal tasks, one server") {
        const Instance instance = uniform_setups(2, 1, {3, 3, 3, 3}, 2);
        const auto r = exact_timing(instance, {{0, 2}, {1, 3}});
        REQUIRE(r);
        CHECK(r->makespan == 10);
        CHECK(validate_schedule(instance, r->schedule).feasible());
        CHECK(compute_makespan(r->schedule) == 10);
    }
    SUBCASE("enough servers: server-free pass") {
        const Instance instance = uniform_setups(2, 2, {3, 3, 3, 3}, 2);
        CHECK(exact_timing(instance, {{0, 2}, {1, 3}})->makespan == 8);
    }
    SUBCASE("INF setup") {
        const Instance instance = make_instance(1, 1, {1, 1}, {{0, INF}, {1, 0}});
        CHECK_FALSE(exact_timing(instance, {{0, 1}}).has_value());
        CHECK(exact_timing(instance, {{1, 0}})->makespan == 3);
    }
    SUBCASE("refusals") {
        const Instance instance = uniform_setups(2, 1, {1, 1, 1}, 1);
        CHECK_THROWS_AS(exact_timing(instance, {{0, 1}}), InputError);
        CHECK_THROWS_AS(exact_timing(instance, {{0, 1}, {1, 2}}), InputError);
        CHECK_THROWS_AS(exact_timing(instance, {{0, 1, 2}}), InputError);
        const Instance big = uniform_setups(1, 1, std::vector<Time>(kMaxTimedSetups + 2, 1), 1);
        std::vector<TaskId> all(big.tasks());
        for (TaskId i = 0; i < all.size(); ++i) {
            all[i] = i;
        }
        CHECK_THROWS_AS(exact_timing(big, {all}), InputError);
        CHECK(exact_timing_below(big, {all}, 1000)->makespan ==
              static_cast<Time>(2 * big.tasks() - 1));
    }
}

TEST_CASE("exact timing waits for a server instead of idling it") {
    // One server. M1 setups of 4 then 1, M2 a single setup of 1 after a long
    // task: letting M2 go first would delay M1.
    const Instance instance = make_instance(2, 1, {1, 1, 1, 6, 1},
                                            {{0, 4, 9, 9, 9},
                                             {9, 0, 1, 9, 9},
                                             {9, 9, 0, 9, 9},
                                             {9, 9, 9, 0, 1},
                                             {9, 9, 9, 9, 0}});
    const auto r = exact_timing(instance, {{0, 1, 2}, {3, 4}});
    REQUIRE(r);
    CHECK(r->makespan == *oracle::timing(instance, {{0, 1, 2}, {3, 4}}));
    CHECK(validate_schedule(instance, r->schedule).feasible());
}

TEST_CASE("exact solve small cases") {
    SUBCASE("four equal tasks") {
        const ExactResult r = exact_solve(uniform_setups(2, 1, {3, 3, 3, 3}, 2), {});
        REQUIRE(r.schedule);
        CHECK(compute_makespan(*r.schedule) == 10);
        CHECK(r.proven_optimal);
    }
    SUBCASE("one task") {
        const ExactResult r = exact_solve(uniform_setups(3, 1, {6}, 2), {});
        REQUIRE(r.schedule);
        CHECK(compute_makespan(*r.schedule) == 6);
        CHECK(r.proven_optimal);
    }
    SUBCASE("warm start at the optimum is kept") {
        const Instance instance = uniform_setups(2, 1, {3, 3, 3, 3}, 2);
        const Schedule warm = losos(instance, HeuristicOptions::se());
        REQUIRE(compute_makespan(warm) == 10);
        ExactLimits limits;
        limits.warm_start = warm;
        const ExactResult r = exact_solve(instance, limits);
        CHECK(r.proven_optimal);
        CHECK(compute_makespan(*r.schedule) == 10);
    }
    SUBCASE("caps") {
        const Instance big = uniform_setups(2, 1, std::vector<Time>(9, 1), 1);
        CHECK_THROWS_AS(exact_solve(big, {}), InputError);
        ExactLimits limits;
        limits.override_caps = true;
        const ExactResult r = exact_solve(big, limits);
        REQUIRE(r.schedule);
        CHECK(r.proven_optimal);
        CHECK(validate_schedule(big, *r.schedule).feasible());
        // Seven unit setups on one server between unit tasks: 1 + 7 + 1.
        CHECK(compute_makespan(*r.schedule) == 9);
        CHECK_THROWS_AS(exact_solve(uniform_setups(4, 1, {1, 1}, 1), {}), InputError);
    }
    SUBCASE("no budget returns the warm start unproven") {
        const Instance instance = tiny_random(5, 3, 8, 1);
        const Schedule warm = losos(instance, HeuristicOptions::baseline(1));
        ExactLimits limits;
        limits.warm_start = warm;
        limits.time_limit = 0ms;
        // The clock is read every 1024 nodes, so tiny searches may still
        // finish; either way the result is never worse than the warm start.
        const ExactResult r = exact_solve(instance, limits);
        REQUIRE(r.schedule);
        CHECK(compute_makespan(*r.schedule) <= compute_makespan(warm));
    }
    SUBCASE("transformed instance with no feasible schedule") {
        const Instance instance = make_instance(1, 1, {1, 1}, {{0, INF}, {INF, 0}});
        const ExactResult r = exact_solve(instance, {});
        CHECK_FALSE(r.schedule.has_value());
        CHECK(r.proven_optimal);
    }
}

TEST_CASE("exact solve agrees with and without a warm start") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Instance instance = tiny_random(seed + 40, 2 + seed % 2, 5 + seed % 3, 1 + seed % 2);
        const ExactResult cold = exact_solve(instance, {});
        ExactLimits limits;
        limits.warm_start = rosol(instance, HeuristicOptions::baseline(seed));
        const ExactResult warm = exact_solve(instance, limits);
        REQUIRE(cold.proven_optimal);
        REQUIRE(warm.proven_optimal);
        CHECK(compute_makespan(*cold.schedule) == compute_makespan(*warm.schedule));
        CHECK(validate_schedule(instance, *cold.schedule).feasible());
        CHECK(validate_schedule(instance, *warm.schedule).feasible());
    }
}

TEST_CASE("warm-started solve") {
    SUBCASE("tiny instance reaches the optimum") {
        const Instance instance = tiny_random(77, 3, 7, 1);
        const SolveReport r = warm_started_solve(instance, {}, 10s);
        CHECK(r.proven_optimal);
        CHECK(r.makespan == *oracle::optimum(instance));
        CHECK(r.makespan <= r.warm_start_makespan);
        CHECK(r.rd_to_lb >= 0.0);
        CHECK(validate_schedule(instance, r.schedule).feasible());
    }
    SUBCASE("symmetric instance with r >= m is solved by the heuristics") {
        const Instance instance = uniform_setups(2, 2, {2, 2, 2, 2, 2, 2}, 1);
        const SolveReport r = warm_started_solve(instance, {}, 10s);
        CHECK(r.proven_optimal);
        CHECK(r.makespan == r.warm_start_makespan);
        CHECK(r.makespan == *oracle::optimum(instance));
    }
    SUBCASE("over the exact caps with no budget the warm start comes back") {
        const Instance instance = tiny_random(8, 4, 30, 1, 50);
        const SolveReport r = warm_started_solve(instance, {}, 0ms);
        const Schedule seic = losos(instance, HeuristicOptions::seic());
        const Schedule se = rosol(instance, HeuristicOptions::se());
        const Schedule& better = compute_makespan(se) < compute_makespan(seic) ? se : seic;
        CHECK(r.schedule == better);
        CHECK(r.makespan == r.warm_start_makespan);
        REQUIRE(r.makespan > r.lower_bound.ceiling);
        CHECK_FALSE(r.proven_optimal);
    }
    SUBCASE("over the exact caps with budget never worse") {
        const Instance instance = tiny_random(9, 4, 30, 1, 50);
        const SolveReport r = warm_started_solve(instance, {}, 1s);
        CHECK(r.makespan <= r.warm_start_makespan);
        CHECK(validate_schedule(instance, r.schedule).feasible());
    }
}

TEST_CASE("neighbourhood descent") {
    const Instance instance = tiny_random(21, 3, 24, 1, 30);
    const Schedule start = losos(instance, HeuristicOptions::baseline(2));
    CHECK(improve_schedule(instance, start, Clock::now()) == start);
    const Schedule better = improve_schedule(instance, start, Clock::now() + 5s);
    CHECK(compute_makespan(better) <= compute_makespan(start));
    CHECK(validate_schedule(instance, better).feasible());
    CHECK(improve_schedule(instance, start, Clock::now() + 5s) == better);
}
