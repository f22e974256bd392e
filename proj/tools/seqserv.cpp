#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "seqserv/bench.hpp"
#include "seqserv/exact.hpp"
#include "seqserv/gantt.hpp"
#include "seqserv/generator.hpp"
#include "seqserv/heuristics.hpp"
#include "seqserv/io.hpp"
#include "seqserv/lower_bound.hpp"
#include "seqserv/validate.hpp"

namespace fs = std::filesystem;
using namespace seqserv;

namespace {

constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        write_file(path, content);
    }
}

Instance load_instance(const std::string& path) {
    Instance instance = parse_instance(read_file(path));
    instance.set_name(fs::path(path).stem().string());
    return instance;
}

std::chrono::milliseconds to_ms(double seconds) {
    return std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
}

std::string show(const Rational& q) {
    std::ostringstream out;
    out << q.numerator();
    if (q.denominator() != 1) {
        out << "/" << q.denominator();
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.3f)",
                  static_cast<double>(q.numerator()) / static_cast<double>(q.denominator()));
    return out.str() + buf;
}

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used != tok.size() || v < 0) {
                throw std::invalid_argument(tok);
            }
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            throw InputError("not a non-negative integer: '" + tok + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parallel machine scheduling with sequence-dependent setups and shared servers"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Generate random instances");
    GeneratorConfig gc;
    std::string gen_out;
    std::string grid_dir;
    gen->add_option("-m,--machines", gc.machines, "Machines")->default_val(2);
    gen->add_option("-t,--tasks", gc.tasks, "Tasks")->default_val(6);
    gen->add_option("-r,--servers", gc.servers, "Servers")->default_val(1);
    gen->add_option("--p-min", gc.p_min)->default_val(1);
    gen->add_option("--p-max", gc.p_max)->default_val(50);
    gen->add_option("--o-min", gc.o_min)->default_val(1);
    gen->add_option("--o-max", gc.o_max)->default_val(50);
    gen->add_option("--seed", gc.seed)->default_val(0);
    gen->add_option("-o,--out", gen_out, "Output file (default stdout)");
    gen->add_option("--grid", grid_dir, "Write the 30-instance benchmark grid into this directory");

    // solve
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    std::string solve_in;
    std::string solve_out;
    std::string algo = "losos";
    std::string start = "random";
    std::string select = "greedy";
    bool idle = false;
    bool ends = false;
    std::uint64_t seed = 0;
    double time_limit = 10.0;
    solve->add_option("instance", solve_in, "Instance file")->required();
    solve->add_option("--algo", algo)->check(CLI::IsMember({"losos", "rosol", "exact", "warm"}));
    solve->add_option("--start", start)->check(CLI::IsMember({"random", "informed"}));
    solve->add_option("--select", select)->check(CLI::IsMember({"greedy", "coeff"}));
    solve->add_flag("--idle", idle, "Idleness reduction (LOSOS)");
    solve->add_flag("--optimize-ends", ends, "Swap phase of end optimization");
    solve->add_option("--seed", seed);
    solve->add_option("--time-limit", time_limit, "Seconds (exact, warm)");
    solve->add_option("-o,--out", solve_out, "Schedule file (default stdout)");

    // validate
    auto* val = app.add_subcommand("validate", "Check a schedule against an instance");
    std::string val_inst;
    std::string val_sched;
    val->add_option("instance", val_inst)->required();
    val->add_option("schedule", val_sched)->required();

    // lb
    auto* lb = app.add_subcommand("lb", "Print the lower bound");
    std::string lb_inst;
    lb->add_option("instance", lb_inst)->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Benchmark table over instances");
    std::vector<std::string> bench_files;
    std::string bench_dir;
    std::uint64_t bench_seed = 0;
    double bench_limit = 10.0;
    std::size_t bench_workers_opt = 0;
    bench->add_option("instances", bench_files, "Instance files");
    bench->add_option("--out-dir", bench_dir, "Report and solution directory")->required();
    bench->add_option("--seed", bench_seed);
    bench->add_option("--time-limit", bench_limit, "Warm-start budget in seconds");
    bench->add_option("--workers", bench_workers_opt, "Worker threads (capped by SEQSERV_WORKERS)");

    // gantt
    auto* gantt = app.add_subcommand("gantt", "Render a schedule as SVG");
    std::string g_inst;
    std::string g_sched;
    std::string g_out;
    gantt->add_option("instance", g_inst)->required();
    gantt->add_option("schedule", g_sched)->required();
    gantt->add_option("-o,--out", g_out, "SVG file (default stdout)");

    // transform
    auto* tr = app.add_subcommand("transform", "Instance transformations");
    tr->require_subcommand(1);
    auto* ded = tr->add_subcommand("dedicated", "Encode machine dedication by INF setups");
    std::string d_inst;
    std::string d_map;
    std::string d_out;
    ded->add_option("instance", d_inst)->required();
    ded->add_option("--map", d_map, "Machine per task, 1-based, space separated")->required();
    ded->add_option("-o,--out", d_out);
    auto* sind = tr->add_subcommand("seqindep", "Sequence-independent setups via virtual tasks");
    std::string s_inst;
    std::string s_setups;
    std::string s_out;
    sind->add_option("instance", s_inst, "Instance supplying m, r and p")->required();
    sind->add_option("--setups", s_setups, "Setup per task, space separated")->required();
    sind->add_option("-o,--out", s_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*gen) {
            if (!grid_dir.empty()) {
                fs::create_directories(grid_dir);
                for (const GridEntry& entry : benchmark_grid(gc.seed)) {
                    char name[32];
                    std::snprintf(name, sizeof name, "grid_%02zu.inst", entry.id);
                    write_file((fs::path(grid_dir) / name).string(),
                               emit_instance(generate_instance(entry.config)));
                }
                return 0;
            }
            emit(gen_out, emit_instance(generate_instance(gc)));
            return 0;
        }

        if (*solve) {
            const Instance instance = load_instance(solve_in);
            HeuristicOptions options;
            options.starting = start == "informed" ? StartingMode::Informed : StartingMode::Random;
            options.selection =
                select == "coeff" ? SelectionMode::Coefficient : SelectionMode::Greedy;
            options.idleness_reduction = idle;
            options.optimize_ends = ends;
            options.seed = seed;
            Schedule schedule;
            if (algo == "losos") {
                schedule = losos(instance, options);
            } else if (algo == "rosol") {
                schedule = rosol(instance, options);
            } else if (algo == "exact") {
                ExactLimits limits;
                limits.time_limit = to_ms(time_limit);
                ExactResult result = exact_solve(instance, limits);
                if (!result.schedule) {
                    std::cerr << "no finite-makespan schedule found\n";
                    return kExitInfeasible;
                }
                schedule = *result.schedule;
                std::cerr << "proven optimal: " << (result.proven_optimal ? "yes" : "no") << "\n";
            } else {
                const SolveReport report = warm_started_solve(instance, options, to_ms(time_limit));
                schedule = report.schedule;
                std::cerr << "warm start " << report.warm_start_makespan << ", final "
                          << report.makespan << ", LB " << report.lower_bound.ceiling
                          << ", proven optimal: " << (report.proven_optimal ? "yes" : "no")
                          << "\n";
            }
            emit(solve_out, emit_schedule(schedule));
            return 0;
        }

        if (*val) {
            const Instance instance = load_instance(val_inst);
            const Schedule schedule = parse_schedule(read_file(val_sched), instance);
            const FeasibilityReport report = validate_schedule(instance, schedule);
            if (report.feasible()) {
                std::cout << "feasible, makespan " << compute_makespan(schedule) << "\n";
                return 0;
            }
            for (const Violation& v : report.violations) {
                std::cout << to_string(v.condition) << ": " << v.detail << "\n";
            }
            return kExitInfeasible;
        }

        if (*lb) {
            const LowerBoundReport report = lower_bound(load_instance(lb_inst));
            std::cout << "mbar_p " << show(report.mbar_p) << "\n"
                      << "mbar_o " << show(report.mbar_o) << "\n"
                      << "rbar_o " << show(report.rbar_o) << "\n"
                      << "bound " << show(report.bound) << "\n"
                      << "ceiling " << report.ceiling << "\n";
            return 0;
        }

        if (*bench) {
            std::vector<Instance> instances;
            for (const auto& f : bench_files) {
                instances.push_back(load_instance(f));
            }
            fs::create_directories(bench_dir);
            BenchOptions options;
            options.solution_dir = bench_dir;
            options.workers = bench_workers_opt;
            const BenchReport report = run_bench(
                instances, default_bench_algorithms(bench_seed, to_ms(bench_limit)), options);
            write_file((fs::path(bench_dir) / "report.txt").string(), report.text());
            write_file((fs::path(bench_dir) / "report.csv").string(), report.csv());
            std::cout << report.text();
            return 0;
        }

        if (*gantt) {
            const Instance instance = load_instance(g_inst);
            const Schedule schedule = parse_schedule(read_file(g_sched), instance);
            emit(g_out, emit_gantt_svg(schedule, instance.servers()));
            return 0;
        }

        if (*ded) {
            const Instance instance = load_instance(d_inst);
            DedicationMap map;
            for (std::size_t k : parse_list(d_map)) {
                if (k == 0) {
                    throw InputError("machines in --map are 1-based");
                }
                map.push_back(k - 1);
            }
            emit(d_out, emit_instance(transform_dedicated(instance, map)));
            return 0;
        }

        if (*sind) {
            const Instance instance = load_instance(s_inst);
            std::vector<SetupTime> setups;
            for (std::size_t v : parse_list(s_setups)) {
                setups.emplace_back(static_cast<Time>(v));
            }
            emit(s_out, emit_instance(transform_sequence_independent(setups, instance)));
            return 0;
        }
    } catch (const InfeasibleConstruction& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
