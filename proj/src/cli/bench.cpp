#include "seqserv/bench.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "seqserv/io.hpp"
#include "seqserv/lower_bound.hpp"

namespace seqserv {

namespace {

std::string percent(const std::optional<double>& rd) {
    if (!rd) {
        return "-";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *rd * 100.0);
    return buf;
}

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

BenchCell run_one(const Instance& instance, const BenchAlgorithm& algo, Time lb,
                  Schedule& schedule) {
    BenchCell cell;
    const auto started = Clock::now();
    try {
        switch (algo.kind) {
        case BenchAlgorithmKind::Losos:
            schedule = losos(instance, algo.options);
            break;
        case BenchAlgorithmKind::Rosol:
            schedule = rosol(instance, algo.options);
            break;
        case BenchAlgorithmKind::Warm:
            schedule = warm_started_solve(instance, algo.options, algo.time_limit).schedule;
            break;
        }
        cell.objective = compute_makespan(schedule);
        if (lb > 0) {
            cell.rd = relative_difference(static_cast<double>(*cell.objective),
                                          static_cast<double>(lb));
        }
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
    cell.runtime_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return cell;
}

} // namespace

std::vector<BenchAlgorithm> default_bench_algorithms(std::uint64_t seed,
                                                     std::chrono::milliseconds warm_limit) {
    const std::string warm_label =
        "WS-SEIC (" + std::to_string(warm_limit.count() / 1000) + "s)";
    return {
        {"LOSOS", BenchAlgorithmKind::Losos, HeuristicOptions::baseline(seed), {}},
        {"ROSOL", BenchAlgorithmKind::Rosol, HeuristicOptions::baseline(seed), {}},
        {"LOSOS_SE", BenchAlgorithmKind::Losos, HeuristicOptions::se(seed), {}},
        {"LOSOS_SEIC", BenchAlgorithmKind::Losos, HeuristicOptions::seic(seed), {}},
        {warm_label, BenchAlgorithmKind::Warm, HeuristicOptions::seic(seed), warm_limit},
    };
}

std::string label_slug(const std::string& label) {
    std::string out;
    for (char c : label) {
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
            c == '_' || c == '-') {
            out += c;
        } else if (!out.empty() && out.back() != '_') {
            out += '_';
        }
    }
    while (!out.empty() && out.back() == '_') {
        out.pop_back();
    }
    return out;
}

std::size_t bench_workers(std::size_t requested, std::size_t jobs) {
    std::size_t n = requested;
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
    }
    if (const char* env = std::getenv("SEQSERV_WORKERS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) {
            n = std::min(n, static_cast<std::size_t>(cap));
        }
    }
    return std::max<std::size_t>(1, std::min(n, jobs));
}

BenchReport run_bench(const std::vector<Instance>& instances,
                      const std::vector<BenchAlgorithm>& algorithms, const BenchOptions& options) {
    BenchReport report;
    for (const auto& a : algorithms) {
        report.labels.push_back(a.label);
    }
    report.rows.resize(instances.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t q = next++; q < instances.size(); q = next++) {
            const Instance& instance = instances[q];
            BenchRow& row = report.rows[q];
            row.instance = instance.name().empty() ? std::to_string(q + 1) : instance.name();
            row.machines = instance.machines();
            row.tasks = instance.tasks();
            row.servers = instance.servers();
            row.lower_bound = lower_bound(instance).ceiling;
            for (const auto& algo : algorithms) {
                Schedule schedule;
                row.cells.push_back(run_one(instance, algo, row.lower_bound, schedule));
                if (options.solution_dir && row.cells.back().objective) {
                    write_file(*options.solution_dir + "/" + label_slug(row.instance) + "__" +
                                   label_slug(algo.label) + ".sched",
                               emit_schedule(schedule));
                }
            }
        }
    };
    const std::size_t n = bench_workers(options.workers, instances.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < n; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }
    return report;
}

Time BenchReport::objective_sum(std::size_t algorithm) const {
    Time sum = 0;
    for (const auto& row : rows) {
        if (row.cells[algorithm].objective) {
            sum += *row.cells[algorithm].objective;
        }
    }
    return sum;
}

Time BenchReport::lower_bound_sum(std::size_t algorithm) const {
    Time sum = 0;
    for (const auto& row : rows) {
        if (row.cells[algorithm].objective) {
            sum += row.lower_bound;
        }
    }
    return sum;
}

std::optional<double> BenchReport::aggregate_rd(std::size_t algorithm) const {
    const Time lb = lower_bound_sum(algorithm);
    if (lb <= 0) {
        return std::nullopt;
    }
    return relative_difference(static_cast<double>(objective_sum(algorithm)),
                               static_cast<double>(lb));
}

std::string BenchReport::text() const {
    std::vector<std::size_t> width;
    for (const auto& l : labels) {
        width.push_back(std::max<std::size_t>(l.size(), 16));
    }
    std::string out = pad("#", 12) + pad("m", 5) + pad("t", 6) + pad("r", 4);
    for (std::size_t a = 0; a < labels.size(); ++a) {
        out += "  " + pad(labels[a], width[a]);
    }
    out += "  " + pad("LB", 7) + "\n";
    for (const auto& row : rows) {
        out += pad(row.instance, 12) + pad(std::to_string(row.machines), 5) +
               pad(std::to_string(row.tasks), 6) + pad(std::to_string(row.servers), 4);
        for (std::size_t a = 0; a < labels.size(); ++a) {
            const BenchCell& c = row.cells[a];
            const std::string v = c.objective
                                      ? std::to_string(*c.objective) + " (" + percent(c.rd) + "%)"
                                      : "fail";
            out += "  " + pad(v, width[a]);
        }
        out += "  " + pad(std::to_string(row.lower_bound), 7) + "\n";
    }
    out += pad("sum", 12) + pad("-", 5) + pad("-", 6) + pad("-", 4);
    for (std::size_t a = 0; a < labels.size(); ++a) {
        out += "  " + pad(std::to_string(objective_sum(a)), width[a]);
    }
    Time lb_total = 0;
    for (const auto& row : rows) {
        lb_total += row.lower_bound;
    }
    out += "  " + pad(std::to_string(lb_total), 7) + "\n";
    out += pad("RD", 12) + pad("-", 5) + pad("-", 6) + pad("-", 4);
    for (std::size_t a = 0; a < labels.size(); ++a) {
        out += "  " + pad(percent(aggregate_rd(a)) + " %", width[a]);
    }
    out += "  " + pad("0.00 %", 7) + "\n";
    return out;
}

std::string BenchReport::csv() const {
    std::string out = "instance;m;t;r;LB";
    for (const auto& l : labels) {
        out += ";" + l + ";" + l + " RD%;" + l + " s";
    }
    out += "\n";
    for (const auto& row : rows) {
        out += row.instance + ";" + std::to_string(row.machines) + ";" +
               std::to_string(row.tasks) + ";" + std::to_string(row.servers) + ";" +
               std::to_string(row.lower_bound);
        for (const auto& c : row.cells) {
            out += ";" + (c.objective ? std::to_string(*c.objective) : std::string("fail")) + ";" +
                   percent(c.rd) + ";" + seconds(c.runtime_seconds);
        }
        out += "\n";
    }
    out += "sum;-;-;-;";
    Time lb_total = 0;
    for (const auto& row : rows) {
        lb_total += row.lower_bound;
    }
    out += std::to_string(lb_total);
    for (std::size_t a = 0; a < labels.size(); ++a) {
        out += ";" + std::to_string(objective_sum(a)) + ";" + percent(aggregate_rd(a)) + ";-";
    }
    out += "\n";
    return out;
}

} // namespace seqserv
