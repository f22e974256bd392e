#include <algorithm>
#include <limits>
#include <optional>
#include <tuple>

#include "seqserv/heuristics.hpp"

namespace seqserv {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t saturate(Wide v) {
    constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
    constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
    return static_cast<std::int64_t>(std::clamp(v, lo, hi));
}

Wide fourth_power(Time v) {
    const Wide sq = static_cast<Wide>(v) * v;
    constexpr Wide cap = static_cast<Wide>(std::numeric_limits<std::int64_t>::max());
    return sq > cap ? cap : sq * sq;
}

Score coefficient_score(Wide head, Time o, Time x1, Time x2, Time x3) {
    const Wide d1 = o - x1;
    const Wide d2 = o - x2;
    const Wide d3 = o - x3;
    const Wide abs1 = d1 < 0 ? -d1 : d1;
    const Wide abs2 = d2 < 0 ? -d2 : d2;
    return {false, saturate(head + abs1 * d1 + abs2 * d2 + d3)};
}

} // namespace

Score task_coefficient(SetupTime o_ij, SetupTime o_x1, SetupTime o_x2, SetupTime o_x3) {
    if (o_ij.is_infinite() || o_x1.is_infinite() || o_x2.is_infinite() || o_x3.is_infinite()) {
        return Score::inf();
    }
    const Time o = o_ij.value();
    return coefficient_score(fourth_power(o), o, o_x1.value(), o_x2.value(), o_x3.value());
}

Score task_coefficient_idle(SetupTime o_ij, Time gap, SetupTime o_x1, SetupTime o_x2,
                            SetupTime o_x3) {
    if (o_ij.is_infinite() || o_x1.is_infinite() || o_x2.is_infinite() || o_x3.is_infinite()) {
        return Score::inf();
    }
    const Time o = o_ij.value();
    return coefficient_score(fourth_power(std::max<Time>(0, o - gap)), o, o_x1.value(),
                             o_x2.value(), o_x3.value());
}

BuilderState::BuilderState(const Instance& instance, std::span<const TaskId> starting_tasks,
                           bool track_servers)
    : instance_(&instance),
      plan_(instance.machines()),
      position_(instance.tasks()),
      last_on_(instance.tasks(), 0),
      track_servers_(track_servers) {
    if (starting_tasks.size() > instance.machines()) {
        throw InputError("more starting tasks than machines");
    }
    if (track_servers_) {
        server_free_.assign(instance.servers(), 0);
    }
    unscheduled_.reserve(instance.tasks());
    for (TaskId j = 0; j < instance.tasks(); ++j) {
        position_[j] = unscheduled_.size();
        unscheduled_.push_back(j);
    }
    auto remove = [this](TaskId task) {
        const std::size_t pos = position_[task];
        if (pos == kScheduled) {
            throw InputError("starting task T" + std::to_string(task + 1) + " repeated");
        }
        const TaskId moved = unscheduled_.back();
        unscheduled_[pos] = moved;
        position_[moved] = pos;
        unscheduled_.pop_back();
        position_[task] = kScheduled;
    };
    for (MachineId k = 0; k < starting_tasks.size(); ++k) {
        const TaskId task = starting_tasks[k];
        if (task >= instance.tasks()) {
            throw InputError("starting task out of range");
        }
        remove(task);
        plan_.machines[k].push_back({task, 0, 0, 0, instance.processing(task)});
        last_on_[task] = 1;
    }
}

MachineId BuilderState::earliest_machine() const {
    MachineId best = machines();
    for (MachineId k = 0; k < machines(); ++k) {
        if (plan_.machines[k].empty()) {
            continue;
        }
        if (best == machines() || machine_end(k) < machine_end(best)) {
            best = k;
        }
    }
    return best;
}

Time BuilderState::append(MachineId k, TaskId task) {
    const TaskId prev = last_task(k);
    const SetupTime o = instance_->setup(prev, task);
    if (o.is_infinite()) {
        throw InfeasibleConstruction("no finite setup left after T" + std::to_string(prev + 1));
    }
    const Time end = machine_end(k);
    Time setup_start = end;
    if (track_servers_ && o.value() > 0) {
        auto srv = std::min_element(server_free_.begin(), server_free_.end());
        setup_start = std::max(end, *srv);
        *srv = setup_start + o.value();
    }
    const Time start = setup_start + o.value();
    plan_.machines[k].push_back(
        {task, setup_start, o.value(), start, start + instance_->processing(task)});

    const std::size_t pos = position_[task];
    const TaskId moved = unscheduled_.back();
    unscheduled_[pos] = moved;
    position_[moved] = pos;
    unscheduled_.pop_back();
    position_[task] = kScheduled;
    last_on_[prev] = 0;
    last_on_[task] = 1;
    return setup_start;
}

void BuilderState::build_incoming_index() const {
    const std::size_t t = instance_->tasks();
    incoming_.assign(t, {});
    incoming_head_.assign(t, 0);
    for (TaskId j = 0; j < t; ++j) {
        auto& list = incoming_[j];
        list.reserve(t - 1);
        for (TaskId i = 0; i < t; ++i) {
            if (i != j) {
                list.emplace_back(instance_->setup(i, j), i);
            }
        }
        std::sort(list.begin(), list.end());
    }
}

std::vector<SetupTime> BuilderState::smallest_incoming(TaskId task) const {
    if (incoming_.empty()) {
        build_incoming_index();
    }
    const auto& list = incoming_[task];
    std::size_t& head = incoming_head_[task];
    // Resolution is permanent, so resolved entries at the front can be dropped.
    while (head < list.size() && !is_unresolved(list[head].second)) {
        ++head;
    }
    std::vector<SetupTime> out;
    for (std::size_t q = head; q < list.size() && out.size() < 3; ++q) {
        if (is_unresolved(list[q].second)) {
            out.push_back(list[q].first);
        }
    }
    return out;
}

Selection select_next_task(const BuilderState& state, MachineId k, SelectionMode mode,
                           bool idleness) {
    const auto& candidates = state.unscheduled();
    if (candidates.empty()) {
        throw std::logic_error("select_next_task called with no unscheduled task");
    }
    const Instance& instance = state.instance();
    const TaskId current = state.last_task(k);
    const Time current_end = state.machine_end(k);

    // Idleness reduction applies when exactly one server is free at the
    // current end and another machine is still running.
    std::optional<Time> gap;
    if (idleness && state.tracks_servers()) {
        const auto& free = state.server_free_from();
        const auto unoccupied =
            std::count_if(free.begin(), free.end(), [&](Time f) { return f <= current_end; });
        if (unoccupied == 1) {
            for (MachineId other = 0; other < state.machines(); ++other) {
                if (other != k && !state.plan().machines[other].empty()) {
                    const Time d = state.machine_end(other) - current_end;
                    gap = gap ? std::min(*gap, d) : d;
                }
            }
        }
    }

    auto score_of = [&](TaskId j, std::optional<Time> idle_gap) -> Score {
        const SetupTime o = instance.setup(current, j);
        if (mode == SelectionMode::Greedy) {
            return o.is_infinite() ? Score::inf() : Score{false, o.value()};
        }
        const std::vector<SetupTime> x = state.smallest_incoming(j);
        const SetupTime x1 = x.size() > 0 ? x[0] : o;
        const SetupTime x2 = x.size() > 1 ? x[1] : o;
        const SetupTime x3 = x.size() > 2 ? x[2] : o;
        return idle_gap ? task_coefficient_idle(o, *idle_gap, x1, x2, x3)
                        : task_coefficient(o, x1, x2, x3);
    };

    // Lexicographic key: (primary, setup, index); smaller wins.
    using Key = std::tuple<Score, SetupTime, TaskId>;
    auto pick = [&](auto&& admissible, auto&& key_of) {
        std::optional<Key> best;
        for (TaskId j : candidates) {
            if (!admissible(j)) {
                continue;
            }
            Key key = key_of(j);
            if (!best || key < *best) {
                best = key;
            }
        }
        return best;
    };

    std::optional<Key> best;
    if (gap) {
        auto fits = [&](TaskId j) {
            const SetupTime o = instance.setup(current, j);
            return o.is_finite() && o.value() <= *gap;
        };
        best = pick(fits, [&](TaskId j) {
            return Key{score_of(j, gap), instance.setup(current, j), j};
        });
        if (!best) {
            // Nothing fits the gap: shortest setup, ties by the plain criterion.
            std::optional<std::tuple<SetupTime, Score, TaskId>> shortest;
            for (TaskId j : candidates) {
                std::tuple<SetupTime, Score, TaskId> key{instance.setup(current, j),
                                                         score_of(j, std::nullopt), j};
                if (!shortest || key < *shortest) {
                    shortest = key;
                }
            }
            return {std::get<2>(*shortest), std::get<0>(*shortest)};
        }
    } else {
        best = pick([](TaskId) { return true; }, [&](TaskId j) {
            return Key{score_of(j, std::nullopt), instance.setup(current, j), j};
        });
    }
    return {std::get<2>(*best), std::get<1>(*best)};
}

} // namespace seqserv
