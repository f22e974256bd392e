#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqserv {

using Time = std::int64_t;
using TaskId = std::size_t;
using MachineId = std::size_t;
using ServerId = std::size_t;

// Malformed input: bad files, out-of-range indices, invalid parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A heuristic could not avoid an infinite setup.
class InfeasibleConstruction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Setup length: a non-negative integer or the distinguished value INF.
// INF absorbs addition and compares greater than every finite value.
class SetupTime {
public:
    static constexpr Time max_finite = std::numeric_limits<std::int32_t>::max();

    constexpr SetupTime() = default;
    constexpr explicit SetupTime(Time value) : raw_(static_cast<std::int32_t>(value)) {
        if (value < 0 || value > max_finite) {
            throw InputError("setup time out of range: " + std::to_string(value));
        }
    }

    static constexpr SetupTime infinite() {
        SetupTime s;
        s.raw_ = kInfRaw;
        return s;
    }

    constexpr bool is_infinite() const { return raw_ == kInfRaw; }
    constexpr bool is_finite() const { return raw_ != kInfRaw; }
    // Precondition: finite.
    constexpr Time value() const { return raw_; }

    friend constexpr bool operator==(SetupTime a, SetupTime b) = default;
    friend constexpr std::strong_ordering operator<=>(SetupTime a, SetupTime b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return a.raw_ <=> b.raw_;
    }

    friend constexpr SetupTime operator+(SetupTime a, SetupTime b) {
        if (a.is_infinite() || b.is_infinite()) {
            return infinite();
        }
        return SetupTime(static_cast<Time>(a.raw_) + b.raw_);
    }

private:
    static constexpr std::int32_t kInfRaw = -1;
    std::int32_t raw_ = 0;
};

// Problem data: m identical machines, r identical servers, t tasks with
// processing times and a t x t sequence-dependent setup matrix.
// Tasks, machines and servers are 0-based internally.
class Instance {
public:
    Instance() = default;

    // `setups` is row-major t x t; entry (i, j) is the setup from task i to
    // task j. Diagonal entries are stored but never read by any algorithm.
    Instance(std::size_t machines, std::size_t servers, std::vector<Time> processing,
             std::vector<SetupTime> setups, std::string name = {});

    std::size_t machines() const { return machines_; }
    std::size_t servers() const { return servers_; }
    std::size_t tasks() const { return processing_.size(); }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    Time processing(TaskId task) const { return processing_[task]; }
    const std::vector<Time>& processing_times() const { return processing_; }

    SetupTime setup(TaskId from, TaskId to) const { return setups_[from * tasks() + to]; }
    const std::vector<SetupTime>& setup_matrix() const { return setups_; }

    Time total_processing() const;

private:
    std::size_t machines_ = 0;
    std::size_t servers_ = 0;
    std::vector<Time> processing_;
    std::vector<SetupTime> setups_;
    std::string name_;
};

} // namespace seqserv
