#include "seqserv/instance.hpp"

#include <numeric>

namespace seqserv {

Instance::Instance(std::size_t machines, std::size_t servers, std::vector<Time> processing,
                   std::vector<SetupTime> setups, std::string name)
    : machines_(machines),
      servers_(servers),
      processing_(std::move(processing)),
      setups_(std::move(setups)),
      name_(std::move(name)) {
    if (machines_ == 0) {
        throw InputError("instance needs at least one machine");
    }
    if (servers_ == 0) {
        throw InputError("instance needs at least one server");
    }
    if (processing_.empty()) {
        throw InputError("instance needs at least one task");
    }
    const std::size_t t = processing_.size();
    if (setups_.size() != t * t) {
        throw InputError("setup matrix has " + std::to_string(setups_.size()) +
                         " entries, expected " + std::to_string(t * t));
    }
    for (std::size_t i = 0; i < t; ++i) {
        // Zero is admitted for the virtual tasks of the sequence-independent
        // transformation.
        if (processing_[i] < 0) {
            throw InputError("task " + std::to_string(i + 1) + " has negative processing time");
        }
    }
}

Time Instance::total_processing() const {
    return std::accumulate(processing_.begin(), processing_.end(), Time{0});
}

} // namespace seqserv
