#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace seqserv {

// Unbiased draw from [lo, hi] by rejection. Written out instead of
// std::uniform_int_distribution so that generated files are identical across
// standard library implementations.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) {
        return static_cast<std::int64_t>(rng());
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return lo + static_cast<std::int64_t>(x % range);
}

} // namespace seqserv
