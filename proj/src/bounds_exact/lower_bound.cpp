#include "seqserv/lower_bound.hpp"

#include <algorithm>
#include <functional>

#include "seqserv/heuristics.hpp"

namespace seqserv {

LowerBoundReport lower_bound(const Instance& instance) {
    const auto m = static_cast<std::int64_t>(instance.machines());
    const auto r = static_cast<std::int64_t>(instance.servers());

    LowerBoundReport report;
    report.z = shortest_incoming_setups(instance);

    std::vector<SetupTime> sorted = report.z;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::int64_t kept = 0;
    for (std::size_t q = std::min<std::size_t>(sorted.size(), instance.machines());
         q < sorted.size(); ++q) {
        if (sorted[q].is_finite()) {
            kept += sorted[q].value();
        }
    }

    report.mbar_p = Rational(instance.total_processing(), m);
    report.mbar_o = Rational(kept, m);
    report.rbar_o = Rational(kept, r);
    report.bound = std::max(report.mbar_p + report.mbar_o, report.rbar_o);
    const std::int64_t num = report.bound.numerator();
    const std::int64_t den = report.bound.denominator();
    report.ceiling = num / den + (num % den != 0 ? 1 : 0);
    return report;
}

} // namespace seqserv
