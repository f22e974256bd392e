#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "seqserv/instance.hpp"

namespace seqserv {

using Rational = boost::rational<std::int64_t>;

// Components of the makespan lower bound. The bound combines average machine
// work (processing plus unavoidable setups) with average server work:
//   mbar_p = sum p / m
//   Z'     = z_j multiset minus its m largest elements
//   mbar_o = sum Z' / m,  rbar_o = sum Z' / r
//   bound  = max(mbar_p + mbar_o, rbar_o)
struct LowerBoundReport {
    Rational mbar_p;
    Rational mbar_o;
    Rational rbar_o;
    // Shortest incoming setup per task; INF where every incoming setup is INF.
    std::vector<SetupTime> z;
    Rational bound;
    Time ceiling = 0;
};

// Tasks whose incoming setups are all INF rank first among the m removed
// elements; any surplus beyond m contributes 0.
LowerBoundReport lower_bound(const Instance& instance);

} // namespace seqserv
