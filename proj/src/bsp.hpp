#pragma once

// Internal: bulk-synchronous execution over vertex ranges and the CPU clock
// used for per-round timing.

#include <ctime>
#include <thread>
#include <vector>

#include "chebpr/cpaa.hpp"

namespace chebpr::detail {

inline double cpu_ms() {
    timespec ts;
    clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) * 1e3 + static_cast<double>(ts.tv_nsec) * 1e-6;
}

// Apply fn to every range, one worker per range, and wait for all of them
// (the joining destructor is the phase barrier). A single range runs inline.
template <class Fn>
void for_ranges(const std::vector<VertexRange>& ranges, Fn&& fn) {
    if (ranges.size() == 1) {
        fn(ranges[0]);
        return;
    }
    std::vector<std::jthread> workers;
    workers.reserve(ranges.size());
    for (const auto& r : ranges)
        workers.emplace_back([&fn, r] { fn(r); });
}

}  // namespace chebpr::detail
