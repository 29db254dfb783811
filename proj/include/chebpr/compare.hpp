#pragma once

// Head-to-head convergence protocol: build the 210-round reference once,
// then report, per algorithm and worker count, the first round whose
// estimate reaches max relative error < eps against it.

#include <string>
#include <vector>

#include "chebpr/graph.hpp"

namespace chebpr {

struct CompareOptions {
    double c = 0.85;
    double eps = 1e-3;
    std::vector<int> parallelism = {1};
    int cpaa_budget = 60;    // rounds examined for the crossing
    int power_budget = 210;  // never needs more than the reference horizon
};

struct CompareRow {
    std::string algo;
    int parallelism = 1;
    int rounds = -1;        // first round with err < eps; -1 if never reached
    double err = 0.0;       // err at that round (or at the last round if -1)
    double l1 = 0.0;        // L1 error against the reference at the same round
    double elapsed_ms = 0.0;  // kernel CPU time summed through that round
};

std::vector<CompareRow> compare_algorithms(const UndirectedGraph& g,
                                           const CompareOptions& opts);

}  // namespace chebpr
