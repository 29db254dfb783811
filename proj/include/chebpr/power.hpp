#pragma once

// Power-method baseline and the fixed-round reference vector. Iterates
//   x <- c*P*x + (1-c)/n * e      from x0 = e/n,
// under the same bulk-synchronous, bit-deterministic kernel contract as
// run_cpaa (see cpaa.hpp).

#include "chebpr/cpaa.hpp"
#include "chebpr/graph.hpp"

namespace chebpr {

struct PowerConfig {
    double c = 0.85;
    // Exactly one of rounds/tol must be set. With tol, iteration stops once
    // the per-round L1 change falls below it (or max_rounds is exhausted);
    // with rounds, exactly that many rounds run and max_rounds is ignored.
    int rounds = -1;
    double tol = -1.0;
    int max_rounds = 60;
    int parallelism = 1;
};

PageRankResult run_power(const UndirectedGraph& g, const PowerConfig& cfg,
                         const Vector* reference = nullptr);

// The ground-truth vector for error measurements: 210 serial rounds.
Vector reference_pagerank(const UndirectedGraph& g, double c);

}  // namespace chebpr
