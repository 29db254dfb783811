#include "chebpr/compare.hpp"

#include "chebpr/cpaa.hpp"
#include "chebpr/errors.hpp"
#include "chebpr/power.hpp"

namespace chebpr {

namespace {

CompareRow summarize(const std::string& algo, int K, const std::vector<TraceRow>& trace,
                     double eps) {
    CompareRow row;
    row.algo = algo;
    row.parallelism = K;
    double elapsed = 0.0;
    for (const TraceRow& t : trace) {
        elapsed += t.elapsed_ms;
        row.err = t.err;
        row.l1 = t.err_l1;
        row.elapsed_ms = elapsed;
        if (t.err < eps) {
            row.rounds = t.k;
            return row;
        }
    }
    row.rounds = -1;
    return row;
}

}  // namespace

std::vector<CompareRow> compare_algorithms(const UndirectedGraph& g,
                                           const CompareOptions& opts) {
    if (!(opts.eps > 0.0)) throw DomainError("eps must be positive");
    if (opts.parallelism.empty()) throw DomainError("parallelism list is empty");

    const Vector ref = reference_pagerank(g, opts.c);
    std::vector<CompareRow> rows;
    for (int K : opts.parallelism) {
        SolverConfig cfg;
        cfg.c = opts.c;
        cfg.rounds = opts.cpaa_budget;
        cfg.max_rounds = opts.cpaa_budget;
        cfg.parallelism = K;
        rows.push_back(summarize("cpaa", K, run_cpaa(g, cfg, &ref).trace, opts.eps));
    }
    for (int K : opts.parallelism) {
        PowerConfig cfg;
        cfg.c = opts.c;
        cfg.rounds = opts.power_budget;
        cfg.parallelism = K;
        rows.push_back(summarize("power", K, run_power(g, cfg, &ref).trace, opts.eps));
    }
    return rows;
}

}  // namespace chebpr
