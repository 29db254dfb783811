#include "chebpr/power.hpp"

#include <cmath>
#include <string>

#include "bsp.hpp"
#include "chebpr/errors.hpp"
#include "chebpr/metrics.hpp"

namespace chebpr {

namespace {

void essential_check(const UndirectedGraph& g) {
    if (g.n < 1) throw ValidationError("graph has no vertices");
    if (g.offsets.size() != static_cast<size_t>(g.n) + 1 ||
        g.degrees.size() != static_cast<size_t>(g.n) ||
        g.inv_degree.size() != static_cast<size_t>(g.n) ||
        static_cast<int64_t>(g.neighbors.size()) != g.offsets[static_cast<size_t>(g.n)])
        throw ValidationError("inconsistent graph arrays");
    for (int64_t v = 0; v < g.n; ++v)
        if (g.degrees[static_cast<size_t>(v)] < 1)
            throw ValidationError("vertex " + std::to_string(v) + " is isolated (degree 0)");
}

}  // namespace

PageRankResult run_power(const UndirectedGraph& g, const PowerConfig& cfg,
                         const Vector* reference) {
    essential_check(g);
    if (!(cfg.c > 0.0 && cfg.c < 1.0))
        throw DomainError("damping factor must lie in (0,1)");
    const bool fixed = cfg.rounds >= 0;
    const bool by_tol = cfg.tol > 0.0;
    if (fixed == by_tol) throw std::invalid_argument("set exactly one of rounds and tol");
    const int budget = fixed ? cfg.rounds : cfg.max_rounds;
    if (budget < 0) throw std::invalid_argument("round budget must be non-negative");
    if (reference && reference->size() != g.n)
        throw std::invalid_argument("reference length does not match vertex count");

    const int64_t n = g.n;
    const double base = (1.0 - cfg.c) / static_cast<double>(n);
    const double c = cfg.c;
    Vector x = Vector::Constant(n, 1.0 / static_cast<double>(n));
    Vector y(n);
    Vector contrib(n);
    const auto ranges = partition_vertices(g, cfg.parallelism);

    PageRankResult res;
    res.has_err = reference != nullptr;

    const int64_t* offsets = g.offsets.data();
    const int64_t* nbrs = g.neighbors.data();
    const double* invdeg = g.inv_degree.data();

    int k = 0;
    while (k < budget) {
        ++k;
        const double t0 = detail::cpu_ms();
        {
            const double* src = x.data();
            double* ctb = contrib.data();
            detail::for_ranges(ranges, [&](VertexRange r) {
                for (int64_t v = r.begin; v < r.end; ++v) ctb[v] = src[v] * invdeg[v];
            });
        }
        {
            const double* ctb = contrib.data();
            double* out = y.data();
            detail::for_ranges(ranges, [&](VertexRange r) {
                for (int64_t u = r.begin; u < r.end; ++u) {
                    double s = 0.0;
                    for (int64_t i = offsets[u]; i < offsets[u + 1]; ++i) s += ctb[nbrs[i]];
                    out[u] = c * s + base;
                }
            });
        }
        const double dt = detail::cpu_ms() - t0;

        double l1 = 0.0, comp = 0.0;
        for (int64_t i = 0; i < n; ++i) {
            double d = std::abs(y[i] - x[i]) - comp;
            double t = l1 + d;
            comp = (t - l1) - d;
            l1 = t;
        }
        x.swap(y);

        TraceRow row;
        row.k = k;
        row.l1_change = l1;
        row.elapsed_ms = dt;
        row.mass_T = kahan_sum(x);
        if (!std::isfinite(l1))
            throw NumericError("non-finite value at round " + std::to_string(k));
        if (reference) {
            ErrorReport er = max_relative_error(x, *reference);
            row.err = er.max_rel_err;
            row.err_l1 = er.l1_err;
        }
        res.trace.push_back(row);
        if (by_tol && l1 < cfg.tol) break;
    }

    res.rounds = k;
    res.ranks = std::move(x);
    res.total_mass = kahan_sum(res.ranks);
    return res;
}

Vector reference_pagerank(const UndirectedGraph& g, double c) {
    PowerConfig cfg;
    cfg.c = c;
    cfg.rounds = 210;
    cfg.parallelism = 1;
    return run_power(g, cfg).ranks;
}

}  // namespace chebpr
