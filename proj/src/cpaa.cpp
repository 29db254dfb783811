#include "chebpr/cpaa.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bsp.hpp"
#include "chebpr/coefficients.hpp"
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

int resolve_rounds(const SolverConfig& cfg) {
    bool has_rounds = cfg.rounds >= 0;
    bool has_eps = cfg.eps > 0.0;
    if (has_rounds == has_eps)
        throw std::invalid_argument("set exactly one of rounds and eps");
    if (cfg.max_rounds < 0) throw std::invalid_argument("max_rounds must be non-negative");
    int M = has_rounds ? cfg.rounds : plan_iterations(cfg.c, cfg.eps).M;
    return std::min(M, cfg.max_rounds);
}

}  // namespace

std::vector<VertexRange> partition_vertices(const UndirectedGraph& g, int K) {
    if (K < 1) throw DomainError("parallelism must be >= 1");
    std::vector<int64_t> prefix(static_cast<size_t>(g.n) + 1, 0);
    for (int64_t v = 0; v < g.n; ++v)
        prefix[static_cast<size_t>(v) + 1] = prefix[static_cast<size_t>(v)] + g.degrees[static_cast<size_t>(v)];
    const double total = static_cast<double>(prefix[static_cast<size_t>(g.n)]);

    std::vector<int64_t> cuts(static_cast<size_t>(K) + 1, 0);
    cuts[static_cast<size_t>(K)] = g.n;
    for (int j = 1; j < K; ++j) {
        double ideal = total * j / K;
        auto it = std::lower_bound(prefix.begin(), prefix.end(), ideal,
                                   [](int64_t p, double x) { return static_cast<double>(p) < x; });
        int64_t idx = it - prefix.begin();
        if (idx > g.n) idx = g.n;
        // prefix[idx] is the first value >= ideal; prefix[idx-1] may be closer
        if (idx > 0 &&
            (idx == g.n + 1 ||
             static_cast<double>(prefix[static_cast<size_t>(idx)]) - ideal >
                 ideal - static_cast<double>(prefix[static_cast<size_t>(idx) - 1])))
            --idx;
        idx = std::clamp(idx, cuts[static_cast<size_t>(j) - 1], g.n);
        cuts[static_cast<size_t>(j)] = idx;
    }
    std::vector<VertexRange> ranges(static_cast<size_t>(K));
    for (int j = 0; j < K; ++j)
        ranges[static_cast<size_t>(j)] = {cuts[static_cast<size_t>(j)], cuts[static_cast<size_t>(j) + 1]};
    return ranges;
}

Vector normalize(const Vector& v) {
    double total = kahan_sum(v);
    if (!std::isfinite(total) || total <= 0.0)
        throw NumericError("normalization total is not positive and finite");
    Vector out(v.size());
    for (int64_t i = 0; i < v.size(); ++i) out[i] = v[i] / total;
    return out;
}

PageRankResult run_cpaa(const UndirectedGraph& g, const SolverConfig& cfg,
                        const Vector* reference) {
    essential_check(g);
    const int M = resolve_rounds(cfg);
    const CoefficientTable table = coefficients(cfg.c, M);
    if (reference && reference->size() != g.n)
        throw std::invalid_argument("reference length does not match vertex count");

    const int64_t n = g.n;
    Vector T_prev = Vector::Ones(n);
    Vector T_curr = Vector::Ones(n);
    Vector T_next(n);
    Vector contrib(n);
    Vector acc = Vector::Constant(n, table.c0 / 2.0);
    Vector scratch(reference ? n : 0);
    const auto ranges = partition_vertices(g, cfg.parallelism);

    // Unaccumulated mass S - S_k is the geometric tail n*c0*beta^{k+1}/(1-beta);
    // evaluated by repeated multiplication, never by subtracting the two
    // nearly-equal masses (which cancels catastrophically once k is large).
    double residual = static_cast<double>(n) * table.c0 * table.beta / (1.0 - table.beta);

    PageRankResult res;
    res.has_err = reference != nullptr;
    res.trace.reserve(static_cast<size_t>(M));

    const int64_t* offsets = g.offsets.data();
    const int64_t* nbrs = g.neighbors.data();
    const double* invdeg = g.inv_degree.data();

    for (int k = 1; k <= M; ++k) {
        const double ck = table.coeffs[static_cast<size_t>(k)];
        const double t0 = detail::cpu_ms();
        {
            const double* src = T_curr.data();
            double* ctb = contrib.data();
            detail::for_ranges(ranges, [&](VertexRange r) {
                for (int64_t v = r.begin; v < r.end; ++v) ctb[v] = src[v] * invdeg[v];
            });
        }
        {
            const double* ctb = contrib.data();
            const double* prev = T_prev.data();
            double* next = T_next.data();
            double* accp = acc.data();
            const bool first = k == 1;
            detail::for_ranges(ranges, [&](VertexRange r) {
                for (int64_t u = r.begin; u < r.end; ++u) {
                    double s = 0.0;
                    for (int64_t i = offsets[u]; i < offsets[u + 1]; ++i) s += ctb[nbrs[i]];
                    double t = first ? s : 2.0 * s - prev[u];
                    next[u] = t;
                    accp[u] += ck * t;
                }
            });
        }
        const double dt = detail::cpu_ms() - t0;
        T_prev.swap(T_curr);
        T_curr.swap(T_next);

        TraceRow row;
        row.k = k;
        row.c_k = ck;
        row.mass_T = kahan_sum(T_curr);
        row.S_k = kahan_sum(acc);
        residual *= table.beta;
        row.residual_mass = residual;
        row.elapsed_ms = dt;
        if (!std::isfinite(row.mass_T) || !std::isfinite(row.S_k))
            throw NumericError("non-finite value at round " + std::to_string(k));
        if (reference) {
            for (int64_t i = 0; i < n; ++i) scratch[i] = acc[i] / row.S_k;
            ErrorReport er = max_relative_error(scratch, *reference);
            row.err = er.max_rel_err;
            row.err_l1 = er.l1_err;
        }
        res.trace.push_back(row);
    }

    res.rounds = M;
    res.total_mass = res.trace.empty() ? kahan_sum(acc) : res.trace.back().S_k;
    if (!std::isfinite(res.total_mass) || res.total_mass <= 0.0)
        throw NumericError("normalization total is not positive and finite");
    res.ranks.resize(n);
    for (int64_t i = 0; i < n; ++i) res.ranks[i] = acc[i] / res.total_mass;
    return res;
}

IterationState init_state(const UndirectedGraph& g, double c0) {
    essential_check(g);
    IterationState st;
    st.T_prev = Vector::Ones(g.n);
    st.T_curr = Vector::Ones(g.n);
    st.T_next = Vector::Zero(g.n);
    st.acc = Vector::Constant(g.n, c0 / 2.0);
    st.k = 1;
    return st;
}

void generate_stage(const UndirectedGraph& g, IterationState& state) {
    const int64_t n = g.n;
    Vector contrib(n);
    for (int64_t v = 0; v < n; ++v)
        contrib[v] = state.T_curr[v] * g.inv_degree[static_cast<size_t>(v)];
    const bool first = state.k == 1;
    for (int64_t u = 0; u < n; ++u) {
        double s = 0.0;
        for (int64_t i = g.offsets[static_cast<size_t>(u)]; i < g.offsets[static_cast<size_t>(u) + 1]; ++i)
            s += contrib[g.neighbors[static_cast<size_t>(i)]];
        state.T_next[u] = first ? s : 2.0 * s - state.T_prev[u];
    }
}

void accumulate_stage(IterationState& state, double c_k) {
    for (int64_t i = 0; i < state.acc.size(); ++i) state.acc[i] += c_k * state.T_next[i];
}

}  // namespace chebpr
