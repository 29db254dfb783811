#include "chebpr/graph.hpp"

#include <algorithm>
#include <string>

#include "chebpr/errors.hpp"

namespace chebpr {

double kahan_sum(const double* x, int64_t n) {
    double sum = 0.0, comp = 0.0;
    for (int64_t i = 0; i < n; ++i) {
        double y = x[i] - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double kahan_sum(const Vector& x) { return kahan_sum(x.data(), x.size()); }

BuildResult build_graph(const std::vector<std::pair<int64_t, int64_t>>& edges,
                        const BuildOptions& opts) {
    int64_t n = std::max<int64_t>(opts.n_hint, 0);
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0) throw ValidationError("negative vertex id in edge list");
        n = std::max(n, std::max(a, b) + 1);
    }

    // Canonical form (min,max) so duplicates in either orientation collapse.
    std::vector<std::pair<int64_t, int64_t>> canon(edges.size());
    for (size_t i = 0; i < edges.size(); ++i)
        canon[i] = {std::min(edges[i].first, edges[i].second),
                    std::max(edges[i].first, edges[i].second)};
    std::sort(canon.begin(), canon.end());

    BuildResult res;
    if (opts.dedup) {
        auto last = std::unique(canon.begin(), canon.end());
        res.duplicates_removed = static_cast<int64_t>(canon.end() - last);
        canon.erase(last, canon.end());
    }

    std::vector<int64_t> deg(static_cast<size_t>(n), 0);
    for (const auto& [a, b] : canon) {
        deg[static_cast<size_t>(a)]++;
        if (b != a) deg[static_cast<size_t>(b)]++;
    }

    std::vector<int64_t> remap;
    if (opts.drop_isolated) {
        remap.resize(static_cast<size_t>(n), -1);
        int64_t next = 0;
        for (int64_t v = 0; v < n; ++v)
            if (deg[static_cast<size_t>(v)] > 0) remap[static_cast<size_t>(v)] = next++;
        res.isolated_dropped = n - next;
        if (res.isolated_dropped > 0) {
            for (auto& [a, b] : canon) {
                a = remap[static_cast<size_t>(a)];
                b = remap[static_cast<size_t>(b)];
            }
            n = next;
            deg.assign(static_cast<size_t>(n), 0);
            for (const auto& [a, b] : canon) {
                deg[static_cast<size_t>(a)]++;
                if (b != a) deg[static_cast<size_t>(b)]++;
            }
        }
    } else {
        for (int64_t v = 0; v < n; ++v)
            if (deg[static_cast<size_t>(v)] == 0)
                throw ValidationError("vertex " + std::to_string(v) +
                                      " is isolated (degree 0)");
    }

    UndirectedGraph g;
    g.n = n;
    g.m = static_cast<int64_t>(canon.size());
    g.multi = !opts.dedup;
    g.degrees = deg;
    g.offsets.resize(static_cast<size_t>(n) + 1);
    g.offsets[0] = 0;
    for (int64_t v = 0; v < n; ++v)
        g.offsets[static_cast<size_t>(v) + 1] = g.offsets[static_cast<size_t>(v)] + deg[static_cast<size_t>(v)];
    g.neighbors.resize(static_cast<size_t>(g.offsets[static_cast<size_t>(n)]));

    std::vector<int64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& [a, b] : canon) {
        g.neighbors[static_cast<size_t>(cursor[static_cast<size_t>(a)]++)] = b;
        if (b != a) g.neighbors[static_cast<size_t>(cursor[static_cast<size_t>(b)]++)] = a;
    }
    for (int64_t v = 0; v < n; ++v)
        std::sort(g.neighbors.begin() + g.offsets[static_cast<size_t>(v)],
                  g.neighbors.begin() + g.offsets[static_cast<size_t>(v) + 1]);

    g.inv_degree.resize(static_cast<size_t>(n));
    for (int64_t v = 0; v < n; ++v)
        g.inv_degree[static_cast<size_t>(v)] = 1.0 / static_cast<double>(deg[static_cast<size_t>(v)]);

    return {std::move(g), res.duplicates_removed, res.isolated_dropped};
}

Vector transition_apply(const UndirectedGraph& g, const Vector& x) {
    if (x.size() != g.n)
        throw std::invalid_argument("vector length " + std::to_string(x.size()) +
                                    " does not match vertex count " + std::to_string(g.n));
    // Two passes, same arithmetic as the solver kernels: per-source
    // contribution first, then per-vertex sums in neighbor storage order.
    Vector contrib(g.n);
    for (int64_t v = 0; v < g.n; ++v)
        contrib[v] = x[v] * g.inv_degree[static_cast<size_t>(v)];
    Vector y(g.n);
    for (int64_t u = 0; u < g.n; ++u) {
        double s = 0.0;
        for (int64_t i = g.offsets[static_cast<size_t>(u)]; i < g.offsets[static_cast<size_t>(u) + 1]; ++i)
            s += contrib[g.neighbors[static_cast<size_t>(i)]];
        y[u] = s;
    }
    return y;
}

GraphStats validate(const UndirectedGraph& g, int64_t duplicates_removed,
                    int64_t isolated_dropped) {
    if (g.n < 0) throw ValidationError("negative vertex count");
    if (g.offsets.size() != static_cast<size_t>(g.n) + 1)
        throw ValidationError("offsets length is not n+1");
    if (g.offsets[0] != 0) throw ValidationError("offsets must start at 0");
    if (g.degrees.size() != static_cast<size_t>(g.n))
        throw ValidationError("degrees length is not n");

    GraphStats st;
    st.n = g.n;
    st.m = g.m;
    st.duplicates_removed = duplicates_removed;
    st.isolated_dropped = isolated_dropped;
    st.min_degree = g.n > 0 ? g.degrees[0] : 0;
    st.max_degree = 0;

    int64_t entries = 0;
    for (int64_t v = 0; v < g.n; ++v) {
        int64_t lo = g.offsets[static_cast<size_t>(v)];
        int64_t hi = g.offsets[static_cast<size_t>(v) + 1];
        if (hi < lo) throw ValidationError("offsets not monotone at vertex " + std::to_string(v));
        int64_t d = hi - lo;
        if (d != g.degrees[static_cast<size_t>(v)])
            throw ValidationError("degree mismatch at vertex " + std::to_string(v));
        if (d < 1)
            throw ValidationError("vertex " + std::to_string(v) + " is isolated (degree 0)");
        st.min_degree = std::min(st.min_degree, d);
        st.max_degree = std::max(st.max_degree, d);
        entries += d;
        for (int64_t i = lo; i < hi; ++i) {
            int64_t w = g.neighbors[static_cast<size_t>(i)];
            if (w < 0 || w >= g.n)
                throw ValidationError("neighbor id out of range at vertex " + std::to_string(v));
            if (i > lo) {
                int64_t prev = g.neighbors[static_cast<size_t>(i) - 1];
                if (w < prev)
                    throw ValidationError("neighbor list not sorted at vertex " + std::to_string(v));
                if (!g.multi && w == prev)
                    throw ValidationError("duplicate neighbor at vertex " + std::to_string(v));
            }
            if (w == v) st.self_loops++;
        }
    }
    if (entries != static_cast<int64_t>(g.neighbors.size()))
        throw ValidationError("neighbors length inconsistent with offsets");
    if (entries != 2 * g.m - st.self_loops)
        throw ValidationError("edge count inconsistent with adjacency entries");

    // Symmetry: v in N(u) iff u in N(v) (with equal multiplicity when multi).
    for (int64_t u = 0; u < g.n; ++u) {
        for (int64_t i = g.offsets[static_cast<size_t>(u)]; i < g.offsets[static_cast<size_t>(u) + 1]; ++i) {
            int64_t v = g.neighbors[static_cast<size_t>(i)];
            auto lo = g.neighbors.begin() + g.offsets[static_cast<size_t>(v)];
            auto hi = g.neighbors.begin() + g.offsets[static_cast<size_t>(v) + 1];
            if (!std::binary_search(lo, hi, u))
                throw ValidationError("adjacency not symmetric: " + std::to_string(v) +
                                      " in N(" + std::to_string(u) + ") but not conversely");
        }
    }

    st.avg_degree = g.n > 0 ? static_cast<double>(g.m) / static_cast<double>(g.n) : 0.0;
    return st;
}

}  // namespace chebpr
