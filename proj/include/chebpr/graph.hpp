#pragma once

// Compressed sparse adjacency for undirected graphs and the column-stochastic
// transition operator y = P*x with P = A*D^{-1}, i.e.
//   y[u] = sum over v in N(u) of x[v]/deg(v).
//
// Graphs are immutable after construction and safe for concurrent reads.
// Every admitted graph has deg(v) >= 1 for all v (the operator is undefined
// on isolated vertices).

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace chebpr {

using Vector = Eigen::VectorXd;

struct UndirectedGraph {
    int64_t n = 0;  // vertex count
    int64_t m = 0;  // undirected edge count (self-loops count once)
    std::vector<int64_t> offsets;    // length n+1
    std::vector<int64_t> neighbors;  // length 2m - (self-loop count)
    std::vector<int64_t> degrees;    // length n, degrees[v] = offsets[v+1]-offsets[v]
    std::vector<double> inv_degree;  // 1.0/degrees[v], cached for the kernels
    bool multi = false;              // neighbor lists may hold repeated entries

    int64_t degree(int64_t v) const { return degrees[static_cast<size_t>(v)]; }
};

struct GraphStats {
    int64_t n = 0;
    int64_t m = 0;
    double avg_degree = 0.0;  // m/n
    int64_t min_degree = 0;
    int64_t max_degree = 0;
    int64_t self_loops = 0;
    int64_t duplicates_removed = 0;
    int64_t isolated_dropped = 0;
};

struct BuildOptions {
    bool dedup = true;           // collapse repeated edges (multi=false result)
    bool drop_isolated = false;  // drop zero-degree vertices, renumbering the rest
    int64_t n_hint = 0;          // lower bound on n (declared matrix dimension)
};

struct BuildResult {
    UndirectedGraph graph;
    int64_t duplicates_removed = 0;
    int64_t isolated_dropped = 0;
};

// Build from an (unordered, possibly repeated) undirected edge list. Vertex
// ids are taken literally: n = max id + 1, and ids that never appear become
// isolated vertices, which are an error unless opts.drop_isolated is set.
// A self-loop (v,v) contributes 1 to deg(v) and one entry to N(v).
BuildResult build_graph(const std::vector<std::pair<int64_t, int64_t>>& edges,
                        const BuildOptions& opts = {});

// y = P*x. Throws if x.size() != g.n.
Vector transition_apply(const UndirectedGraph& g, const Vector& x);

// Recheck every structural invariant (offsets shape, degree consistency,
// sorted/dedup'd neighbor lists, symmetry, positive degrees) and return
// summary statistics. Throws ValidationError on any violation.
// duplicates_removed/isolated_dropped are taken from the builder's record.
GraphStats validate(const UndirectedGraph& g, int64_t duplicates_removed = 0,
                    int64_t isolated_dropped = 0);

// Compensated serial sum. Used for every diagnostic total so results are
// identical regardless of worker count and accurate at n=1e6 scale.
double kahan_sum(const double* x, int64_t n);
double kahan_sum(const Vector& x);

}  // namespace chebpr
