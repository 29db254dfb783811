#pragma once

// Chebyshev-accelerated PageRank.
//
// The rank vector pi = (1-c)(I-cP)^{-1} p (p uniform) is the normalization
// of sum_k c_k T_k(P) p with the geometric Chebyshev coefficients from
// coefficients.hpp. Each round applies the T-recurrence
//   T_{k+1}(P)p = 2 P T_k(P)p - T_{k-1}(P)p            (round 1: T_1 = P T_0)
// to a mass vector initialized to all ones (n*p), and accumulates
// acc += c_k * T_k, starting from acc = (c0/2) * T_0. After M rounds the
// estimate is acc / sum(acc). The number of rounds for a target error comes
// from plan_iterations, not from a residual test: the error after M rounds
// is the closed form 2*beta^{M+1}/(1+beta) regardless of the graph.
//
// Execution is bulk-synchronous: K workers own degree-balanced contiguous
// vertex ranges; each round every worker reads only the previous round's
// buffers and writes only its own slice, and every per-vertex sum runs in
// neighbor storage order. Worker count therefore cannot change any rounding,
// and results are bit-identical for every K.

#include <vector>

#include "chebpr/graph.hpp"

namespace chebpr {

struct SolverConfig {
    double c = 0.85;
    // Exactly one of rounds/eps must be set. eps is resolved to a round
    // count via plan_iterations. The resolved count is clamped to
    // max_rounds: past ~50 rounds the update falls below 64-bit resolution.
    int rounds = -1;
    double eps = -1.0;
    int max_rounds = 60;
    int parallelism = 1;  // K workers over degree-balanced contiguous ranges
};

struct TraceRow {
    int k = 0;
    double c_k = 0.0;            // coefficient applied this round
    double S_k = 0.0;            // measured accumulated mass, sum(acc)
    double residual_mass = 0.0;  // mass not yet accumulated, n*c0*beta^(k+1)/(1-beta)
    double l1_change = 0.0;      // power method only: sum |x_k - x_{k-1}|
    double elapsed_ms = 0.0;     // process CPU time of this round's kernel
    double mass_T = 0.0;         // measured sum(T_k) (cpaa, conserved at n)
                                 // or sum(x_k) (power, conserved at 1)
    double err = 0.0;            // max relative error vs reference, if tracked
    double err_l1 = 0.0;         // L1 error vs reference, if tracked
};

struct PageRankResult {
    Vector ranks;
    std::vector<TraceRow> trace;
    int rounds = 0;
    bool has_err = false;  // trace err/err_l1 columns populated
    double total_mass = 0.0;  // normalization denominator (cpaa)
};

// Contiguous [begin, end) vertex ranges with balanced degree sums: the j-th
// cut sits at the degree-prefix closest to j/K of the total. Empty ranges
// are legal when K > n.
struct VertexRange {
    int64_t begin = 0;
    int64_t end = 0;
};
std::vector<VertexRange> partition_vertices(const UndirectedGraph& g, int K);

// pi = v / sum(v). Throws NumericError if the total is non-finite or <= 0.
Vector normalize(const Vector& v);

// Full run. If reference is non-null, every trace row carries the max
// relative error and L1 error of the running normalized estimate against
// it (used by the comparison protocol; costs O(n) per round).
PageRankResult run_cpaa(const UndirectedGraph& g, const SolverConfig& cfg,
                        const Vector* reference = nullptr);

// Single-round pieces of the loop above, exposed for direct testing. The
// arithmetic is identical to the fused kernel inside run_cpaa.
struct IterationState {
    Vector T_prev, T_curr, T_next, acc;
    int k = 1;
};
IterationState init_state(const UndirectedGraph& g, double c0);
void generate_stage(const UndirectedGraph& g, IterationState& state);
void accumulate_stage(IterationState& state, double c_k);

}  // namespace chebpr
