#pragma once

// Error metrics against a reference vector, the dense linear-solve oracle,
// and structural checks used by the test suites.

#include "chebpr/graph.hpp"

namespace chebpr {

struct ErrorReport {
    double max_rel_err = 0.0;  // max_i |est_i - ref_i| / ref_i
    double l1_err = 0.0;       // sum_i |est_i - ref_i|
    double mass_gap = 0.0;     // |sum(est) - 1|
};

// ref must be strictly positive (it is the denominator).
ErrorReport max_relative_error(const Vector& est, const Vector& ref);

// Solve (I - cP) x = (1-c)/n * e by dense partial-pivot elimination and
// normalize. Refuses n > 512 (CapacityError). The pre-normalization residual
// must come out below 1e-10 in the max norm or a NumericError is thrown.
Vector dense_direct_solve(const UndirectedGraph& g, double c);

// max_ij |S_ij - S_ji| for S_ij = a_ij / sqrt(d_i d_j). S is symmetric by
// construction from a valid adjacency, with identical floating operands on
// both sides, so the result is exactly 0; a nonzero certifies a broken
// graph. This also certifies P = A D^{-1} (similar to S) has a real
// spectrum. Dense materialization, refuses n > 2048.
double symmetry_similarity_check(const UndirectedGraph& g);

// |sum(vec) - expected|, compensated summation.
double mass_check(const Vector& vec, double expected);

}  // namespace chebpr
