#pragma once

// Chebyshev expansion coefficients of f(x) = 1/(1 - c*x) and the derived
// convergence quantities. The expansion is geometric:
//
//   c_k  = c0 * beta^k,   c0 = 2/sqrt(1-c^2),   beta = (1 - sqrt(1-c^2))/c
//
// which makes the truncation error after M terms a closed form as well.
// A quadrature evaluator of the defining integral
//   c_k = (2/pi) * Int_0^pi cos(k t)/(1 - c cos t) dt
// is provided as an independent cross-check of the closed form.

#include <vector>

namespace chebpr {

struct CoefficientTable {
    double c = 0.0;
    double beta = 0.0;
    double c0 = 0.0;
    std::vector<double> coeffs;  // c_0 .. c_M
};

struct ApproxPlan {
    int M = 0;
    double target_err = 0.0;
    double predicted_err = 0.0;
};

// Geometric ratio beta(c) in (0,1). Throws DomainError unless 0 < c < 1.
double beta(double c);

// Per-round shrink factor of the unaccumulated coefficient mass,
// sigma = (c^2 - (2-c)(1-s)) / (c^2 - c(1-s)) with s = sqrt(1-c^2).
// Algebraically equal to beta(c); evaluated independently so tests can
// assert the identity.
double sigma(double c);

// Relative mass left outside the first M+1 terms: 2*beta^(M+1)/(1+beta).
double err_bound(double c, int M);

// Smallest M with err_bound(c, M) <= eps.
ApproxPlan plan_iterations(double c, double eps);

// Closed-form table c_0..c_M.
CoefficientTable coefficients(double c, int M);

// Same table via adaptive Simpson quadrature of the defining integral.
// tol is the absolute tolerance per integral. Throws NumericError if the
// quadrature fails to converge within its subdivision budget.
CoefficientTable coefficients_quadrature(double c, int M, double tol);

}  // namespace chebpr
