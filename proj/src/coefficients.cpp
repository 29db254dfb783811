#include "chebpr/coefficients.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "chebpr/errors.hpp"

namespace chebpr {

namespace {

void check_c(double c) {
    if (!(c > 0.0 && c < 1.0))
        throw DomainError("damping factor must lie in (0,1), got " + std::to_string(c));
}

}  // namespace

double beta(double c) {
    check_c(c);
    return (1.0 - std::sqrt(1.0 - c * c)) / c;
}

double sigma(double c) {
    check_c(c);
    double s = std::sqrt(1.0 - c * c);
    double num = c * c - (2.0 - c) * (1.0 - s);
    double den = c * c - c * (1.0 - s);
    return num / den;
}

double err_bound(double c, int M) {
    check_c(c);
    if (M < 0) throw DomainError("iteration bound must be non-negative");
    double b = beta(c);
    return 2.0 * std::pow(b, M + 1) / (1.0 + b);
}

ApproxPlan plan_iterations(double c, double eps) {
    check_c(c);
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError("target error must lie in (0,1), got " + std::to_string(eps));
    ApproxPlan plan;
    plan.target_err = eps;
    int M = 0;
    // err_bound decays geometrically, so this terminates for any eps
    // representable as a positive double; the cap is pure paranoia.
    while (err_bound(c, M) > eps) {
        if (++M > 1000000) throw NumericError("iteration planning did not terminate");
    }
    plan.M = M;
    plan.predicted_err = err_bound(c, M);
    return plan;
}

CoefficientTable coefficients(double c, int M) {
    check_c(c);
    if (M < 0) throw DomainError("coefficient count must be non-negative");
    CoefficientTable t;
    t.c = c;
    t.beta = beta(c);
    t.c0 = 2.0 / std::sqrt(1.0 - c * c);
    t.coeffs.resize(static_cast<size_t>(M) + 1);
    double ck = t.c0;
    for (int k = 0; k <= M; ++k) {
        t.coeffs[static_cast<size_t>(k)] = ck;
        ck *= t.beta;
    }
    return t;
}

namespace {

struct Integrand {
    double c;
    int k;
    double operator()(double t) const { return std::cos(k * t) / (1.0 - c * std::cos(t)); }
};

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic adaptive Simpson with Richardson correction. evals guards the
// total work; the c=0.99 integrand has a sharp peak at t=0 and k=60 adds
// ~30 oscillation periods, both of which this handles with depth ~20.
double adaptive(const Integrand& f, double a, double fa, double b, double fb, double fm,
                double whole, double tol, int depth, int64_t& evals) {
    if (depth > 60 || (evals += 2) > 50000000)
        throw NumericError("coefficient quadrature did not converge for k=" + std::to_string(f.k));
    double m = 0.5 * (a + b);
    double fl = f(0.5 * (a + m));
    double fr = f(0.5 * (m + b));
    double left = simpson(a, fa, m, fm, fl);
    double right = simpson(m, fm, b, fb, fr);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive(f, a, fa, m, fm, fl, left, 0.5 * tol, depth + 1, evals) +
           adaptive(f, m, fm, b, fb, fr, right, 0.5 * tol, depth + 1, evals);
}

double coefficient_integral(double c, int k, double tol, int64_t& evals) {
    const double pi = 3.14159265358979323846;
    Integrand f{c, k};
    double fa = f(0.0);
    double fb = f(pi);
    double fm = f(0.5 * pi);
    double whole = simpson(0.0, fa, pi, fb, fm);
    double integral = adaptive(f, 0.0, fa, pi, fb, fm, whole, tol, 0, evals);
    return 2.0 / pi * integral;
}

}  // namespace

CoefficientTable coefficients_quadrature(double c, int M, double tol) {
    check_c(c);
    if (M < 0) throw DomainError("coefficient count must be non-negative");
    if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
    CoefficientTable t;
    t.c = c;
    t.beta = beta(c);
    t.coeffs.resize(static_cast<size_t>(M) + 1);
    int64_t evals = 0;
    for (int k = 0; k <= M; ++k)
        t.coeffs[static_cast<size_t>(k)] = coefficient_integral(c, k, tol, evals);
    t.c0 = t.coeffs[0];
    return t;
}

}  // namespace chebpr
