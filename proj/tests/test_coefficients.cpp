#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chebpr/coefficients.hpp"
#include "chebpr/errors.hpp"

using namespace chebpr;

namespace {

// Reference values computed independently at 40-digit precision from the
// exact double value of c.
struct Frozen {
    double c, beta, c0, c1, c5;
};
const Frozen kFrozen[] = {
    {0.50, 0.26794919243112271, 2.3094010767585031, 0.61880215351700612, 0.0031897865781070092},
    {0.85, 0.5567262498321918, 3.7966319830099957, 2.1136846858941127, 0.20305187144012912},
    {0.99, 0.86760872747812232, 14.177624100166712, 12.3006304042088, 6.9698433557705565},
};

bool close_rel(double got, double want, double rel) {
    return std::abs(got - want) <= rel * std::abs(want);
}

}  // namespace

TEST_CASE("beta matches the high-precision table") {
    for (const Frozen& f : kFrozen) CHECK(close_rel(beta(f.c), f.beta, 1e-13));
}

TEST_CASE("beta domain and limits") {
    CHECK_THROWS_AS(beta(0.0), DomainError);
    CHECK_THROWS_AS(beta(1.0), DomainError);
    CHECK_THROWS_AS(beta(-0.3), DomainError);
    CHECK_THROWS_AS(beta(1.7), DomainError);
    double prev = 0.0;
    for (double c = 0.05; c < 0.96; c += 0.05) {
        double b = beta(c);
        CHECK(b > prev);
        CHECK(b < 1.0);
        prev = b;
    }
    CHECK(beta(1e-8) >= 0.0);
    CHECK(beta(1e-8) < 1e-7);
}

TEST_CASE("sigma equals beta on a grid and reproduces 0.5567") {
    CHECK(std::abs(sigma(0.85) - 0.5567) <= 5e-5);
    CHECK(std::abs(sigma(0.5) - 0.267949) <= 1e-6);
    for (int i = 1; i <= 19; ++i) {
        double c = 0.05 * i;
        CHECK(std::abs(sigma(c) - beta(c)) <= 1e-12);
        CHECK(sigma(c) < c);
        CHECK(sigma(c) > 0.0);
    }
    CHECK_THROWS_AS(sigma(0.0), DomainError);
    CHECK_THROWS_AS(sigma(1.0), DomainError);
}

TEST_CASE("coefficient table is geometric, positive, decreasing") {
    for (const Frozen& f : kFrozen) {
        CoefficientTable t = coefficients(f.c, 60);
        CHECK(t.c == f.c);
        CHECK(t.coeffs.size() == 61);
        CHECK(close_rel(t.beta, f.beta, 1e-13));
        CHECK(close_rel(t.c0, f.c0, 1e-13));
        CHECK(close_rel(t.coeffs[0], f.c0, 1e-13));
        CHECK(close_rel(t.coeffs[1], f.c1, 1e-13));
        CHECK(close_rel(t.coeffs[5], f.c5, 1e-13));
        for (size_t k = 0; k + 1 < t.coeffs.size(); ++k) {
            CHECK(t.coeffs[k] > 0.0);
            CHECK(t.coeffs[k + 1] < t.coeffs[k]);
        }
        // constant ratio c_{k+1}/c_k = beta
        CHECK(close_rel(t.coeffs[1] / t.coeffs[0], t.beta, 1e-14));
        for (size_t k = 1; k + 1 < t.coeffs.size(); ++k)
            CHECK(close_rel(t.coeffs[k + 1] / t.coeffs[k], t.beta, 1e-12));
    }
}

TEST_CASE("three-term recurrence holds for interior k") {
    for (const Frozen& f : kFrozen) {
        CoefficientTable t = coefficients(f.c, 60);
        for (size_t k = 1; k + 1 < t.coeffs.size(); ++k) {
            double lhs = t.coeffs[k - 1] + t.coeffs[k + 1];
            double rhs = (2.0 / f.c) * t.coeffs[k];
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
        }
    }
}

TEST_CASE("coefficients edge cases and domain errors") {
    CoefficientTable t = coefficients(0.85, 0);
    CHECK(t.coeffs.size() == 1);
    CHECK(close_rel(t.coeffs[0], 3.7966319830099957, 1e-13));
    CHECK_THROWS_AS(coefficients(0.85, -1), DomainError);
    CHECK_THROWS_AS(coefficients(0.0, 5), DomainError);
    CHECK_THROWS_AS(coefficients(1.0, 5), DomainError);
}

TEST_CASE("err_bound frozen values and monotone decay") {
    CHECK(close_rel(err_bound(0.85, 20), 5.8518532208583129e-06, 1e-12));
    CHECK(err_bound(0.85, 20) < 1e-4);
    CHECK(close_rel(err_bound(0.85, 0), 0.71525260127425028, 1e-12));
    double prev = 1.0;
    bool hit_zero = false;
    for (int M = 0; M <= 2000; ++M) {
        double e = err_bound(0.85, M);
        CHECK(e >= 0.0);
        CHECK(e < 1.0);
        if (hit_zero) {
            CHECK(e == 0.0);
        } else if (e == 0.0) {
            hit_zero = true;
        } else if (prev > 1e-300) {
            CHECK(e < prev);
        } else {
            // gradual underflow: consecutive bounds can round to the same subnormal
            CHECK(e <= prev);
        }
        prev = e;
    }
    CHECK(hit_zero);  // geometric decay underflows well before M=2000
    CHECK_THROWS_AS(err_bound(0.85, -1), DomainError);
    CHECK_THROWS_AS(err_bound(1.2, 3), DomainError);
}

TEST_CASE("plan_iterations picks the minimal round count") {
    CHECK(plan_iterations(0.85, 1e-3).M == 12);
    CHECK(plan_iterations(0.85, 1e-4).M == 16);
    CHECK(plan_iterations(0.85, 1e-5).M == 20);
    CHECK(plan_iterations(0.85, 1e-10).M == 39);
    CHECK(plan_iterations(0.85, 0.99).M == 0);  // 2*beta/(1+beta) < 0.99 already

    for (double c : {0.3, 0.5, 0.85, 0.95}) {
        for (double eps : {1e-2, 1e-4, 1e-8, 1e-12}) {
            ApproxPlan plan = plan_iterations(c, eps);
            CHECK(plan.target_err == eps);
            CHECK(plan.predicted_err == err_bound(c, plan.M));
            CHECK(plan.predicted_err <= eps);
            if (plan.M >= 1) CHECK(err_bound(c, plan.M - 1) > eps);
        }
    }
    CHECK_THROWS_AS(plan_iterations(0.85, 0.0), DomainError);
    CHECK_THROWS_AS(plan_iterations(0.85, 1.0), DomainError);
    CHECK_THROWS_AS(plan_iterations(0.85, -1e-3), DomainError);
    CHECK_THROWS_AS(plan_iterations(0.0, 1e-3), DomainError);
}

TEST_CASE("quadrature evaluation cross-checks the closed form") {
    for (double c : {0.5, 0.85, 0.99}) {
        CoefficientTable closed = coefficients(c, 20);
        CoefficientTable quad = coefficients_quadrature(c, 20, 1e-10);
        CHECK(quad.coeffs.size() == closed.coeffs.size());
        for (size_t k = 0; k < closed.coeffs.size(); ++k)
            CHECK(std::abs(quad.coeffs[k] - closed.coeffs[k]) <= 1e-9);
    }
    CoefficientTable q85 = coefficients_quadrature(0.85, 5, 1e-10);
    CHECK(std::abs(q85.coeffs[0] - 3.7966319830099957) <= 1e-9);
    CHECK(std::abs(q85.coeffs[5] - 0.20305187144012912) <= 1e-9);
    CoefficientTable q99 = coefficients_quadrature(0.99, 0, 1e-10);
    CHECK(std::abs(q99.coeffs[0] - 14.177624100166712) <= 1e-6);
}

TEST_CASE("quadrature guards its domain and budget") {
    CHECK_THROWS_AS(coefficients_quadrature(0.85, 3, 0.0), DomainError);
    CHECK_THROWS_AS(coefficients_quadrature(0.85, 3, -1e-9), DomainError);
    CHECK_THROWS_AS(coefficients_quadrature(0.85, -2, 1e-9), DomainError);
    CHECK_THROWS_AS(coefficients_quadrature(1.5, 3, 1e-9), DomainError);
    // A tolerance below what subdivision can ever certify must fail loudly,
    // not spin or return garbage.
    CHECK_THROWS_AS(coefficients_quadrature(0.85, 0, 1e-300), NumericError);
}
