#include "chebpr/metrics.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "chebpr/errors.hpp"

namespace chebpr {

ErrorReport max_relative_error(const Vector& est, const Vector& ref) {
    if (est.size() != ref.size())
        throw std::invalid_argument("estimate and reference lengths differ");
    ErrorReport rep;
    double l1 = 0.0, comp = 0.0;
    for (int64_t i = 0; i < ref.size(); ++i) {
        if (!(ref[i] > 0.0))
            throw DomainError("reference entry " + std::to_string(i) + " is not positive");
        double d = std::abs(est[i] - ref[i]);
        rep.max_rel_err = std::max(rep.max_rel_err, d / ref[i]);
        double y = d - comp;
        double t = l1 + y;
        comp = (t - l1) - y;
        l1 = t;
    }
    rep.l1_err = l1;
    rep.mass_gap = std::abs(kahan_sum(est) - 1.0);
    return rep;
}

Vector dense_direct_solve(const UndirectedGraph& g, double c) {
    if (g.n > 512)
        throw CapacityError("dense solve limited to n <= 512, got " + std::to_string(g.n));
    if (!(c > 0.0 && c < 1.0)) throw DomainError("damping factor must lie in (0,1)");
    const int64_t n = g.n;
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
    for (int64_t u = 0; u < n; ++u)
        for (int64_t i = g.offsets[static_cast<size_t>(u)]; i < g.offsets[static_cast<size_t>(u) + 1]; ++i) {
            int64_t v = g.neighbors[static_cast<size_t>(i)];
            A(u, v) -= c * g.inv_degree[static_cast<size_t>(v)];
        }
    Vector b = Vector::Constant(n, (1.0 - c) / static_cast<double>(n));
    Vector x = A.partialPivLu().solve(b);
    double resid = (A * x - b).lpNorm<Eigen::Infinity>();
    if (!(resid <= 1e-10))
        throw NumericError("dense solve residual " + std::to_string(resid) + " exceeds 1e-10");
    double total = kahan_sum(x);
    if (!std::isfinite(total) || total <= 0.0)
        throw NumericError("dense solve produced a non-normalizable vector");
    for (int64_t i = 0; i < n; ++i) x[i] /= total;
    return x;
}

double symmetry_similarity_check(const UndirectedGraph& g) {
    if (g.n > 2048)
        throw CapacityError("similarity check limited to n <= 2048, got " + std::to_string(g.n));
    const int64_t n = g.n;
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
    for (int64_t u = 0; u < n; ++u)
        for (int64_t i = g.offsets[static_cast<size_t>(u)]; i < g.offsets[static_cast<size_t>(u) + 1]; ++i) {
            int64_t v = g.neighbors[static_cast<size_t>(i)];
            double d = static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v));
            S(u, v) += 1.0 / std::sqrt(d);
        }
    double worst = 0.0;
    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = i + 1; j < n; ++j)
            worst = std::max(worst, std::abs(S(i, j) - S(j, i)));
    return worst;
}

double mass_check(const Vector& vec, double expected) {
    return std::abs(kahan_sum(vec) - expected);
}

}  // namespace chebpr
