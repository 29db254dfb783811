#include "chebpr/generate.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "chebpr/errors.hpp"

namespace chebpr {

int64_t Rng::below(int64_t bound) {
    uint64_t b = static_cast<uint64_t>(bound);
    uint64_t limit = std::numeric_limits<uint64_t>::max() -
                     std::numeric_limits<uint64_t>::max() % b;
    for (;;) {
        uint64_t r = eng();
        if (r < limit) return static_cast<int64_t>(r % b);
    }
}

EdgeList ring_edges(int64_t n) {
    if (n < 2) throw DomainError("ring needs n >= 2");
    EdgeList edges;
    edges.reserve(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    if (n == 2) edges.pop_back();  // 0-1 and 1-0 are the same edge
    return edges;
}

EdgeList star_edges(int64_t n) {
    if (n < 2) throw DomainError("star needs n >= 2");
    EdgeList edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int64_t i = 1; i < n; ++i) edges.emplace_back(0, i);
    return edges;
}

EdgeList regular_edges(int64_t n, int64_t k) {
    if (n < 2) throw DomainError("regular needs n >= 2");
    if (k < 1 || k >= n) throw DomainError("regular needs 1 <= k < n");
    if (k % 2 == 1 && n % 2 == 1)
        throw DomainError("odd k requires even n (k*n must be even)");
    EdgeList edges;
    for (int64_t j = 1; j <= k / 2; ++j)
        for (int64_t i = 0; i < n; ++i) edges.emplace_back(i, (i + j) % n);
    if (k % 2 == 1)
        for (int64_t i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
    return edges;
}

EdgeList gnp_edges(int64_t n, double p, uint64_t seed) {
    if (n < 2) throw DomainError("gnp needs n >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("gnp needs p in [0,1]");
    Rng rng(seed);
    EdgeList edges;
    if (p > 0.0 && p < 1.0) {
        // Geometric skips over the strictly-lower-triangular pair sequence.
        double logq = std::log1p(-p);
        int64_t v = 1, w = -1;
        while (v < n) {
            double skip = std::floor(std::log1p(-rng.uniform01()) / logq);
            w += 1 + static_cast<int64_t>(skip);
            while (w >= v && v < n) {
                w -= v;
                ++v;
            }
            if (v < n) edges.emplace_back(v, w);
        }
    } else if (p == 1.0) {
        for (int64_t v = 1; v < n; ++v)
            for (int64_t w = 0; w < v; ++w) edges.emplace_back(v, w);
    }

    std::vector<bool> touched(static_cast<size_t>(n), false);
    for (const auto& [a, b] : edges) {
        touched[static_cast<size_t>(a)] = true;
        touched[static_cast<size_t>(b)] = true;
    }
    for (int64_t v = 0; v < n; ++v) {
        if (touched[static_cast<size_t>(v)]) continue;
        int64_t u = v;
        while (u == v) u = rng.below(n);
        edges.emplace_back(v, u);
        touched[static_cast<size_t>(u)] = true;
    }
    return edges;
}

void write_edge_list(const std::string& path, const EdgeList& edges,
                     const std::string& comment) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw ParseError("cannot write " + path);
    if (!comment.empty()) std::fprintf(f, "# %s\n", comment.c_str());
    for (const auto& [a, b] : edges)
        std::fprintf(f, "%lld %lld\n", static_cast<long long>(a), static_cast<long long>(b));
    if (std::fclose(f) != 0) throw ParseError("write failed for " + path);
}

}  // namespace chebpr
