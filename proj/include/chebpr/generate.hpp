#pragma once

// Deterministic synthetic graph generators. For a fixed seed the edge
// sequence (and hence the written file) is byte-identical across runs; the
// RNG primitives are hand-rolled on top of mt19937_64 because the standard
// distributions are not bit-stable across library implementations.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace chebpr {

using EdgeList = std::vector<std::pair<int64_t, int64_t>>;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    // Uniform in [0, bound) by rejection, bias-free.
    int64_t below(int64_t bound);
};

// Cycle 0-1-...-(n-1)-0. n >= 2.
EdgeList ring_edges(int64_t n);

// Center 0 joined to 1..n-1. n >= 2.
EdgeList star_edges(int64_t n);

// k-regular circulant: offsets 1..k/2, plus the antipodal offset n/2 when k
// is odd (which requires even n). Deterministic, no seed. 1 <= k < n.
EdgeList regular_edges(int64_t n, int64_t k);

// Erdos-Renyi G(n,p) via geometric skipping, symmetrized by construction.
// Vertices left isolated by the draw get one edge to a random other vertex
// so the result always passes validation. n >= 2, p in [0,1].
EdgeList gnp_edges(int64_t n, double p, uint64_t seed);

// Plain "a b" lines, one edge per line, with a single leading comment line
// recording the generator call.
void write_edge_list(const std::string& path, const EdgeList& edges,
                     const std::string& comment);

}  // namespace chebpr
