#pragma once

// Shared fixtures for the test binaries: tiny named graphs, random-graph
// sampling, temp-file plumbing, and bitwise vector comparison.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chebpr/generate.hpp"
#include "chebpr/graph.hpp"

namespace testutil {

inline chebpr::UndirectedGraph make_graph(const chebpr::EdgeList& edges,
                                          const chebpr::BuildOptions& opts = {}) {
    return chebpr::build_graph(edges, opts).graph;
}

inline chebpr::EdgeList path_edges(int64_t n) {
    chebpr::EdgeList e;
    for (int64_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

inline chebpr::UndirectedGraph k2() { return make_graph({{0, 1}}); }
inline chebpr::UndirectedGraph path3() { return make_graph(path_edges(3)); }
inline chebpr::UndirectedGraph star4() { return make_graph({{0, 1}, {0, 2}, {0, 3}}); }
inline chebpr::UndirectedGraph cycle4() { return make_graph(chebpr::ring_edges(4)); }

inline bool connected(const chebpr::UndirectedGraph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(static_cast<size_t>(g.n), 0);
    std::queue<int64_t> q;
    q.push(0);
    seen[0] = 1;
    int64_t count = 1;
    while (!q.empty()) {
        int64_t u = q.front();
        q.pop();
        for (int64_t i = g.offsets[static_cast<size_t>(u)];
             i < g.offsets[static_cast<size_t>(u) + 1]; ++i) {
            int64_t v = g.neighbors[static_cast<size_t>(i)];
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == g.n;
}

// Connected G(n,p) sample: retries seeds until the draw is connected.
inline chebpr::UndirectedGraph random_connected(int64_t n, double p, uint64_t seed0) {
    for (uint64_t t = 0; t < 64; ++t) {
        auto g = make_graph(chebpr::gnp_edges(n, p, seed0 + t));
        if (connected(g)) return g;
    }
    throw std::runtime_error("no connected sample found");
}

inline bool bitwise_equal(const chebpr::Vector& a, const chebpr::Vector& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), sizeof(double) * static_cast<size_t>(a.size())) == 0;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "chebprXXXXXX").string();
        std::vector<char> buf(tmpl.begin(), tmpl.end());
        buf.push_back('\0');
        if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
        path = buf.data();
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace testutil
