#pragma once

// Graph file loaders.
//
// Edge list: UTF-8 text, one edge per line as two whitespace-separated
// non-negative decimal integers; lines starting with '#' and blank lines are
// ignored. Vertex ids are literal (n = max id + 1).
//
// Matrix Market: "%%MatrixMarket matrix coordinate {pattern|real}
// {symmetric|general}", 1-based indices converted to 0-based. real weights
// are ignored with a warning. symmetric files store each off-diagonal entry
// once; general files must contain both (i,j) and (j,i) for every
// off-diagonal entry unless opts.symmetrize is set.

#include <string>

#include "chebpr/graph.hpp"

namespace chebpr {

struct LoadOptions {
    bool dedup = true;
    bool drop_isolated = false;
    bool symmetrize = false;  // Matrix Market general files only
};

struct LoadedGraph {
    UndirectedGraph graph;
    GraphStats stats;  // validated stats, including duplicate/dropped counts
};

LoadedGraph load_edge_list(const std::string& path, const LoadOptions& opts = {});
LoadedGraph load_matrix_market(const std::string& path, const LoadOptions& opts = {});

}  // namespace chebpr
