#include "chebpr/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "chebpr/errors.hpp"

namespace chebpr {

namespace {

const char* skip_ws(const char* p, const char* end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    return p;
}

bool parse_int(const char*& p, const char* end, int64_t& out) {
    p = skip_ws(p, end);
    auto [next, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{} || next == p) return false;
    p = next;
    return true;
}

bool blank(const char* p, const char* end) { return skip_ws(p, end) == end; }

LoadedGraph finish(std::vector<std::pair<int64_t, int64_t>>&& edges, const LoadOptions& opts,
                   int64_t n_hint = 0) {
    BuildOptions bopts;
    bopts.dedup = opts.dedup;
    bopts.drop_isolated = opts.drop_isolated;
    bopts.n_hint = n_hint;
    BuildResult b = build_graph(edges, bopts);
    if (b.isolated_dropped > 0)
        std::fprintf(stderr, "warning: dropped %lld isolated vertices\n",
                     static_cast<long long>(b.isolated_dropped));
    LoadedGraph lg;
    lg.stats = validate(b.graph, b.duplicates_removed, b.isolated_dropped);
    lg.graph = std::move(b.graph);
    return lg;
}

}  // namespace

LoadedGraph load_edge_list(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::pair<int64_t, int64_t>> edges;
    std::string line;
    int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const char* p = line.data();
        const char* end = p + line.size();
        p = skip_ws(p, end);
        if (p == end || *p == '#') continue;
        int64_t a, b;
        if (!parse_int(p, end, a) || !parse_int(p, end, b) || !blank(p, end) || a < 0 || b < 0)
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected two non-negative vertex ids");
        edges.emplace_back(a, b);
    }
    return finish(std::move(edges), opts);
}

LoadedGraph load_matrix_market(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty file");
    int64_t lineno = 1;

    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    for (auto* s : {&object, &format, &field, &symmetry})
        std::transform(s->begin(), s->end(), s->begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (banner != "%%MatrixMarket" || object != "matrix")
        throw ParseError(path + ": not a Matrix Market matrix file");
    if (format != "coordinate")
        throw ParseError(path + ": unsupported format '" + format + "' (coordinate only)");
    if (field != "pattern" && field != "real")
        throw ParseError(path + ": unsupported field '" + field + "' (pattern or real only)");
    if (symmetry != "symmetric" && symmetry != "general")
        throw ParseError(path + ": unsupported symmetry '" + symmetry +
                         "' (symmetric or general only)");
    bool has_weight = field == "real";
    bool symmetric = symmetry == "symmetric";

    // Size line, after any % comments.
    int64_t rows = 0, cols = 0, nnz = 0;
    for (;;) {
        if (!std::getline(in, line)) throw ParseError(path + ": missing size line");
        ++lineno;
        const char* p = line.data();
        const char* end = p + line.size();
        p = skip_ws(p, end);
        if (p == end || *p == '%') continue;
        if (!parse_int(p, end, rows) || !parse_int(p, end, cols) || !parse_int(p, end, nnz) ||
            !blank(p, end))
            throw ParseError(path + ":" + std::to_string(lineno) + ": malformed size line");
        break;
    }
    if (rows != cols)
        throw ValidationError(path + ": adjacency matrix must be square, got " +
                              std::to_string(rows) + "x" + std::to_string(cols));

    bool warned_weights = false;
    std::vector<std::pair<int64_t, int64_t>> entries;
    entries.reserve(static_cast<size_t>(nnz));
    for (int64_t k = 0; k < nnz; ++k) {
        if (!std::getline(in, line))
            throw ParseError(path + ": expected " + std::to_string(nnz) + " entries, got " +
                             std::to_string(k));
        ++lineno;
        const char* p = line.data();
        const char* end = p + line.size();
        int64_t i, j;
        if (!parse_int(p, end, i) || !parse_int(p, end, j))
            throw ParseError(path + ":" + std::to_string(lineno) + ": malformed entry");
        if (has_weight) {
            p = skip_ws(p, end);
            if (p == end)
                throw ParseError(path + ":" + std::to_string(lineno) + ": missing weight");
            double w;
            auto [next, ec] = std::from_chars(p, end, w);
            if (ec != std::errc{})
                throw ParseError(path + ":" + std::to_string(lineno) + ": malformed weight");
            p = next;
            if (!warned_weights) {
                std::fprintf(stderr, "warning: %s: real weights ignored, using pattern only\n",
                             path.c_str());
                warned_weights = true;
            }
        }
        if (!blank(p, end))
            throw ParseError(path + ":" + std::to_string(lineno) + ": trailing characters");
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw ParseError(path + ":" + std::to_string(lineno) + ": index out of range");
        entries.emplace_back(i - 1, j - 1);
    }

    std::vector<std::pair<int64_t, int64_t>> edges;
    if (symmetric || opts.symmetrize) {
        edges = std::move(entries);
    } else {
        // general: every off-diagonal (i,j) needs its mirror (j,i).
        std::vector<std::pair<int64_t, int64_t>> sorted = entries;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [i, j] : entries) {
            if (i == j) continue;
            if (!std::binary_search(sorted.begin(), sorted.end(), std::make_pair(j, i)))
                throw ValidationError(path + ": general matrix is not symmetric: entry (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      ") has no (" + std::to_string(j + 1) + "," +
                                      std::to_string(i + 1) + ") counterpart" +
                                      " (use symmetrize to force)");
        }
        // Keep one orientation so the mirror pair maps to a single edge and
        // only genuine extra copies count as duplicates.
        for (const auto& [i, j] : entries)
            if (i >= j) edges.emplace_back(i, j);
    }

    // The declared dimension is a lower bound on n so that dimension-declared
    // vertices without entries surface as isolated-vertex diagnostics.
    return finish(std::move(edges), opts, rows);
}

}  // namespace chebpr
