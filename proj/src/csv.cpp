#include "chebpr/csv.hpp"

#include <cstdio>

#include "chebpr/errors.hpp"

namespace chebpr {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

struct File {
    std::FILE* f;
    std::string path;
    explicit File(const std::string& p) : f(std::fopen(p.c_str(), "wb")), path(p) {
        if (!f) throw ParseError("cannot write " + p);
    }
    ~File() {
        if (f) std::fclose(f);
    }
    void close() {
        if (std::fclose(f) != 0) {
            f = nullptr;
            throw ParseError("write failed for " + path);
        }
        f = nullptr;
    }
};

}  // namespace

void write_ranks_csv(const std::string& path, const Vector& ranks) {
    File out(path);
    std::fputs("vertex_id,rank\n", out.f);
    for (int64_t i = 0; i < ranks.size(); ++i)
        std::fprintf(out.f, "%lld,%s\n", static_cast<long long>(i), fmt17(ranks[i]).c_str());
    out.close();
}

void write_cpaa_trace_csv(const std::string& path, const std::vector<TraceRow>& trace,
                          bool with_err) {
    File out(path);
    std::fputs(with_err ? "k,c_k,S_k,residual_mass,elapsed_ms,err\n"
                        : "k,c_k,S_k,residual_mass,elapsed_ms\n",
               out.f);
    for (const TraceRow& r : trace) {
        std::fprintf(out.f, "%d,%s,%s,%s,%.3f", r.k, fmt17(r.c_k).c_str(), fmt17(r.S_k).c_str(),
                     fmt17(r.residual_mass).c_str(), r.elapsed_ms);
        if (with_err) std::fprintf(out.f, ",%s", fmt17(r.err).c_str());
        std::fputc('\n', out.f);
    }
    out.close();
}

void write_power_trace_csv(const std::string& path, const std::vector<TraceRow>& trace,
                           bool with_err) {
    File out(path);
    std::fputs(with_err ? "k,l1_change,elapsed_ms,err\n" : "k,l1_change,elapsed_ms\n", out.f);
    for (const TraceRow& r : trace) {
        std::fprintf(out.f, "%d,%s,%.3f", r.k, fmt17(r.l1_change).c_str(), r.elapsed_ms);
        if (with_err) std::fprintf(out.f, ",%s", fmt17(r.err).c_str());
        std::fputc('\n', out.f);
    }
    out.close();
}

void write_compare_csv(std::FILE* out, const std::vector<CompareRow>& rows) {
    std::fputs("algo,parallelism,rounds,err,l1,elapsed_ms\n", out);
    for (const CompareRow& r : rows)
        std::fprintf(out, "%s,%d,%d,%s,%s,%.3f\n", r.algo.c_str(), r.parallelism, r.rounds,
                     fmt17(r.err).c_str(), fmt17(r.l1).c_str(), r.elapsed_ms);
}

void write_compare_csv(const std::string& path, const std::vector<CompareRow>& rows) {
    File out(path);
    write_compare_csv(out.f, rows);
    out.close();
}

}  // namespace chebpr
