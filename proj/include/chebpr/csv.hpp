#pragma once

// CSV serialization. Comma-separated with a header row; every value that is
// data (ranks, coefficients, masses, errors) is printed with 17 significant
// digits so it round-trips to the exact double; timing columns are cosmetic.

#include <cstdio>
#include <string>
#include <vector>

#include "chebpr/compare.hpp"
#include "chebpr/cpaa.hpp"

namespace chebpr {

// Shortest-exact 17-significant-digit form ("%.17g").
std::string fmt17(double v);

// vertex_id,rank, sorted by vertex id.
void write_ranks_csv(const std::string& path, const Vector& ranks);

// k,c_k,S_k,residual_mass,elapsed_ms[,err]
void write_cpaa_trace_csv(const std::string& path, const std::vector<TraceRow>& trace,
                          bool with_err);

// k,l1_change,elapsed_ms[,err]
void write_power_trace_csv(const std::string& path, const std::vector<TraceRow>& trace,
                           bool with_err);

// algo,parallelism,rounds,err,l1,elapsed_ms
void write_compare_csv(const std::string& path, const std::vector<CompareRow>& rows);
void write_compare_csv(std::FILE* out, const std::vector<CompareRow>& rows);

}  // namespace chebpr
