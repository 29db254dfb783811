// chebpr command-line front end: graph generation, solver runs, algorithm
// comparison, coefficient dumps. All outputs are CSV (see csv.hpp); exit
// codes: 0 success, 1 input/validation problem, 2 numeric failure.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chebpr/coefficients.hpp"
#include "chebpr/compare.hpp"
#include "chebpr/cpaa.hpp"
#include "chebpr/csv.hpp"
#include "chebpr/errors.hpp"
#include "chebpr/generate.hpp"
#include "chebpr/graph_io.hpp"
#include "chebpr/power.hpp"

namespace {

struct LoadFlags {
    std::string input;
    std::string format = "edgelist";
    bool drop_isolated = false;
    bool symmetrize = false;
    bool dedup = true;
    bool keep_multi = false;
};

void add_load_flags(CLI::App* cmd, LoadFlags& lf) {
    cmd->add_option("--input", lf.input, "graph file to load")->required();
    cmd->add_option("--format", lf.format, "input format")
        ->check(CLI::IsMember({"edgelist", "mtx"}))
        ->capture_default_str();
    cmd->add_flag("--drop-isolated", lf.drop_isolated,
                  "drop zero-degree vertices (renumbers the rest) instead of failing");
    cmd->add_flag("--symmetrize", lf.symmetrize,
                  "treat a general Matrix Market file as undirected even if one-sided");
    auto* dedup = cmd->add_flag("--dedup", lf.dedup, "collapse duplicate edges (default)");
    cmd->add_flag("--keep-multi", lf.keep_multi,
                  "keep duplicate edges as multiplicity instead of collapsing")
        ->excludes(dedup);
}

chebpr::LoadedGraph load(const LoadFlags& lf) {
    chebpr::LoadOptions opts;
    opts.dedup = !lf.keep_multi;
    opts.drop_isolated = lf.drop_isolated;
    opts.symmetrize = lf.symmetrize;
    if (lf.format == "mtx") return chebpr::load_matrix_market(lf.input, opts);
    return chebpr::load_edge_list(lf.input, opts);
}

double trace_elapsed_ms(const std::vector<chebpr::TraceRow>& trace) {
    double total = 0.0;
    for (const auto& r : trace) total += r.elapsed_ms;
    return total;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev-accelerated PageRank for undirected graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic graph as an edge list");
    std::string gen_model, gen_output;
    int64_t gen_n = 0, gen_k = 0;
    double gen_p = -1.0, gen_avg_deg = -1.0;
    uint64_t gen_seed = 1;
    gen->add_option("--model", gen_model, "graph model")
        ->check(CLI::IsMember({"ring", "star", "regular", "gnp"}))
        ->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--k", gen_k, "degree (regular model)");
    auto* opt_p = gen->add_option("--p", gen_p, "edge probability (gnp model)");
    gen->add_option("--avg-deg", gen_avg_deg, "expected vertex degree (gnp model), p = avg/(n-1)")
        ->excludes(opt_p);
    gen->add_option("--seed", gen_seed, "RNG seed (gnp model)")->capture_default_str();
    gen->add_option("--output", gen_output, "edge-list file to write")->required();

    // run
    auto* run = app.add_subcommand("run", "run one solver and write ranks (and a trace)");
    LoadFlags run_load;
    add_load_flags(run, run_load);
    std::string run_algo, run_output, run_trace;
    double run_c = 0.85, run_eps = -1.0;
    int run_rounds = -1, run_parallelism = 1, run_max_rounds = 60;
    run->add_option("--algo", run_algo, "algorithm")
        ->check(CLI::IsMember({"cpaa", "power"}))
        ->required();
    run->add_option("--c", run_c, "damping factor")->capture_default_str();
    auto* opt_eps = run->add_option("--eps", run_eps, "target error (resolved to a round count)");
    run->add_option("--rounds", run_rounds, "fixed round count")->excludes(opt_eps);
    run->add_option("--parallelism", run_parallelism, "worker count")->capture_default_str();
    run->add_option("--max-rounds", run_max_rounds, "round cap / budget")->capture_default_str();
    run->add_option("--output", run_output, "ranks CSV path");
    run->add_option("--trace", run_trace, "per-round trace CSV path");

    // compare
    auto* cmp = app.add_subcommand("compare", "rounds-to-error comparison of both algorithms");
    LoadFlags cmp_load;
    add_load_flags(cmp, cmp_load);
    std::string cmp_output;
    double cmp_c = 0.85, cmp_eps = 1e-3;
    std::vector<int> cmp_parallelism = {1};
    int cmp_max_rounds = 60;
    cmp->add_option("--c", cmp_c, "damping factor")->capture_default_str();
    cmp->add_option("--eps", cmp_eps, "target max relative error")->capture_default_str();
    cmp->add_option("--parallelism", cmp_parallelism, "worker counts to sweep")
        ->delimiter(',')
        ->capture_default_str();
    cmp->add_option("--max-rounds", cmp_max_rounds, "round budget for the cpaa crossing search")
        ->capture_default_str();
    cmp->add_option("--output", cmp_output, "comparison CSV path (stdout if omitted)");

    // coeffs
    auto* coef = app.add_subcommand("coeffs", "dump the coefficient table as CSV");
    std::string coef_output;
    double coef_c = 0.85, coef_tol = 1e-10;
    int coef_max_k = 60;
    bool coef_quad = false;
    coef->add_option("--c", coef_c, "damping factor")->capture_default_str();
    coef->add_option("--max-k", coef_max_k, "largest k")->capture_default_str();
    coef->add_flag("--quadrature-check", coef_quad,
                   "add a quadrature column and report the max deviation");
    coef->add_option("--quad-tol", coef_tol, "quadrature tolerance")->capture_default_str();
    coef->add_option("--output", coef_output, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);

        if (*gen) {
            if (gen_model == "gnp") {
                if (gen_p < 0.0 && gen_avg_deg < 0.0)
                    throw chebpr::DomainError("gnp needs --p or --avg-deg");
                double p = gen_p >= 0.0 ? gen_p
                                        : gen_avg_deg / static_cast<double>(gen_n - 1);
                auto edges = chebpr::gnp_edges(gen_n, p, gen_seed);
                chebpr::write_edge_list(gen_output, edges,
                                        "chebpr gen model=gnp n=" + std::to_string(gen_n) +
                                            " p=" + chebpr::fmt17(p) +
                                            " seed=" + std::to_string(gen_seed));
            } else if (gen_model == "ring") {
                chebpr::write_edge_list(gen_output, chebpr::ring_edges(gen_n),
                                        "chebpr gen model=ring n=" + std::to_string(gen_n));
            } else if (gen_model == "star") {
                chebpr::write_edge_list(gen_output, chebpr::star_edges(gen_n),
                                        "chebpr gen model=star n=" + std::to_string(gen_n));
            } else {
                if (gen_k < 1) throw chebpr::DomainError("regular needs --k >= 1");
                chebpr::write_edge_list(gen_output, chebpr::regular_edges(gen_n, gen_k),
                                        "chebpr gen model=regular n=" + std::to_string(gen_n) +
                                            " k=" + std::to_string(gen_k));
            }
            std::printf("wrote %s\n", gen_output.c_str());
        }

        if (*run) {
            if (run_eps <= 0.0 && run_rounds < 0)
                throw chebpr::DomainError("set one of --eps or --rounds");
            chebpr::LoadedGraph lg = load(run_load);
            chebpr::PageRankResult res;
            if (run_algo == "cpaa") {
                chebpr::SolverConfig cfg;
                cfg.c = run_c;
                cfg.rounds = run_rounds;
                cfg.eps = run_eps;
                cfg.max_rounds = run_max_rounds;
                cfg.parallelism = run_parallelism;
                res = chebpr::run_cpaa(lg.graph, cfg);
                if (!run_trace.empty())
                    chebpr::write_cpaa_trace_csv(run_trace, res.trace, res.has_err);
            } else {
                chebpr::PowerConfig cfg;
                cfg.c = run_c;
                cfg.rounds = run_rounds;
                cfg.tol = run_eps;
                cfg.max_rounds = run_max_rounds;
                cfg.parallelism = run_parallelism;
                res = chebpr::run_power(lg.graph, cfg);
                if (!run_trace.empty())
                    chebpr::write_power_trace_csv(run_trace, res.trace, res.has_err);
            }
            if (!run_output.empty()) chebpr::write_ranks_csv(run_output, res.ranks);
            std::printf("n=%lld m=%lld algo=%s rounds=%d elapsed_ms=%.3f\n",
                        static_cast<long long>(lg.stats.n), static_cast<long long>(lg.stats.m),
                        run_algo.c_str(), res.rounds, trace_elapsed_ms(res.trace));
        }

        if (*cmp) {
            chebpr::LoadedGraph lg = load(cmp_load);
            chebpr::CompareOptions opts;
            opts.c = cmp_c;
            opts.eps = cmp_eps;
            opts.parallelism = cmp_parallelism;
            opts.cpaa_budget = cmp_max_rounds;
            std::fprintf(stderr, "comparing on n=%lld m=%lld (210-round reference)\n",
                         static_cast<long long>(lg.stats.n),
                         static_cast<long long>(lg.stats.m));
            auto rows = chebpr::compare_algorithms(lg.graph, opts);
            if (cmp_output.empty())
                chebpr::write_compare_csv(stdout, rows);
            else
                chebpr::write_compare_csv(cmp_output, rows);
        }

        if (*coef) {
            auto table = chebpr::coefficients(coef_c, coef_max_k);
            chebpr::CoefficientTable quad;
            if (coef_quad) quad = chebpr::coefficients_quadrature(coef_c, coef_max_k, coef_tol);
            std::FILE* out = stdout;
            if (!coef_output.empty()) {
                out = std::fopen(coef_output.c_str(), "wb");
                if (!out) throw chebpr::ParseError("cannot write " + coef_output);
            }
            std::fputs(coef_quad ? "k,c_k,err_bound_k,c_k_quadrature\n" : "k,c_k,err_bound_k\n",
                       out);
            double worst = 0.0;
            for (int k = 0; k <= coef_max_k; ++k) {
                std::fprintf(out, "%d,%s,%s", k, chebpr::fmt17(table.coeffs[k]).c_str(),
                             chebpr::fmt17(chebpr::err_bound(coef_c, k)).c_str());
                if (coef_quad) {
                    double dev = std::abs(table.coeffs[k] - quad.coeffs[k]);
                    if (dev > worst) worst = dev;
                    std::fprintf(out, ",%s", chebpr::fmt17(quad.coeffs[k]).c_str());
                }
                std::fputc('\n', out);
            }
            if (out != stdout && std::fclose(out) != 0)
                throw chebpr::ParseError("write failed for " + coef_output);
            if (coef_quad)
                std::fprintf(stderr, "max closed-form vs quadrature deviation: %s\n",
                             chebpr::fmt17(worst).c_str());
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const chebpr::NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
