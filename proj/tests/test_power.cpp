#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "chebpr/coefficients.hpp"
#include "chebpr/cpaa.hpp"
#include "chebpr/errors.hpp"
#include "chebpr/generate.hpp"
#include "chebpr/metrics.hpp"
#include "chebpr/power.hpp"
#include "helpers.hpp"

using namespace chebpr;
using namespace testutil;

namespace {

PowerConfig fixed_rounds(int rounds, int parallelism = 1) {
    PowerConfig cfg;
    cfg.rounds = rounds;
    cfg.parallelism = parallelism;
    return cfg;
}

}  // namespace

TEST_CASE("single edge converges to the even split") {
    PageRankResult r = run_power(k2(), fixed_rounds(50));
    CHECK(std::abs(r.ranks[0] - 0.5) <= 1e-12);
    CHECK(std::abs(r.ranks[1] - 0.5) <= 1e-12);
    CHECK(r.rounds == 50);
    CHECK(r.trace.size() == 50);
}

TEST_CASE("path graph at full depth matches the dense solution") {
    PageRankResult r = run_power(path3(), fixed_rounds(210));
    CHECK(std::abs(r.ranks[0] - 0.25675675675675674) <= 1e-9);
    CHECK(std::abs(r.ranks[1] - 0.48648648648648651) <= 1e-9);
    CHECK(std::abs(r.ranks[2] - 0.25675675675675674) <= 1e-9);
    CHECK(r.trace.size() == 210);

    Vector exact = dense_direct_solve(path3(), 0.85);
    CHECK(max_relative_error(r.ranks, exact).max_rel_err <= 1e-12);
}

TEST_CASE("regular graphs reach the uniform fixed point in one round") {
    // quarter-degree case: every operation is exact, the fixed point is bitwise
    PageRankResult r1 = run_power(cycle4(), fixed_rounds(1));
    for (int i = 0; i < 4; ++i) CHECK(r1.ranks[i] == 0.25);
    PageRankResult r5 = run_power(cycle4(), fixed_rounds(5));
    CHECK(bitwise_equal(r1.ranks, r5.ranks));

    auto g = make_graph(regular_edges(30, 4));
    PageRankResult r = run_power(g, fixed_rounds(1));
    double u = 1.0 / 30.0;
    for (int64_t i = 0; i < g.n; ++i) CHECK(r.ranks[i] == doctest::Approx(u).epsilon(1e-14));
    PageRankResult rr = run_power(g, fixed_rounds(5));
    CHECK(rr.trace[4].l1_change <= 1e-15);
    for (int64_t i = 0; i < g.n; ++i) CHECK(rr.ranks[i] == doctest::Approx(u).epsilon(1e-14));
}

TEST_CASE("every round conserves unit mass") {
    auto g = make_graph(gnp_edges(2000, 0.003, 5));
    PageRankResult r = run_power(g, fixed_rounds(60));
    for (const TraceRow& row : r.trace) CHECK(std::abs(row.mass_T - 1.0) <= 1e-12);
    CHECK(std::abs(r.total_mass - 1.0) <= 1e-12);
}

TEST_CASE("late-round L1 contraction approaches the damping factor") {
    EdgeList edges = ring_edges(300);
    EdgeList chords = {{0, 150}, {75, 225}, {30, 180}, {100, 250}, {37, 187}};
    edges.insert(edges.end(), chords.begin(), chords.end());
    auto g = make_graph(edges);
    PageRankResult r = run_power(g, fixed_rounds(150));
    double worst = 0.0;
    for (size_t k = 120; k < 150; ++k) {
        double ratio = r.trace[k].l1_change / r.trace[k - 1].l1_change;
        worst = std::max(worst, std::abs(ratio - 0.85));
    }
    CHECK(worst <= 0.02);
}

TEST_CASE("tolerance stop fires on the first round below it") {
    auto g = make_graph(gnp_edges(2000, 0.003, 5));
    PowerConfig cfg;
    cfg.tol = 1e-3;
    cfg.max_rounds = 60;
    PageRankResult r = run_power(g, cfg);
    CHECK(r.rounds < 60);
    CHECK(r.trace.back().l1_change < 1e-3);
    CHECK(r.trace[r.trace.size() - 2].l1_change >= 1e-3);

    cfg.tol = 1e-18;  // unreachable: budget is exhausted instead
    r = run_power(g, cfg);
    CHECK(r.rounds == 60);
}

TEST_CASE("config demands exactly one stopping rule") {
    PowerConfig both;
    both.rounds = 5;
    both.tol = 1e-3;
    CHECK_THROWS_AS(run_power(path3(), both), std::invalid_argument);
    PowerConfig neither;
    CHECK_THROWS_AS(run_power(path3(), neither), std::invalid_argument);
    PowerConfig bad_c;
    bad_c.rounds = 5;
    bad_c.c = 1.0;
    CHECK_THROWS_AS(run_power(path3(), bad_c), DomainError);
}

TEST_CASE("worker count cannot change a single bit") {
    auto g = make_graph(gnp_edges(2000, 0.003, 11));
    PageRankResult base = run_power(g, fixed_rounds(30, 1));
    for (int K : {2, 8}) {
        PageRankResult r = run_power(g, fixed_rounds(30, K));
        CHECK(bitwise_equal(base.ranks, r.ranks));
        for (size_t i = 0; i < r.trace.size(); ++i)
            CHECK(r.trace[i].l1_change == base.trace[i].l1_change);
    }
}

TEST_CASE("reference vector is the 210-round serial run") {
    auto g = make_graph(gnp_edges(500, 0.012, 2));
    Vector ref = reference_pagerank(g, 0.85);
    PageRankResult manual = run_power(g, fixed_rounds(210, 1));
    CHECK(bitwise_equal(ref, manual.ranks));

    Vector ref4 = reference_pagerank(cycle4(), 0.85);
    for (int i = 0; i < 4; ++i) CHECK(ref4[i] == doctest::Approx(0.25).epsilon(1e-14));
    Vector refk2 = reference_pagerank(k2(), 0.85);
    CHECK(refk2[0] == 0.5);
    CHECK(refk2[1] == 0.5);
}

TEST_CASE("both solvers land on the same vector at high precision") {
    auto g = make_graph(gnp_edges(1000, 0.006, 4));
    SolverConfig ccfg;
    ccfg.rounds = plan_iterations(0.85, 1e-8).M;
    Vector a = run_cpaa(g, ccfg).ranks;
    Vector b = run_power(g, fixed_rounds(120)).ranks;
    CHECK(max_relative_error(a, b).max_rel_err <= 1e-6);
}

TEST_CASE("error columns track a supplied reference") {
    auto g = make_graph(gnp_edges(1000, 0.006, 4));
    Vector ref = reference_pagerank(g, 0.85);
    PageRankResult r = run_power(g, fixed_rounds(40), &ref);
    CHECK(r.has_err);
    CHECK(r.trace.front().err > r.trace.back().err);
    Vector short_ref = Vector::Ones(3);
    CHECK_THROWS_AS(run_power(g, fixed_rounds(5), &short_ref), std::invalid_argument);
}

TEST_CASE("numeric blowup is reported with the round number") {
    UndirectedGraph g = path3();
    g.inv_degree[1] = 1e308;
    CHECK_THROWS_WITH_AS(run_power(g, fixed_rounds(9)),
                         doctest::Contains("round"), NumericError);
}
