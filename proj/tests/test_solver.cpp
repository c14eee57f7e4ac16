/*
 Copyright 2026 The pagerank-toolkit Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "example_graph.hpp"
#include "oracles.hpp"
#include "pagerank/construct.hpp"
#include "pagerank/solver.hpp"

using namespace pagerank;

namespace {

SolveOptions with_tol(double tol, StartVector start = StartVector::teleport) {
    SolveOptions o;
    o.tol = tol;
    o.start = start;
    return o;
}

StochasticOperator strong_op(const Graph& g, const std::vector<double>& v) {
    return make_operator(random_walk(g), Correction::strongly_preferential, v);
}

}  // namespace

TEST_CASE("one-node problem") {
    const auto g = Graph::from_edges(1, std::vector<Edge>{{0, 0}});
    const PageRankProblem p(0.85, make_operator(random_walk(g), Correction::none), {1.0});
    const auto s = solve(p);
    CHECK(s.x[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("identity chain returns v") {
    std::vector<Edge> loops;
    for (Index i = 0; i < 5; ++i) loops.push_back({i, i});
    const auto g = Graph::from_edges(5, loops);
    const auto v = oracle::random_distribution(5, 3);
    for (const double alpha : {0.1, 0.5, 0.99}) {
        const auto s = solve(PageRankProblem(alpha, make_operator(random_walk(g), Correction::none), v));
        CHECK(oracle::max_abs_diff(s.x, v) <= 1e-15);
    }
}

TEST_CASE("example graph solve matches the dense oracle") {
    const auto g = example::graph();
    const auto v = uniform_distribution(6);
    const auto op = strong_op(g, v);
    const auto s = solve(PageRankProblem(0.85, op, v), with_tol(1e-12));
    CHECK(oracle::sum(s.x) == doctest::Approx(1.0).epsilon(1e-12));
    const auto want = oracle::pagerank(0.85, op.to_dense(), v);
    CHECK(oracle::dist1(s.x, want) <= 1e-10);
    CHECK(oracle::max_abs_diff(solve_dense_oracle(0.85, op.to_dense(), v), want) <= 1e-14);
}

TEST_CASE("iterative and dense solves agree on random problems") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Index n = 5 + seed % 40;
        const auto g = oracle::random_digraph(n, 0.15, seed);
        const auto v = oracle::random_distribution(n, seed + 1);
        const auto op = strong_op(g, v);
        const double alpha = 0.5 + 0.009 * static_cast<double>(seed);
        const auto s = solve(PageRankProblem(alpha, op, v));
        const auto want = oracle::pagerank(alpha, op.to_dense(), v);
        double err = 0.0;
        for (Index i = 0; i < n; ++i) err += std::abs(s.x[i] - want[i]);
        CHECK(err <= 1e-10);
        for (const double xi : s.x) CHECK(xi >= 0.0);
    }
}

TEST_CASE("zero-start iterates have error mass exactly alpha^k and increase") {
    const auto g = oracle::random_digraph(30, 0.1, 77);
    const auto v = oracle::random_distribution(30, 78);
    const double alpha = 0.85;
    const auto op = strong_op(g, v);
    std::vector<std::vector<double>> iterates;
    auto opts = with_tol(1e-12, StartVector::zero);
    opts.on_iterate = [&](std::size_t, std::span<const double> x) { iterates.emplace_back(x.begin(), x.end()); };
    const auto s = solve(PageRankProblem(alpha, op, v), opts);
    const auto exact = oracle::pagerank(alpha, op.to_dense(), v);
    REQUIRE(iterates.size() > 21);
    for (std::size_t k = 1; k <= 20; ++k) {
        double gap = 0.0;
        for (Index i = 0; i < 30; ++i) {
            gap += exact[i] - iterates[k][i];
            CHECK(iterates[k][i] >= iterates[k - 1][i]);
        }
        CHECK(std::abs(gap - std::pow(alpha, static_cast<double>(k))) <= 1e-12);
    }
    CHECK(s.iterations + 1 == iterates.size());
}

TEST_CASE("teleport-start iterates contract by alpha") {
    const auto g = oracle::random_digraph(40, 0.1, 12);
    const auto v = oracle::random_distribution(40, 13);
    const double alpha = 0.9;
    const auto op = strong_op(g, v);
    const auto exact = oracle::pagerank(alpha, op.to_dense(), v);
    std::vector<double> errs;
    auto opts = with_tol(1e-11);
    opts.on_iterate = [&](std::size_t, std::span<const double> x) {
        double e = 0.0;
        for (Index i = 0; i < 40; ++i) e += std::abs(x[i] - exact[i]);
        errs.push_back(e);
    };
    solve(PageRankProblem(alpha, op, v), opts);
    for (std::size_t k = 1; k < errs.size(); ++k) {
        if (errs[k - 1] > 1e-13) CHECK(errs[k] <= alpha * errs[k - 1] + 1e-15);
    }
}

TEST_CASE("residual stopping rule certifies the error") {
    const auto g = oracle::random_digraph(60, 0.05, 21);
    const auto v = uniform_distribution(60);
    const auto op = strong_op(g, v);
    for (const double tol : {1e-4, 1e-6, 1e-8}) {
        const auto s = solve(PageRankProblem(0.95, op, v), with_tol(tol));
        const auto exact = oracle::pagerank(0.95, op.to_dense(), v);
        double e = 0.0;
        for (Index i = 0; i < 60; ++i) e += std::abs(s.x[i] - exact[i]);
        CHECK(e <= tol);
        CHECK(s.iterations <= iteration_cap(0.95, tol));
    }
}

TEST_CASE("iteration cap formula") {
    CHECK(iteration_cap(0.5, 1e-3) ==
          static_cast<std::size_t>(std::ceil(std::log(1e-3 * 0.5 / 2) / std::log(0.5))) + 8);
}

TEST_CASE("validation errors") {
    const auto g = example::graph();
    const auto v = uniform_distribution(6);
    CHECK_THROWS_AS(PageRankProblem(1.5, strong_op(g, v), v), ValidationError);
    CHECK_THROWS_AS(PageRankProblem(0.0, strong_op(g, v), v), ValidationError);
    CHECK_THROWS_AS(PageRankProblem(0.85, make_operator(random_walk(g), Correction::none), v), ValidationError);
    CHECK_THROWS_AS(PageRankProblem(0.85, strong_op(g, v), std::vector<double>(6, 0.5)), ValidationError);
    CHECK_THROWS_AS(solve(PageRankProblem(0.85, strong_op(g, v), v), with_tol(0.0)), ValidationError);
    try {
        validate_alpha(1.5);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    }
    CHECK_THROWS_AS(PseudoProblem(0.85, random_walk(g), std::vector<double>(6, 0.0)), ValidationError);
    CHECK_THROWS_AS(PseudoProblem(0.85, random_walk(g), std::vector<double>{1, 0, 0, 0, 0, -1}), ValidationError);
}

TEST_CASE("pseudo-PageRank with f = (1-alpha) v and no dangling nodes equals PageRank") {
    const auto g = oracle::random_digraph(30, 0.1, 5, false);
    const auto v = oracle::random_distribution(30, 6);
    const double alpha = 0.85;
    std::vector<double> f(v);
    for (auto& x : f) x *= 1.0 - alpha;
    const auto y = solve_pseudo(PseudoProblem(alpha, random_walk(g), f));
    const auto x = solve(PageRankProblem(alpha, make_operator(random_walk(g), Correction::none), v));
    // Same fixed point; the two stopping rules may halt on different iterates.
    CHECK(oracle::max_abs_diff(x.x, y.x) <= 2e-10);
    CHECK(y.kind == SolutionKind::pseudo);
}

TEST_CASE("renormalized pseudo-PageRank equals strongly preferential PageRank") {
    const auto g = example::graph();
    const auto v = uniform_distribution(6);
    std::vector<double> f(v);
    for (auto& x : f) x *= 0.15;
    const auto y = solve_pseudo(PseudoProblem(0.85, random_walk(g), f), with_tol(1e-13));
    const auto x = normalize_to_pagerank(y);
    CHECK(x.kind == SolutionKind::pagerank);
    CHECK(x.scale == doctest::Approx(1.0 / oracle::sum(y.x)));
    const auto want = solve(PageRankProblem(0.85, strong_op(g, v), v), with_tol(1e-13));
    CHECK(oracle::max_abs_diff(x.x, want.x) <= 1e-10);
}

TEST_CASE("pseudo solve matches the dense oracle") {
    const auto g = oracle::random_digraph(30, 0.08, 17);
    auto f = oracle::random_distribution(30, 18);
    f[3] = 0.0;
    const auto rw = random_walk(g);
    const auto y = solve_pseudo(PseudoProblem(0.9, rw, f));
    const auto want = oracle::linear_solve(0.9, to_dense(rw.pbar), f);
    double e = 0.0;
    for (Index i = 0; i < 30; ++i) e += std::abs(y.x[i] - want[i]);
    CHECK(e <= 1e-10 * oracle::sum(f) / 0.1);
    for (const double yi : y.x) CHECK(yi >= 0.0);
}

TEST_CASE("normalize_to_pagerank") {
    Solution s;
    s.x = {0.5, 1.5};
    s.kind = SolutionKind::pseudo;
    const auto x = normalize_to_pagerank(s);
    CHECK(x.x == std::vector<double>{0.25, 0.75});
    CHECK(x.scale == 0.5);
    s.x = {0.0, 0.0};
    CHECK_THROWS_AS(normalize_to_pagerank(s), DegenerateError);
}

TEST_CASE("dense oracle pivots stay nonzero on M-matrices") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = oracle::random_digraph(20, 0.2, seed);
        const auto op = make_operator(random_walk(g), Correction::sink_preferential);
        CHECK_NOTHROW(solve_dense_oracle(0.99, op.to_dense(), uniform_distribution(20)));
    }
}

TEST_CASE("score TSV format") {
    std::ostringstream out;
    write_scores_tsv(out, std::vector<double>{0.1, 0.25});
    CHECK(out.str() == "0\t0.10000000000000001\n1\t0.25\n");
}

TEST_CASE("localized PageRank stays in the seeded cluster") {
    std::vector<Edge> edges;
    for (Index c = 0; c < 2; ++c) {
        for (Index i = 0; i < 20; ++i) {
            for (Index j = i + 1; j < 20; ++j) edges.push_back({20 * c + i, 20 * c + j});
        }
    }
    edges.push_back({19, 20});
    const auto g = Graph::from_edges(40, edges, false);
    std::vector<double> v(40, 0.0);
    v[0] = 1.0;
    const auto op = make_operator(random_walk(g), Correction::none);
    const auto x = solve(PageRankProblem(0.85, op, v), with_tol(1e-12)).x;
    double inside = 0.0;
    for (Index i = 0; i < 20; ++i) inside += x[i];
    // Frozen from a dense LU solve of the same system.
    constexpr double kInsideMass = 0.98860724563409075;
    CHECK(inside == doctest::Approx(kInsideMass).epsilon(1e-9));
    CHECK(inside > 0.5);
}
