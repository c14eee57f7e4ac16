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
#include <random>

#include "example_graph.hpp"
#include "oracles.hpp"
#include "pagerank/censored.hpp"
#include "pagerank/construct.hpp"

using namespace pagerank;

namespace {

std::vector<double> censor(std::vector<double> x) {
    x.pop_back();
    const double s = oracle::sum(x);
    for (auto& v : x) v /= s;
    return x;
}

SolveOptions tight() {
    SolveOptions o;
    o.tol = 1e-13;
    return o;
}

}  // namespace

TEST_CASE("uniform-exit chain censors to PageRank on the example graph") {
    const auto v = uniform_distribution(6);
    const auto op = make_operator(random_walk(example::graph()), Correction::strongly_preferential, v);
    const auto chain = AugmentedChain::uniform_exit(op, 0.85, v);
    const auto x = censored_stationary(chain);
    const auto want = solve(PageRankProblem(0.85, op, v), tight());
    CHECK(oracle::max_abs_diff(x.x, want.x) <= 1e-9);
}

TEST_CASE("augmented chains are column stochastic") {
    const auto v = oracle::random_distribution(6, 1);
    const auto op = make_operator(random_walk(example::graph()), Correction::strongly_preferential, v);
    for (const auto& chain : {AugmentedChain::uniform_exit(op, 0.7, v), AugmentedChain::degree_exit(example::graph(), v)}) {
        const auto p = chain.to_dense();
        for (Index j = 0; j < 7; ++j) {
            double s = 0.0;
            for (Index i = 0; i < 7; ++i) s += p(i, j);
            CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
        }
        const auto x = oracle::random_distribution(7, 5);
        std::vector<double> y(7);
        chain.apply(x, y);
        CHECK(oracle::sum(y) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("single self-loop censors to [1]") {
    const auto g = Graph::from_edges(1, std::vector<Edge>{{0, 0}});
    const auto op = make_operator(random_walk(g), Correction::none);
    const auto x = censored_stationary(AugmentedChain::uniform_exit(op, 0.5, {1.0}));
    CHECK(x.x[0] == doctest::Approx(1.0));
}

TEST_CASE("censored stationary matches a dense eigenvector of the augmented chain") {
    const auto g = oracle::random_digraph(15, 0.15, 99);
    const auto v = oracle::random_distribution(15, 100);
    const auto op = make_operator(random_walk(g), Correction::strongly_preferential, v);
    const auto chain = AugmentedChain::uniform_exit(op, 0.8, v);
    const auto want = censor(oracle::stationary(chain.to_dense()));
    CHECK(oracle::max_abs_diff(censored_stationary(chain).x, want) <= 1e-9);
}

TEST_CASE("censoring identity on random problems") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = oracle::random_digraph(10 + 2 * seed, 0.12, seed * 7);
        const auto v = oracle::random_distribution(g.num_nodes(), seed);
        const auto op = make_operator(random_walk(g), Correction::strongly_preferential, v);
        const double alpha = 0.5 + 0.04 * static_cast<double>(seed);
        const auto x = censored_stationary(AugmentedChain::uniform_exit(op, alpha, v));
        const auto want = solve(PageRankProblem(alpha, op, v), tight());
        CHECK(oracle::max_abs_diff(x.x, want.x) <= 1e-9);
    }
}

TEST_CASE("censored-node construction on the example graph") {
    const auto g = example::graph();
    const auto v = uniform_distribution(6);
    const auto cp = censored_node_problem(g, v);
    const std::vector<double> c{1, 1.0 / 3, 1.0 / 2, 1.0 / 4, 1.0 / 2, 1.0 / 2};
    for (Index i = 0; i < 6; ++i) CHECK(cp.correction[i] == c[i]);
    CHECK(cp.alpha_implied == 0.75);
    const auto leak = cp.leaky.column_sums();
    for (Index j = 0; j < 6; ++j) CHECK(leak[j] + cp.correction[j] == doctest::Approx(1.0).epsilon(1e-15));

    const auto y = normalize_to_pagerank(solve_pseudo(cp.problem, tight()));
    const auto chain = AugmentedChain::degree_exit(g, v);
    CHECK(oracle::max_abs_diff(censored_stationary(chain).x, y.x) <= 1e-9);
    CHECK(oracle::max_abs_diff(censor(oracle::stationary(chain.to_dense())), y.x) <= 1e-9);
}

TEST_CASE("censored-node construction invariants") {
    const auto single = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
    CHECK(censored_node_problem(single, uniform_distribution(2)).alpha_implied == 0.5);
    CHECK_THROWS_AS(censored_node_problem(Graph::from_edges(3, std::vector<Edge>{}), uniform_distribution(3)),
                    ValidationError);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto g = oracle::random_digraph(20, 0.2, seed);
        const auto cp = censored_node_problem(g, uniform_distribution(20));
        const auto d = degrees(g).out_degrees;
        const double dmax = *std::max_element(d.begin(), d.end());
        CHECK(cp.alpha_implied == doctest::Approx(dmax / (dmax + 1.0)).epsilon(1e-15));
        for (const double ci : cp.correction) CHECK(ci > 0.0);
    }
}

TEST_CASE("Colley ratings: trivial cases") {
    const auto g = Graph::from_edges(2, std::vector<Edge>{{0, 1}}, false);
    const auto zero = colley(g, std::vector<double>{0.0, 0.0});
    CHECK(zero.ratings == std::vector<double>{0.0, 0.0});
    const auto r = colley(g, std::vector<double>{1.0, -1.0});
    CHECK(r.ratings[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(r.ratings[1] == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(r.alpha == doctest::Approx(1.0 / 3.0));
    CHECK(r.route_gap <= 1e-12);
    CHECK_THROWS_AS(colley(Graph::from_edges(2, std::vector<Edge>{{0, 1}}), std::vector<double>{1, -1}),
                    ValidationError);
}

TEST_CASE("Colley direct and pseudo-PageRank routes agree") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 gen(seed);
        std::uniform_int_distribution<Index> team(0, 7);
        std::uniform_int_distribution<int> margin(1, 20);
        std::vector<Edge> games;
        std::vector<double> f(8, 0.0);
        for (int k = 0; k < 20; ++k) {
            const Index a = team(gen), b = team(gen);
            if (a == b) continue;
            games.push_back({a, b, 1.0});
            const int m = margin(gen);
            f[a] += m;
            f[b] -= m;
        }
        const auto g = Graph::from_edges(8, games, false);
        const auto r = colley(g, f);
        CHECK(r.route_gap <= 1e-9);
        CHECK(oracle::max_abs_diff(r.ratings, r.pseudo_ratings) <= 1e-9);
        // (D + 2I - A) r = f
        const auto d = degrees(g).out_degrees;
        const auto ar = matvec(g.adjacency(), r.ratings);
        for (Index i = 0; i < 8; ++i) CHECK((d[i] + 2.0) * r.ratings[i] - ar[i] == doctest::Approx(f[i]).epsilon(1e-12));
    }
}
