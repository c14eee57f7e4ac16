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
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pagerank/construct.hpp"
#include "pagerank/isorank.hpp"

using namespace pagerank;

namespace {

Graph align_a() { return Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}}, false); }
Graph align_b() { return Graph::from_edges(5, std::vector<Edge>{{0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}, false); }

Graph permuted(const Graph& g, const std::vector<Index>& perm) {
    std::vector<Triplet> ts;
    for (const auto& t : g.adjacency().triplets()) ts.push_back({perm[t.row], perm[t.col], t.value});
    return Graph(SparseMatrix::from_triplets(g.num_nodes(), g.num_nodes(), std::move(ts)), g.directed());
}

}  // namespace

TEST_CASE("printed IsoRank solution") {
    const KronOperator op(isorank_chain(align_a()), isorank_chain(align_b()));
    const auto r = isorank_solve(op, 0.85, DenseMatrix(4, 5, 1.0 / 20.0), 1e-12);
    const double printed[4][5] = {{0.03, 0.05, 0.05, 0.09, 0.03},
                                  {0.04, 0.07, 0.07, 0.15, 0.04},
                                  {0.03, 0.05, 0.05, 0.09, 0.03},
                                  {0.02, 0.03, 0.03, 0.05, 0.02}};
    for (Index i = 0; i < 4; ++i) {
        for (Index j = 0; j < 5; ++j) {
            CHECK(std::abs(r.x(i, j) - printed[i][j]) <= 0.005);
            CHECK(std::round(r.x(i, j) * 100.0) / 100.0 == doctest::Approx(printed[i][j]));
        }
    }
    const auto m = greedy_match(r.x);
    REQUIRE(m.size() == 4);
    CHECK(m[0].i == 1);
    CHECK(m[0].j == 3);
    CHECK(r.x.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kron_apply equals the dense Kronecker product") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto ga = oracle::random_digraph(4 + seed % 4, 0.3, seed);
        const auto gb = oracle::random_digraph(3 + seed % 5, 0.3, seed + 40);
        const KronOperator op(isorank_chain(ga), isorank_chain(gb));
        const Index n = op.rows(), m = op.cols();
        DenseMatrix x(n, m);
        std::mt19937_64 gen(seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (auto& v : x.data()) v = u(gen);
        const auto y = kron_apply(op, x);
        const auto p = op.p().to_dense();
        const auto q = op.q().to_dense();
        // (Q ⊗ P)[(j,i),(l,k)] = Q(j,l) P(i,k) acting on vec(X).
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < m; ++j) {
                double s = 0.0;
                for (Index k = 0; k < n; ++k) {
                    for (Index l = 0; l < m; ++l) s += q(j, l) * p(i, k) * x(k, l);
                }
                CHECK(std::abs(y(i, j) - s) <= 1e-13);
            }
        }
    }
}

TEST_CASE("IsoRank is invariant under relabeling") {
    const auto a = align_a(), b = align_b();
    const std::vector<Index> pa{2, 0, 3, 1}, pb{4, 1, 0, 3, 2};
    const KronOperator op(isorank_chain(a), isorank_chain(b));
    const KronOperator op2(isorank_chain(permuted(a, pa)), isorank_chain(permuted(b, pb)));
    DenseMatrix v(4, 5);
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double s = 0.0;
    for (auto& x : v.data()) s += (x = u(gen));
    for (auto& x : v.data()) x /= s;
    DenseMatrix v2(4, 5);
    for (Index i = 0; i < 4; ++i) {
        for (Index j = 0; j < 5; ++j) v2(pa[i], pb[j]) = v(i, j);
    }
    const auto x1 = isorank_solve(op, 0.85, v, 1e-13).x;
    const auto x2 = isorank_solve(op2, 0.85, v2, 1e-13).x;
    for (Index i = 0; i < 4; ++i) {
        for (Index j = 0; j < 5; ++j) CHECK(std::abs(x1(i, j) - x2(pa[i], pb[j])) <= 1e-12);
    }
}

TEST_CASE("IsoRank solutions are distributions") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto ga = oracle::random_digraph(6, 0.3, seed);
        const auto gb = oracle::random_digraph(7, 0.3, seed + 9);
        const KronOperator op(isorank_chain(ga), isorank_chain(gb));
        const auto r = isorank_solve(op, 0.9, DenseMatrix(6, 7, 1.0 / 42.0));
        for (const double x : r.x.data()) CHECK(x >= 0.0);
        CHECK(r.x.sum() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("IsoRank validation") {
    const KronOperator op(isorank_chain(align_a()), isorank_chain(align_b()));
    CHECK_THROWS_AS(isorank_solve(op, 0.85, DenseMatrix(4, 5, 1.0)), ValidationError);
    CHECK_THROWS_AS(isorank_solve(op, 0.85, DenseMatrix(5, 4, 0.05)), ValidationError);
    CHECK_THROWS_AS(isorank_solve(op, 1.0, DenseMatrix(4, 5, 0.05)), ValidationError);
    CHECK_THROWS_AS(kron_apply(op, DenseMatrix(2, 2)), ValidationError);
}

TEST_CASE("greedy matching picks maxima and breaks ties by index") {
    DenseMatrix x(3, 3);
    const double vals[3][3] = {{0.1, 0.5, 0.2}, {0.5, 0.1, 0.3}, {0.2, 0.3, 0.9}};
    for (Index i = 0; i < 3; ++i) {
        for (Index j = 0; j < 3; ++j) x(i, j) = vals[i][j];
    }
    const auto m = greedy_match(x);
    REQUIRE(m.size() == 3);
    CHECK((m[0].i == 2 && m[0].j == 2));
    CHECK((m[1].i == 0 && m[1].j == 1));
    CHECK((m[2].i == 1 && m[2].j == 0));
    CHECK(greedy_match(DenseMatrix(2, 4, 1.0)).size() == 2);
    CHECK_THROWS_AS(greedy_match(DenseMatrix(2, 2, -1.0)), ValidationError);
}
