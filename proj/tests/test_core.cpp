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

#include "oracles.hpp"
#include "pagerank/graph.hpp"
#include "pagerank/sparse_matrix.hpp"

using namespace pagerank;

TEST_CASE("from_triplets sums duplicates and drops zeros") {
    const auto m = SparseMatrix::from_triplets(3, 3, {{0, 1, 1.0}, {0, 1, 2.0}, {2, 2, 0.0}, {1, 0, 0.5}});
    CHECK(m.nnz() == 2);
    CHECK(m.coeff(0, 1) == 3.0);
    CHECK(m.coeff(1, 0) == 0.5);
    CHECK(m.coeff(2, 2) == 0.0);
}

TEST_CASE("from_triplets rejects bad entries") {
    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{0, 0, -1.0}}), ValidationError);
    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{0, 0, NAN}}), ValidationError);
    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{2, 0, 1.0}}), ValidationError);
}

TEST_CASE("transpose is an involution and swaps coefficients") {
    const auto g = oracle::random_digraph(30, 0.2, 11, true, true);
    const auto& a = g.adjacency();
    const auto t = transpose(a);
    CHECK(transpose(t) == a);
    for (const auto& e : a.triplets()) CHECK(t.coeff(e.col, e.row) == e.value);
}

TEST_CASE("matvec matches a dense product and is deterministic") {
    const auto g = oracle::random_digraph(25, 0.3, 5, true, true);
    const auto& a = g.adjacency();
    std::vector<double> x(25);
    for (Index i = 0; i < 25; ++i) x[i] = std::sin(static_cast<double>(i));
    const auto y1 = matvec(a, x);
    const auto y2 = matvec(a, x);
    CHECK(y1 == y2);
    const auto d = to_dense(a);
    for (Index i = 0; i < 25; ++i) {
        double s = 0.0;
        for (Index j = 0; j < 25; ++j) s += d(i, j) * x[j];
        CHECK(y1[i] == doctest::Approx(s).epsilon(1e-14));
    }
    CHECK_THROWS_AS(matvec(a, std::vector<double>(3)), ValidationError);
}

TEST_CASE("degrees and dangling mask agree") {
    const auto g = Graph::from_edges(6, std::vector<Edge>{{1, 0}, {1, 2}, {2, 4}, {3, 1}, {3, 2}, {3, 4}, {4, 5}, {5, 4}});
    const auto info = degrees(g);
    CHECK(info.out_degrees == std::vector<double>{0, 2, 1, 3, 1, 1});
    CHECK(info.num_dangling() == 1);
    for (Index i = 0; i < 6; ++i) CHECK(info.dangling_mask[i] == (info.out_degrees[i] == 0.0));
}

TEST_CASE("undirected graphs are symmetric") {
    const auto g = Graph::from_edges(3, std::vector<Edge>{{0, 1, 2.0}, {1, 2}}, false);
    CHECK(is_symmetric(g.adjacency()));
    CHECK(g.adjacency().coeff(1, 0) == 2.0);
    CHECK_THROWS_AS(Graph(SparseMatrix::from_triplets(2, 2, {{0, 1, 1.0}}), false), ValidationError);
}

TEST_CASE("edge list parsing") {
    std::istringstream in("# comment\n# nodes 5\n0 1\n1\t2 2.5\n\n3 4 # trailing\n");
    const auto g = parse_edge_list(in);
    CHECK(g.num_nodes() == 5);
    CHECK(g.num_edges() == 3);
    CHECK(g.adjacency().coeff(1, 2) == 2.5);

    std::istringstream bad("0 1\n1 x\n");
    try {
        parse_edge_list(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream neg("0 1 -2\n");
    CHECK_THROWS_AS(parse_edge_list(neg), ValidationError);
}

TEST_CASE("matrix market parsing") {
    std::istringstream general("%%MatrixMarket matrix coordinate real general\n% c\n3 3 2\n1 2 1.5\n3 1 2\n");
    const auto g = parse_matrix_market(general);
    CHECK(g.directed());
    CHECK(g.adjacency().coeff(0, 1) == 1.5);
    CHECK(g.adjacency().coeff(2, 0) == 2.0);

    std::istringstream sym("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n3 2\n");
    const auto s = parse_matrix_market(sym);
    CHECK_FALSE(s.directed());
    CHECK(s.num_edges() == 4);
    CHECK(s.adjacency().coeff(0, 1) == 1.0);
}

TEST_CASE("edge list round trip") {
    const auto g = oracle::random_digraph(20, 0.15, 3, true, true);
    std::stringstream ss;
    write_edge_list(ss, g);
    const auto back = parse_edge_list(ss);
    CHECK(back.adjacency() == g.adjacency());
}

TEST_CASE("connectivity checks") {
    const auto chain = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(is_connected(chain));
    CHECK_FALSE(is_strongly_connected(chain.adjacency()));
    const auto cycle = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_strongly_connected(cycle.adjacency()));
    const auto split = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}, false);
    CHECK_FALSE(is_connected(split));
}
