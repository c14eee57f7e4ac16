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

#include "pagerank/graph.hpp"

#include <algorithm>
#include <deque>

namespace pagerank {

Graph::Graph(SparseMatrix adjacency, bool directed)
    : adjacency_(std::move(adjacency)), directed_(directed) {
    if (adjacency_.rows() != adjacency_.cols()) {
        throw ValidationError("adjacency matrix must be square");
    }
    if (!directed_ && !is_symmetric(adjacency_)) {
        throw ValidationError("undirected graph requires a symmetric adjacency matrix");
    }
}

Graph Graph::from_edges(Index num_nodes, std::span<const Edge> edges, bool directed) {
    std::vector<Triplet> t;
    t.reserve(directed ? edges.size() : 2 * edges.size());
    for (const auto& e : edges) {
        t.push_back({e.src, e.dst, e.weight});
        if (!directed && e.src != e.dst) t.push_back({e.dst, e.src, e.weight});
    }
    return Graph(SparseMatrix::from_triplets(num_nodes, num_nodes, std::move(t)), directed);
}

std::size_t DegreeInfo::num_dangling() const {
    return static_cast<std::size_t>(std::count(dangling_mask.begin(), dangling_mask.end(), true));
}

DegreeInfo degrees(const Graph& g) {
    const std::vector<double> ones(g.num_nodes(), 1.0);
    DegreeInfo info;
    info.out_degrees = matvec(g.adjacency(), ones);
    info.dangling_mask.resize(g.num_nodes());
    for (Index i = 0; i < g.num_nodes(); ++i) info.dangling_mask[i] = info.out_degrees[i] == 0.0;
    return info;
}

std::vector<double> in_degrees(const Graph& g) { return g.adjacency().column_sums(); }

std::vector<double> total_degrees(const Graph& g) {
    auto d = g.adjacency().row_sums();
    const auto in = in_degrees(g);
    for (Index i = 0; i < d.size(); ++i) d[i] += in[i];
    return d;
}

Graph reversed(const Graph& g) { return Graph(transpose(g.adjacency()), g.directed()); }

namespace {

// Breadth-first reach from node 0 following stored entries row -> col of m.
std::vector<bool> reach_from_zero(const SparseMatrix& rows_to_cols_t) {
    // rows_to_cols_t is the transpose, so column j lists the targets of j.
    const Index n = rows_to_cols_t.cols();
    std::vector<bool> seen(n, false);
    if (n == 0) return seen;
    std::deque<Index> queue{0};
    seen[0] = true;
    const auto ptr = rows_to_cols_t.col_ptr();
    const auto idx = rows_to_cols_t.row_indices();
    while (!queue.empty()) {
        const Index u = queue.front();
        queue.pop_front();
        for (Index k = ptr[u]; k < ptr[u + 1]; ++k) {
            if (!seen[idx[k]]) {
                seen[idx[k]] = true;
                queue.push_back(idx[k]);
            }
        }
    }
    return seen;
}

bool all_true(const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

bool is_strongly_connected(const SparseMatrix& adjacency) {
    if (adjacency.rows() == 0) return true;
    return all_true(reach_from_zero(transpose(adjacency))) && all_true(reach_from_zero(adjacency));
}

bool is_connected(const Graph& g) {
    const auto& a = g.adjacency();
    auto t = a.triplets();
    const auto n = t.size();
    for (std::size_t i = 0; i < n; ++i) t.push_back({t[i].col, t[i].row, t[i].value});
    const auto sym = SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
    return all_true(reach_from_zero(sym));
}

}  // namespace pagerank
