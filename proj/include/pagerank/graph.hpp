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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pagerank/sparse_matrix.hpp"

namespace pagerank {

struct Edge {
    Index src;
    Index dst;
    double weight = 1.0;
};

/// Weighted graph over nodes 0..n-1. adjacency(i, j) is the weight of the
/// edge i -> j. An undirected graph has an exactly symmetric adjacency.
class Graph {
public:
    Graph() = default;
    Graph(SparseMatrix adjacency, bool directed);

    /// Undirected graphs get both (u, v) and (v, u) for every listed edge.
    static Graph from_edges(Index num_nodes, std::span<const Edge> edges, bool directed = true);

    const SparseMatrix& adjacency() const noexcept { return adjacency_; }
    Index num_nodes() const noexcept { return adjacency_.rows(); }
    Index num_edges() const noexcept { return adjacency_.nnz(); }
    bool directed() const noexcept { return directed_; }

private:
    SparseMatrix adjacency_;
    bool directed_ = true;
};

struct DegreeInfo {
    std::vector<double> out_degrees;
    std::vector<bool> dangling_mask;

    std::size_t num_dangling() const;
};

/// d = A e. A node is dangling iff its degree is exactly zero.
DegreeInfo degrees(const Graph& g);

std::vector<double> in_degrees(const Graph& g);
std::vector<double> total_degrees(const Graph& g);

Graph reversed(const Graph& g);

/// Connectivity of the underlying undirected structure.
bool is_connected(const Graph& g);
/// Every node reaches every other node along directed edges.
bool is_strongly_connected(const SparseMatrix& adjacency);

enum class GraphFormat { edge_list, matrix_market };

/// ".mtx" selects matrix-market, anything else the edge list.
GraphFormat format_from_path(const std::filesystem::path& path);

/// Edge lists: "src dst [weight]" per line, 0-based, '#' comments. A comment
/// of the form "# nodes N" fixes the node count (otherwise 1 + max index).
/// directed = false symmetrizes the edge list. Matrix-market files are
/// 1-based; the symmetric qualifier yields an undirected graph.
Graph load_graph(const std::filesystem::path& path, GraphFormat format, bool directed = true);
Graph parse_edge_list(std::istream& in, bool directed = true);
Graph parse_matrix_market(std::istream& in);

/// Writes "# nodes N" followed by one "src dst weight" line per stored entry,
/// weights at 17 significant digits.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace pagerank
