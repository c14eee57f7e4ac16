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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pagerank/graph.hpp"

namespace pagerank {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

Index parse_index(std::string_view tok, std::size_t line) {
    Index value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("expected a nonnegative node index, got '" + std::string(tok) + "'", line);
    }
    return value;
}

double parse_weight(std::string_view tok, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
        throw ParseError("expected a finite weight, got '" + std::string(tok) + "'", line);
    }
    if (value < 0.0) {
        throw ValidationError("line " + std::to_string(line) + ": negative edge weight " + std::string(tok));
    }
    return value;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

GraphFormat format_from_path(const std::filesystem::path& path) {
    return lower(path.extension().string()) == ".mtx" ? GraphFormat::matrix_market : GraphFormat::edge_list;
}

Graph parse_edge_list(std::istream& in, bool directed) {
    std::vector<Edge> edges;
    Index declared_nodes = 0;
    bool has_declared = false;
    Index max_index = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            const auto comment = split_ws(line.substr(hash + 1));
            if (hash == line.find_first_not_of(" \t") && comment.size() == 2 && comment[0] == "nodes") {
                declared_nodes = parse_index(comment[1], line_no);
                has_declared = true;
            }
            line = line.substr(0, hash);
        }
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw ParseError("expected 'src dst [weight]'", line_no);
        }
        Edge e{parse_index(tokens[0], line_no), parse_index(tokens[1], line_no), 1.0};
        if (tokens.size() == 3) e.weight = parse_weight(tokens[2], line_no);
        max_index = std::max({max_index, e.src, e.dst});
        edges.push_back(e);
    }
    Index n = edges.empty() ? 0 : max_index + 1;
    if (has_declared) {
        if (declared_nodes < n) {
            throw ParseError("'# nodes " + std::to_string(declared_nodes) + "' is smaller than the largest index", 0);
        }
        n = declared_nodes;
    }
    return Graph::from_edges(n, edges, directed);
}

Graph parse_matrix_market(std::istream& in) {
    std::string raw;
    std::size_t line_no = 1;
    if (!std::getline(in, raw)) throw ParseError("empty matrix-market file", 1);
    const auto header = split_ws(raw);
    if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix" ||
        lower(header[2]) != "coordinate") {
        throw ParseError("expected '%%MatrixMarket matrix coordinate <field> <symmetry>'", line_no);
    }
    const auto field = lower(header[3]);
    const auto symmetry = lower(header[4]);
    if (field != "real" && field != "integer" && field != "pattern") {
        throw ParseError("unsupported matrix-market field '" + field + "'", line_no);
    }
    if (symmetry != "general" && symmetry != "symmetric") {
        throw ParseError("unsupported matrix-market symmetry '" + symmetry + "'", line_no);
    }
    const bool pattern = field == "pattern";
    const bool symmetric = symmetry == "symmetric";

    bool have_size = false;
    Index rows = 0, cols = 0, expected = 0, seen = 0;
    std::vector<Triplet> t;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw[0] == '%') continue;
        const auto tokens = split_ws(raw);
        if (tokens.empty()) continue;
        if (!have_size) {
            if (tokens.size() != 3) throw ParseError("expected 'rows cols entries'", line_no);
            rows = parse_index(tokens[0], line_no);
            cols = parse_index(tokens[1], line_no);
            expected = parse_index(tokens[2], line_no);
            if (rows != cols) throw ParseError("adjacency matrix must be square", line_no);
            have_size = true;
            continue;
        }
        if (tokens.size() != (pattern ? 2u : 3u)) {
            throw ParseError(pattern ? "expected 'row col'" : "expected 'row col value'", line_no);
        }
        const Index i = parse_index(tokens[0], line_no);
        const Index j = parse_index(tokens[1], line_no);
        if (i == 0 || j == 0 || i > rows || j > cols) {
            throw ParseError("1-based index out of range", line_no);
        }
        const double w = pattern ? 1.0 : parse_weight(tokens[2], line_no);
        t.push_back({i - 1, j - 1, w});
        if (symmetric && i != j) t.push_back({j - 1, i - 1, w});
        ++seen;
    }
    if (!have_size) throw ParseError("missing size line", line_no);
    if (seen != expected) {
        throw ParseError("declared " + std::to_string(expected) + " entries, found " + std::to_string(seen), 0);
    }
    return Graph(SparseMatrix::from_triplets(rows, cols, std::move(t)), !symmetric);
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format, bool directed) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file '" + path.string() + "'");
    if (format == GraphFormat::matrix_market) {
        auto g = parse_matrix_market(in);
        if (directed || !g.directed()) return g;
        std::vector<Edge> edges;
        for (const auto& e : g.adjacency().triplets()) edges.push_back({e.row, e.col, e.value});
        return Graph::from_edges(g.num_nodes(), edges, false);
    }
    return parse_edge_list(in, directed);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes " << g.num_nodes() << '\n';
    // Row-major order, i.e. grouped by source node.
    auto t = g.adjacency().triplets();
    std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::ostringstream line;
    line << std::setprecision(17);
    for (const auto& e : t) {
        line.str({});
        line << e.row << ' ' << e.col << ' ' << e.value << '\n';
        out << line.str();
    }
}

}  // namespace pagerank
