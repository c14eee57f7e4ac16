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

#include "pagerank/construct.hpp"

#include <algorithm>
#include <cmath>

namespace pagerank {

namespace {

SubStochastic walk_on(const SparseMatrix& a) {
    const auto d = a.row_sums();
    auto t = a.triplets();
    for (auto& e : t) {
        e.value /= d[e.row];
        std::swap(e.row, e.col);
    }
    return SubStochastic::from_matrix(SparseMatrix::from_triplets(a.cols(), a.rows(), std::move(t)));
}

}  // namespace

SubStochastic random_walk(const Graph& g) { return walk_on(g.adjacency()); }

SubStochastic reverse_walk(const Graph& g) { return walk_on(transpose(g.adjacency())); }

SubStochastic weighted_walk(const Graph& g, std::span<const double> weights) {
    if (weights.size() != g.num_nodes()) throw ValidationError("node weight vector has the wrong length");
    for (const double w : weights) {
        if (!std::isfinite(w) || w < 0.0) throw ValidationError("node weights must be nonnegative and finite");
    }
    return walk_on(g.adjacency().scale_columns(weights));
}

StochasticOperator make_operator(SubStochastic base, Correction mode, std::optional<std::vector<double>> dist) {
    const bool preferential =
        mode == Correction::strongly_preferential || mode == Correction::weakly_preferential;
    if (preferential && !dist) throw ValidationError("preferential correction needs a distribution vector");
    return StochasticOperator(std::move(base), mode, preferential ? std::move(*dist) : std::vector<double>{});
}

std::vector<double> DirichletReduction::expand(std::span<const double> interior_solution) const {
    if (interior_solution.size() != interior.size()) throw ValidationError("interior solution has the wrong length");
    std::vector<double> x(interior.size() + boundary.size(), 0.0);
    for (Index k = 0; k < interior.size(); ++k) x[interior[k]] = interior_solution[k];
    for (Index k = 0; k < boundary.size(); ++k) x[boundary[k]] = boundary_values[k];
    return x;
}

DirichletReduction dirichlet_reduce(const StochasticOperator& p, std::span<const Index> boundary,
                                    std::span<const double> values, std::span<const double> v, double alpha) {
    validate_alpha(alpha);
    const Index n = p.size();
    if (values.size() != boundary.size()) throw ValidationError("one boundary value per boundary node is required");
    if (v.size() != n) throw ValidationError("teleportation vector v has the wrong length");

    std::vector<bool> on_boundary(n, false);
    for (Index k = 0; k < boundary.size(); ++k) {
        const Index i = boundary[k];
        if (i >= n) throw ValidationError("boundary node out of range");
        if (on_boundary[i]) throw ValidationError("boundary node listed twice");
        if (!std::isfinite(values[k])) throw ValidationError("boundary values must be finite");
        if (v[i] != 0.0) {
            throw ValidationError("teleportation vector must vanish on the boundary set (node " + std::to_string(i) +
                                  ")");
        }
        on_boundary[i] = true;
    }
    std::vector<Index> interior;
    for (Index i = 0; i < n; ++i) {
        if (!on_boundary[i]) interior.push_back(i);
    }

    // P[S̄, S̄] = P̄[S̄, S̄] plus the correction restricted to the block; only
    // dangling columns inside S̄ contribute.
    const auto& base = p.base();
    std::vector<Index> pos(n, 0);
    for (Index k = 0; k < interior.size(); ++k) pos[interior[k]] = k;
    auto block = base.pbar.submatrix(interior, interior).triplets();
    for (Index jj = 0; jj < interior.size(); ++jj) {
        const Index j = interior[jj];
        const double c = base.correction[j];
        if (c == 0.0) continue;
        switch (p.mode()) {
            case Correction::none:
                break;
            case Correction::strongly_preferential:
            case Correction::weakly_preferential:
                for (Index ii = 0; ii < interior.size(); ++ii) {
                    block.push_back({ii, jj, p.dist()[interior[ii]] * c});
                }
                break;
            case Correction::sink_preferential:
                block.push_back({jj, jj, c});
                break;
        }
    }
    auto reduced = SubStochastic::from_matrix(
        SparseMatrix::from_triplets(interior.size(), interior.size(), std::move(block)));

    // α P[S̄, S] b, taken from P applied to b scattered onto S.
    std::vector<double> b_full(n, 0.0);
    for (Index k = 0; k < boundary.size(); ++k) b_full[boundary[k]] = values[k];
    const auto pb = p.apply(b_full);
    std::vector<double> f(interior.size());
    for (Index k = 0; k < interior.size(); ++k) {
        f[k] = (1.0 - alpha) * v[interior[k]] + alpha * pb[interior[k]];
    }

    return DirichletReduction{PseudoProblem(alpha, std::move(reduced), std::move(f)), std::move(interior),
                              std::vector<Index>(boundary.begin(), boundary.end()),
                              std::vector<double>(values.begin(), values.end())};
}

DirichletReduction dirichlet_reduce(const SubStochastic& p, std::span<const Index> boundary,
                                    std::span<const double> values, std::span<const double> v, double alpha) {
    return dirichlet_reduce(StochasticOperator(p, Correction::none), boundary, values, v, alpha);
}

std::vector<double> undirected_stationary(const Graph& g) {
    if (g.directed()) throw ValidationError("undirected_stationary needs an undirected graph");
    if (g.num_edges() == 0) throw ValidationError("undirected_stationary needs at least one edge");
    if (!is_connected(g)) throw ValidationError("undirected_stationary needs a connected graph");
    auto x = degrees(g).out_degrees;
    double total = 0.0;
    for (const double d : x) total += d;
    for (auto& xi : x) xi /= total;

    const auto px = matvec(random_walk(g).pbar, x);
    for (Index i = 0; i < x.size(); ++i) {
        if (std::abs(px[i] - x[i]) > 1e-12) throw Error("degree distribution is not stationary; adjacency not symmetric");
    }
    return x;
}

}  // namespace pagerank
