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

#include <optional>
#include <span>
#include <vector>

#include "pagerank/graph.hpp"
#include "pagerank/operator.hpp"
#include "pagerank/problem.hpp"

namespace pagerank {

/// Uniform (or edge-weight proportional) random walk P̄ = AᵀD⁺. Dangling
/// nodes get an empty column and c_i = 1.
SubStochastic random_walk(const Graph& g);

/// Random walk on the edge-reversed graph, P̄ = A diag(Aᵀe)⁺.
SubStochastic reverse_walk(const Graph& g);

/// Walk biased by node weights: i -> j with probability proportional to
/// A(i, j) * weights[j], i.e. P̄ = D_W Aᵀ diag(A D_W e)⁺. Columns whose
/// targets all have zero weight become dangling.
SubStochastic weighted_walk(const Graph& g, std::span<const double> weights);

/// Preferential modes require `dist` (v for strongly, u for weakly).
StochasticOperator make_operator(SubStochastic base, Correction mode,
                                 std::optional<std::vector<double>> dist = std::nullopt);

/// Pseudo-PageRank system left after fixing x_i = b_i on a boundary set S.
struct DirichletReduction {
    PseudoProblem problem;
    std::vector<Index> interior;   // node ids of the retained rows/cols, ascending
    std::vector<Index> boundary;   // node ids of S, as given
    std::vector<double> boundary_values;

    /// Full-length vector: the interior solution scattered back with b on S.
    std::vector<double> expand(std::span<const double> interior_solution) const;
};

/// Restricts P to the complement of S; f = (1-α) v_S̄ + α P[S̄, S] b.
/// v must vanish on S and f must come out nonnegative and nonzero.
DirichletReduction dirichlet_reduce(const StochasticOperator& p, std::span<const Index> boundary,
                                    std::span<const double> values, std::span<const double> v, double alpha);
DirichletReduction dirichlet_reduce(const SubStochastic& p, std::span<const Index> boundary,
                                    std::span<const double> values, std::span<const double> v, double alpha);

/// d / eᵀd for a connected undirected graph; checks that AᵀD⁻¹ fixes it.
std::vector<double> undirected_stationary(const Graph& g);

}  // namespace pagerank
