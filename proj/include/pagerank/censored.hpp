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
#include "pagerank/solver.hpp"

namespace pagerank {

/// Markov chain on n nodes plus one teleport state (index n). Column j < n
/// sends scale·P e_j to the nodes and exit[j] to the teleport state; the
/// teleport state sends its mass along `destination`.
class AugmentedChain {
public:
    enum class ExitKind { uniform_exit, degree_exit };

    /// [αP  v; (1-α)eᵀ  0] for a stochastic P.
    static AugmentedChain uniform_exit(StochasticOperator p, double alpha, std::vector<double> v);

    /// [Aᵀ(D+I)⁻¹  v/eᵀv; eᵀ(D+I)⁻¹  0]: every node links to the teleport
    /// state, which links back along v.
    static AugmentedChain degree_exit(const Graph& g, std::vector<double> v);

    /// y = P' x for vectors of length n + 1.
    void apply(std::span<const double> x, std::span<double> y) const;

    Index num_nodes() const noexcept { return block_.size(); }
    ExitKind kind() const noexcept { return kind_; }
    std::span<const double> exit() const noexcept { return exit_; }

    /// Explicit (n+1)x(n+1) matrix; oracles only.
    DenseMatrix to_dense() const;

private:
    AugmentedChain(ExitKind kind, StochasticOperator block, double scale, std::vector<double> exit,
                   std::vector<double> destination);

    ExitKind kind_;
    StochasticOperator block_;
    double scale_;
    std::vector<double> exit_;
    std::vector<double> destination_;
};

/// Power iteration on the lazy chain (I + P')/2 until ‖Δ‖₁ ≤ tol, then drops
/// the teleport state and renormalizes.
Solution censored_stationary(const AugmentedChain& chain, double tol = 1e-12);

struct CensoredNodeProblem {
    PseudoProblem problem;            // (α, P̄'/α, v)
    double alpha_implied = 0.0;       // 1 - min c
    SparseMatrix leaky;               // P̄' = Aᵀ(D+I)⁻¹
    std::vector<double> correction;   // c = 1/(d+1), all > 0
};

/// Pseudo-PageRank form of the censored teleport-node construction.
CensoredNodeProblem censored_node_problem(const Graph& g, std::span<const double> v);

struct ColleyResult {
    std::vector<double> ratings;               // (D + 2I - A) r = f
    std::optional<PseudoProblem> problem;      // (α, A(D+2I)⁻¹/α, f + 2σe); empty when that is zero
    double alpha = 0.0;                        // d_max / (d_max + 2)
    double sigma = 0.0;
    std::vector<double> pseudo_ratings;        // r recovered through the pseudo-PageRank route
    double route_gap = 0.0;                    // ‖ratings - pseudo_ratings‖_∞
};

/// Colley ratings on an undirected game graph (weights count games), with the
/// pseudo-PageRank route solved alongside as a cross-check.
ColleyResult colley(const Graph& g, std::span<const double> f, double tol = 1e-13);

}  // namespace pagerank
