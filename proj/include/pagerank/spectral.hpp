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

#include <span>
#include <vector>

#include "pagerank/graph.hpp"
#include "pagerank/operator.hpp"

namespace pagerank {

/// Smallest positive generalized eigenpair of (D - A) q = λ D q.
struct FiedlerResult {
    double lambda_star = 0.0;
    std::vector<double> q;         // qᵀDe = 0, qᵀDq = 1, first significant entry positive
    std::size_t multiplicity = 1;  // eigenvalues within 1e-8 of λ*
    double next_eigenvalue = 0.0;  // smallest eigenvalue above the λ* cluster (0 if none)
};

/// Dense symmetric eigensolve of D^{-1/2}(D - A)D^{-1/2}; n <= 2000. Throws
/// ValidationError for directed or tiny graphs and SingularError when the
/// graph is disconnected (λ* numerically zero).
FiedlerResult fiedler(const Graph& g);

struct MovSpec {
    std::vector<double> seed;  // s with sᵀDe = 0
    double gamma = 0.0;
};

struct MovResult {
    std::vector<double> r;  // ‖r‖_D = 1 unless s = 0
    double rho = 0.0;       // scale applied to the ρ = 1 solution
};

/// Solves [(D - A) - γD] r = ρ D s. γ = 0 takes the pseudo-inverse solution.
/// Throws SingularError when γ hits a generalized eigenvalue.
MovResult mov(const Graph& g, const MovSpec& spec);

/// s - (sᵀd / eᵀd) e, the D-orthogonal projection of s off the constant vector.
std::vector<double> project_seed(std::span<const double> s, std::span<const double> d);

/// Shift that makes a right-hand side nonnegative with multiples of d.
struct ShiftedRhs {
    std::vector<double> f;  // f + σd >= 0
    double sigma = 0.0;
    double alpha = 0.0;

    /// Recovers the unshifted solution: y - σ/(1-α) d.
    std::vector<double> recover(std::span<const double> y, std::span<const double> d) const;
};

/// Smallest σ >= 0 with f + σ d >= 0. Needs d > 0 and α != 1.
ShiftedRhs shift_nonneg(std::span<const double> f, std::span<const double> d, double alpha);

struct AlphaLimit {
    std::vector<double> eps;
    std::vector<std::vector<double>> x;  // x(1 - eps[i])
    std::vector<double> cauchy;          // ‖x_{i+1} - x_i‖₁
};

/// PageRank at α = 1 - ε for each ε by dense solves. Requires an irreducible
/// chain (strongly connected pattern of P); refuses reducible ones.
AlphaLimit limit_alpha_to_one(const StochasticOperator& p, std::span<const double> v, std::span<const double> eps);

}  // namespace pagerank
