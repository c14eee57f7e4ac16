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

#include <functional>
#include <span>
#include <vector>

#include "pagerank/dense.hpp"
#include "pagerank/problem.hpp"

namespace pagerank {

inline constexpr double kDefaultAlpha = 0.85;
inline constexpr double kDefaultTolerance = 1e-10;

enum class StartVector { teleport, zero };

enum class SolutionKind { pagerank, pseudo };

struct SolveOptions {
    double tol = kDefaultTolerance;
    StartVector start = StartVector::teleport;
    /// Called with (k, x^(k)) for k = 0, 1, ... including the returned iterate.
    std::function<void(std::size_t, std::span<const double>)> on_iterate;
};

struct Solution {
    std::vector<double> x;
    std::size_t iterations = 0;
    double residual_1norm = 0.0;
    SolutionKind kind = SolutionKind::pagerank;
    /// Factor applied by normalize_to_pagerank (x = scale * y); 1 otherwise.
    double scale = 1.0;
};

/// ⌈log(tol(1-α)/2) / log α⌉ + 8.
std::size_t iteration_cap(double alpha, double tol);

/// Richardson iteration x ← αPx + (1-α)v. Stops once ‖x^(k+1) - x^(k)‖₁/(1-α)
/// ≤ tol, which certifies ‖x - x^(k)‖₁ ≤ tol; returns x^(k+1). Throws
/// ConvergenceError with the residual history if the cap is hit.
Solution solve(const PageRankProblem& p, const SolveOptions& opts = {});

/// y ← αP̄y + f from y^(0) = f/(1-α) (zero start on request). Stops once
/// ‖r‖₁/(1-α) ≤ tol·eᵀf.
Solution solve_pseudo(const PseudoProblem& p, const SolveOptions& opts = {});

/// x = y / eᵀy. Throws DegenerateError for a zero vector.
Solution normalize_to_pagerank(const Solution& pseudo);

/// Dense direct solve of (I - αP) x = (1-α) v by partial pivoting.
std::vector<double> solve_dense_oracle(double alpha, const DenseMatrix& p, std::span<const double> v);

/// Dense direct solve of (I - αM) x = rhs.
std::vector<double> solve_dense_system(double alpha, const DenseMatrix& m, std::span<const double> rhs);

/// "node<TAB>score" lines in node order, 17 significant digits.
void write_scores_tsv(std::ostream& out, std::span<const double> x);

}  // namespace pagerank
