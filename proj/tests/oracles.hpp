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

// Independent reference computations for the test suites. Everything here is
// built on Eigen, Boost or plain loops so that it shares no numerical code
// with the library routines it checks.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pagerank/dense.hpp"
#include "pagerank/graph.hpp"

namespace oracle {

using pagerank::DenseMatrix;
using pagerank::Graph;
using pagerank::Index;

// Deterministic random directed graph with edge probability p. When
// allow_dangling is false every node gets at least one out-edge.
Graph random_digraph(Index n, double p, std::uint64_t seed, bool allow_dangling = true, bool weighted = false);

// Connected undirected graph: a random spanning tree plus extra edges.
Graph random_connected_undirected(Index n, double p, std::uint64_t seed);

// Uniform probability vector on n nodes with random positive weights.
std::vector<double> random_distribution(Index n, std::uint64_t seed);

// Column-stochastic dense P̄ = AᵀD⁺ built directly from the adjacency.
DenseMatrix walk_matrix(const Graph& g);

// Dense (I - αP)⁻¹ (1-α) v via Eigen's LU.
std::vector<double> pagerank(double alpha, const DenseMatrix& p, std::span<const double> v);

// Dense solve of (I - αM) y = f via Eigen's LU.
std::vector<double> linear_solve(double alpha, const DenseMatrix& m, std::span<const double> f);

// Stationary distribution of a column-stochastic irreducible matrix, from
// the eigenvector of eigenvalue 1.
std::vector<double> stationary(const DenseMatrix& p);

// exp(βM) f via Eigen's scaling-and-squaring matrix exponential.
std::vector<double> expm_apply(double beta, const DenseMatrix& m, std::span<const double> f);

// ∫_a^b g(t) dt componentwise by adaptive Gauss-Kronrod.
std::vector<double> integrate(const std::function<std::vector<double>(double)>& g, Index n, double a, double b,
                              double tol);

double norm1(std::span<const double> x);
double dist1(std::span<const double> a, std::span<const double> b);
double max_abs_diff(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> x);

}  // namespace oracle
