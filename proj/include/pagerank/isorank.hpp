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

#include <vector>

#include "pagerank/dense.hpp"
#include "pagerank/graph.hpp"
#include "pagerank/operator.hpp"

namespace pagerank {

/// Q ⊗ P acting on vec(X) for X of shape n x m, via (Q ⊗ P) vec(X) = vec(P X Qᵀ).
class KronOperator {
public:
    KronOperator(StochasticOperator p, StochasticOperator q);

    Index rows() const noexcept { return p_.size(); }
    Index cols() const noexcept { return q_.size(); }
    const StochasticOperator& p() const noexcept { return p_; }
    const StochasticOperator& q() const noexcept { return q_; }

    /// P X Qᵀ; the nm x nm product is never formed.
    DenseMatrix apply(const DenseMatrix& x) const;

private:
    StochasticOperator p_;
    StochasticOperator q_;
};

DenseMatrix kron_apply(const KronOperator& op, const DenseMatrix& x);

/// Random walk with dangling columns sent uniformly (strongly preferential
/// with uniform v), so the Kronecker product is stochastic.
StochasticOperator isorank_chain(const Graph& g);

struct IsoRankResult {
    DenseMatrix x;
    std::size_t iterations = 0;
    double residual_1norm = 0.0;
};

/// Solves (I - α Q⊗P) vec(X) = (1-α) vec(V) by Richardson iteration from V.
/// V must be nonnegative with unit total mass.
IsoRankResult isorank_solve(const KronOperator& op, double alpha, const DenseMatrix& v, double tol = 1e-10);

struct Match {
    Index i;
    Index j;
    double score;
};

/// Repeatedly takes the largest remaining entry and deletes its row and
/// column. Entries within a relative 1e-12 of the maximum count as ties and
/// go to the lexicographically smallest (i, j).
std::vector<Match> greedy_match(const DenseMatrix& x);

}  // namespace pagerank
