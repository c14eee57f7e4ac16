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

#include "pagerank/isorank.hpp"

#include <cmath>
#include <sstream>

#include "pagerank/construct.hpp"
#include "pagerank/problem.hpp"
#include "pagerank/solver.hpp"

namespace pagerank {

KronOperator::KronOperator(StochasticOperator p, StochasticOperator q) : p_(std::move(p)), q_(std::move(q)) {}

DenseMatrix KronOperator::apply(const DenseMatrix& x) const {
    const Index n = rows();
    const Index m = cols();
    if (x.rows() != n || x.cols() != m) {
        throw ValidationError("kron_apply: X must be " + std::to_string(n) + "x" + std::to_string(m));
    }
    // Y = P X, column by column.
    DenseMatrix y(n, m);
    for (Index j = 0; j < m; ++j) p_.apply<double>(x.column(j), y.column(j));
    // Z = Y Qᵀ, i.e. each row of Z is Q applied to the same row of Y.
    DenseMatrix z(n, m);
    std::vector<double> row(m), out(m);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < m; ++j) row[j] = y(i, j);
        q_.apply<double>(row, out);
        for (Index j = 0; j < m; ++j) z(i, j) = out[j];
    }
    return z;
}

DenseMatrix kron_apply(const KronOperator& op, const DenseMatrix& x) { return op.apply(x); }

StochasticOperator isorank_chain(const Graph& g) {
    return StochasticOperator(random_walk(g), Correction::strongly_preferential, uniform_distribution(g.num_nodes()));
}

IsoRankResult isorank_solve(const KronOperator& op, double alpha, const DenseMatrix& v, double tol) {
    validate_alpha(alpha);
    if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
    if (v.rows() != op.rows() || v.cols() != op.cols()) throw ValidationError("teleportation matrix has the wrong shape");
    if (!op.p().is_stochastic() || !op.q().is_stochastic()) {
        throw ValidationError("IsoRank needs column-stochastic P and Q");
    }
    double mass = 0.0;
    for (const double x : v.data()) {
        if (!std::isfinite(x) || x < 0.0) throw ValidationError("teleportation matrix must be nonnegative");
        mass += x;
    }
    if (std::abs(mass - 1.0) > 1e-12) throw ValidationError("teleportation matrix must sum to 1");

    const std::size_t cap = iteration_cap(alpha, tol);
    DenseMatrix x = v;
    std::vector<double> history;
    for (std::size_t k = 0; k < cap; ++k) {
        DenseMatrix next = op.apply(x);
        double resid = 0.0;
        auto nd = next.data();
        const auto xd = x.data();
        const auto vd = v.data();
        for (std::size_t i = 0; i < nd.size(); ++i) {
            nd[i] = alpha * nd[i] + (1.0 - alpha) * vd[i];
            resid += std::abs(nd[i] - xd[i]);
        }
        x = std::move(next);
        history.push_back(resid);
        if (resid / (1.0 - alpha) <= tol) return IsoRankResult{std::move(x), k + 1, resid};
    }
    throw ConvergenceError("IsoRank iteration did not converge", std::move(history));
}

std::vector<Match> greedy_match(const DenseMatrix& x) {
    const Index n = x.rows();
    const Index m = x.cols();
    for (const double v : x.data()) {
        if (!(v >= 0.0)) throw ValidationError("greedy_match needs a nonnegative matrix");
    }
    std::vector<bool> row_used(n, false), col_used(m, false);
    std::vector<Match> out;
    while (out.size() < std::min(n, m)) {
        double best = -1.0;
        for (Index i = 0; i < n; ++i) {
            if (row_used[i]) continue;
            for (Index j = 0; j < m; ++j) {
                if (!col_used[j]) best = std::max(best, x(i, j));
            }
        }
        const double floor = best - 1e-12 * best;
        bool found = false;
        for (Index i = 0; i < n && !found; ++i) {
            if (row_used[i]) continue;
            for (Index j = 0; j < m; ++j) {
                if (!col_used[j] && x(i, j) >= floor) {
                    out.push_back({i, j, x(i, j)});
                    row_used[i] = true;
                    col_used[j] = true;
                    found = true;
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace pagerank
