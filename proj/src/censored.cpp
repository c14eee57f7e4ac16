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

#include "pagerank/censored.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "pagerank/construct.hpp"

namespace pagerank {

AugmentedChain::AugmentedChain(ExitKind kind, StochasticOperator block, double scale, std::vector<double> exit,
                               std::vector<double> destination)
    : kind_(kind),
      block_(std::move(block)),
      scale_(scale),
      exit_(std::move(exit)),
      destination_(std::move(destination)) {}

AugmentedChain AugmentedChain::uniform_exit(StochasticOperator p, double alpha, std::vector<double> v) {
    validate_alpha(alpha);
    if (!p.is_stochastic()) throw ValidationError("uniform-exit chain needs a column-stochastic operator");
    validate_distribution(v, p.size(), "teleportation vector v");
    std::vector<double> exit(p.size(), 1.0 - alpha);
    return AugmentedChain(ExitKind::uniform_exit, std::move(p), alpha, std::move(exit), std::move(v));
}

AugmentedChain AugmentedChain::degree_exit(const Graph& g, std::vector<double> v) {
    const Index n = g.num_nodes();
    if (v.size() != n) throw ValidationError("destination vector has the wrong length");
    double mass = 0.0;
    for (const double x : v) {
        if (!std::isfinite(x) || x < 0.0) throw ValidationError("destination vector must be nonnegative");
        mass += x;
    }
    if (!(mass > 0.0)) throw ValidationError("destination vector must be nonzero");
    for (auto& x : v) x /= mass;

    const auto d = degrees(g).out_degrees;
    auto t = g.adjacency().triplets();
    for (auto& e : t) {
        e.value /= d[e.row] + 1.0;
        std::swap(e.row, e.col);
    }
    std::vector<double> exit(n);
    for (Index i = 0; i < n; ++i) exit[i] = 1.0 / (d[i] + 1.0);
    auto block = SubStochastic::from_matrix(SparseMatrix::from_triplets(n, n, std::move(t)));
    return AugmentedChain(ExitKind::degree_exit, StochasticOperator(std::move(block), Correction::none), 1.0,
                          std::move(exit), std::move(v));
}

void AugmentedChain::apply(std::span<const double> x, std::span<double> y) const {
    const Index n = num_nodes();
    if (x.size() != n + 1 || y.size() != n + 1) throw ValidationError("augmented chain: vector length must be n + 1");
    block_.apply<double>(x.first(n), y.first(n));
    const double t = x[n];
    double to_teleport = 0.0;
    for (Index i = 0; i < n; ++i) {
        y[i] = scale_ * y[i] + destination_[i] * t;
        to_teleport += exit_[i] * x[i];
    }
    y[n] = to_teleport;
}

DenseMatrix AugmentedChain::to_dense() const {
    const Index n = num_nodes();
    DenseMatrix out(n + 1, n + 1);
    const auto block = block_.to_dense();
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) out(i, j) = scale_ * block(i, j);
        out(n, j) = exit_[j];
        out(j, n) = destination_[j];
    }
    return out;
}

Solution censored_stationary(const AugmentedChain& chain, double tol) {
    if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
    const Index m = chain.num_nodes() + 1;
    constexpr std::size_t kCap = 10'000'000;
    std::vector<double> x(m, 1.0 / static_cast<double>(m));
    std::vector<double> y(m);
    std::vector<double> history;
    for (std::size_t k = 0; k < kCap; ++k) {
        chain.apply(x, y);
        double diff = 0.0;
        for (Index i = 0; i < m; ++i) {
            y[i] = 0.5 * (x[i] + y[i]);
            diff += std::abs(y[i] - x[i]);
        }
        x.swap(y);
        if (history.size() < 1000) history.push_back(diff);
        if (diff <= tol) {
            x.pop_back();
            double mass = 0.0;
            for (const double xi : x) mass += xi;
            if (!(mass > 0.0)) throw DegenerateError("censored distribution has no mass outside the teleport state");
            for (auto& xi : x) xi /= mass;
            return Solution{std::move(x), k + 1, diff, SolutionKind::pagerank, 1.0 / mass};
        }
    }
    throw ConvergenceError("augmented chain power iteration did not converge", std::move(history));
}

CensoredNodeProblem censored_node_problem(const Graph& g, std::span<const double> v) {
    if (g.num_edges() == 0) throw ValidationError("censored-node construction needs at least one edge");
    const Index n = g.num_nodes();
    const auto d = degrees(g).out_degrees;

    auto t = g.adjacency().triplets();
    for (auto& e : t) {
        e.value /= d[e.row] + 1.0;
        std::swap(e.row, e.col);
    }
    auto leaky = SparseMatrix::from_triplets(n, n, std::move(t));
    std::vector<double> c(n);
    for (Index i = 0; i < n; ++i) c[i] = 1.0 / (d[i] + 1.0);
    const double alpha = 1.0 - *std::min_element(c.begin(), c.end());

    auto rescaled = SubStochastic::from_matrix(leaky.scaled(1.0 / alpha));
    return CensoredNodeProblem{PseudoProblem(alpha, std::move(rescaled), std::vector<double>(v.begin(), v.end())),
                               alpha, std::move(leaky), std::move(c)};
}

ColleyResult colley(const Graph& g, std::span<const double> f, double tol) {
    if (g.directed()) throw ValidationError("Colley ratings need an undirected game graph");
    const Index n = g.num_nodes();
    if (f.size() != n) throw ValidationError("score-difference vector has the wrong length");
    for (const double x : f) {
        if (!std::isfinite(x)) throw ValidationError("score differences must be finite");
    }
    const auto d = degrees(g).out_degrees;

    ColleyResult out;
    const auto N = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
    Eigen::VectorXd rhs(N);
    for (Index i = 0; i < n; ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i] + 2.0;
        rhs(static_cast<Eigen::Index>(i)) = f[i];
    }
    for (const auto& e : g.adjacency().triplets()) {
        m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) -= e.value;
    }
    const Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) throw Error("Colley matrix is not positive definite");
    const Eigen::VectorXd r = llt.solve(rhs);
    out.ratings.assign(r.data(), r.data() + n);

    const double d_max = n == 0 ? 0.0 : *std::max_element(d.begin(), d.end());
    if (d_max == 0.0) {
        out.pseudo_ratings = out.ratings;
        return out;
    }
    out.alpha = d_max / (d_max + 2.0);

    // y = (D+2I) r solves (I - A(D+2I)⁻¹) y = f, and (D+2I)e solves it for 2e.
    auto t = g.adjacency().triplets();
    for (auto& e : t) e.value /= (d[e.col] + 2.0) * out.alpha;
    auto pbar = SubStochastic::from_matrix(SparseMatrix::from_triplets(n, n, std::move(t)));

    out.sigma = std::max(0.0, -*std::min_element(f.begin(), f.end())) / 2.0;
    std::vector<double> shifted(n);
    bool nonzero = false;
    for (Index i = 0; i < n; ++i) {
        shifted[i] = std::max(0.0, f[i] + 2.0 * out.sigma);
        nonzero = nonzero || shifted[i] != 0.0;
    }
    std::vector<double> y(n, 0.0);
    if (nonzero) {
        out.problem.emplace(out.alpha, std::move(pbar), std::move(shifted));
        SolveOptions opts;
        opts.tol = tol;
        y = solve_pseudo(*out.problem, opts).x;
    }
    out.pseudo_ratings.resize(n);
    double scale = 1.0;
    for (Index i = 0; i < n; ++i) {
        out.pseudo_ratings[i] = y[i] / (d[i] + 2.0) - out.sigma;
        out.route_gap = std::max(out.route_gap, std::abs(out.pseudo_ratings[i] - out.ratings[i]));
        scale = std::max(scale, std::abs(out.ratings[i]));
    }
    if (out.route_gap > 1e-8 * scale) {
        std::ostringstream msg;
        msg << "Colley routes disagree by " << out.route_gap;
        throw Error(msg.str());
    }
    return out;
}

}  // namespace pagerank
