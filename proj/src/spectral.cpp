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

#include "pagerank/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "pagerank/problem.hpp"

namespace pagerank {

namespace {

constexpr Index kDenseLimit = 2000;

// Eigendecomposition of the normalized Laplacian D^{-1/2}(D - A)D^{-1/2}.
struct NormalizedLaplacian {
    std::vector<double> degree;
    std::vector<double> inv_sqrt_degree;
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

void require_undirected_connected(const Graph& g, const char* what) {
    if (g.directed()) throw ValidationError(std::string(what) + " needs an undirected graph");
    if (g.num_nodes() < 2) throw ValidationError(std::string(what) + " needs at least two nodes");
    if (g.num_nodes() > kDenseLimit) throw ValidationError(std::string(what) + " is limited to n <= 2000");
}

NormalizedLaplacian normalized_laplacian(const Graph& g) {
    const Index n = g.num_nodes();
    NormalizedLaplacian out;
    out.degree = degrees(g).out_degrees;
    out.inv_sqrt_degree.resize(n);
    for (Index i = 0; i < n; ++i) {
        if (out.degree[i] <= 0.0) {
            throw SingularError("node " + std::to_string(i) +
                                " is isolated; eigenvalue 0 has multiplicity > 1 (graph is disconnected)");
        }
        out.inv_sqrt_degree[i] = 1.0 / std::sqrt(out.degree[i]);
    }
    Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& t : g.adjacency().triplets()) {
        lap(static_cast<Eigen::Index>(t.row), static_cast<Eigen::Index>(t.col)) -=
            t.value * out.inv_sqrt_degree[t.row] * out.inv_sqrt_degree[t.col];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver failed");
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    return out;
}

double d_norm(std::span<const double> r, std::span<const double> d) {
    double s = 0.0;
    for (Index i = 0; i < r.size(); ++i) s += d[i] * r[i] * r[i];
    return std::sqrt(s);
}

}  // namespace

FiedlerResult fiedler(const Graph& g) {
    require_undirected_connected(g, "fiedler");
    const auto lap = normalized_laplacian(g);
    const Index n = g.num_nodes();
    const double lambda = lap.eigenvalues(1);
    if (lambda < 1e-10) {
        throw SingularError("eigenvalue 0 has multiplicity > 1: graph is disconnected");
    }
    FiedlerResult out;
    out.lambda_star = lambda;
    out.multiplicity = 0;
    for (Index i = 1; i < n; ++i) {
        const double mu = lap.eigenvalues(static_cast<Eigen::Index>(i));
        if (mu - lambda <= 1e-8) {
            ++out.multiplicity;
        } else {
            out.next_eigenvalue = mu;
            break;
        }
    }
    out.q.resize(n);
    for (Index i = 0; i < n; ++i) out.q[i] = lap.eigenvectors(static_cast<Eigen::Index>(i), 1) * lap.inv_sqrt_degree[i];
    for (const double qi : out.q) {
        if (std::abs(qi) > 1e-12) {
            if (qi < 0.0) {
                for (auto& x : out.q) x = -x;
            }
            break;
        }
    }
    return out;
}

std::vector<double> project_seed(std::span<const double> s, std::span<const double> d) {
    if (s.size() != d.size()) throw ValidationError("seed and degree vectors differ in length");
    double sd = 0.0, total = 0.0;
    for (Index i = 0; i < s.size(); ++i) {
        sd += s[i] * d[i];
        total += d[i];
    }
    if (!(total > 0.0)) throw DegenerateError("cannot project a seed on a graph without edges");
    std::vector<double> out(s.begin(), s.end());
    for (auto& x : out) x -= sd / total;
    return out;
}

MovResult mov(const Graph& g, const MovSpec& spec) {
    require_undirected_connected(g, "mov");
    const Index n = g.num_nodes();
    if (spec.seed.size() != n) throw ValidationError("seed vector has the wrong length");
    if (!std::isfinite(spec.gamma)) throw ValidationError("gamma must be finite");
    const auto lap = normalized_laplacian(g);
    const auto& d = lap.degree;

    double sd = 0.0, s_norm = 0.0, d_max = 0.0;
    for (Index i = 0; i < n; ++i) {
        sd += spec.seed[i] * d[i];
        s_norm += std::abs(spec.seed[i]);
        d_max = std::max(d_max, d[i]);
    }
    if (std::abs(sd) > 1e-10 * s_norm * d_max) {
        std::ostringstream msg;
        msg << "seed must satisfy s^T D e = 0 (got " << sd << ")";
        throw ValidationError(msg.str());
    }
    if (s_norm == 0.0) return MovResult{std::vector<double>(n, 0.0), 0.0};

    const double gamma = spec.gamma;
    const double scale = std::max(1.0, std::abs(gamma));
    for (Index i = gamma == 0.0 ? 1 : 0; i < n; ++i) {
        if (std::abs(lap.eigenvalues(static_cast<Eigen::Index>(i)) - gamma) <= 1e-12 * scale) {
            std::ostringstream msg;
            msg << "gamma = " << gamma << " coincides with a generalized eigenvalue";
            throw SingularError(msg.str());
        }
    }

    std::vector<double> r(n, 0.0);
    const auto N = static_cast<Eigen::Index>(n);
    if (gamma == 0.0) {
        // Minimum ‖·‖_D solution: expand D^{1/2} s in the eigenbasis, skipping the null vector.
        Eigen::VectorXd b(N);
        for (Index i = 0; i < n; ++i) b(static_cast<Eigen::Index>(i)) = spec.seed[i] * std::sqrt(d[i]);
        Eigen::VectorXd w = Eigen::VectorXd::Zero(N);
        for (Eigen::Index k = 1; k < N; ++k) {
            const auto u = lap.eigenvectors.col(k);
            w += (u.dot(b) / lap.eigenvalues(k)) * u;
        }
        for (Index i = 0; i < n; ++i) r[i] = w(static_cast<Eigen::Index>(i)) * lap.inv_sqrt_degree[i];
    } else {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
        Eigen::VectorXd rhs(N);
        for (Index i = 0; i < n; ++i) {
            const auto ii = static_cast<Eigen::Index>(i);
            m(ii, ii) = (1.0 - gamma) * d[i];
            rhs(ii) = d[i] * spec.seed[i];
        }
        for (const auto& t : g.adjacency().triplets()) {
            m(static_cast<Eigen::Index>(t.row), static_cast<Eigen::Index>(t.col)) -= t.value;
        }
        const Eigen::VectorXd sol = m.partialPivLu().solve(rhs);
        for (Index i = 0; i < n; ++i) r[i] = sol(static_cast<Eigen::Index>(i));
    }
    const double norm = d_norm(r, d);
    if (!(norm > 0.0)) throw DegenerateError("MOV solution vanished");
    for (auto& x : r) x /= norm;
    return MovResult{std::move(r), 1.0 / norm};
}

std::vector<double> ShiftedRhs::recover(std::span<const double> y, std::span<const double> d) const {
    if (y.size() != d.size()) throw ValidationError("recover: length mismatch");
    std::vector<double> z(y.begin(), y.end());
    const double offset = sigma / (1.0 - alpha);
    for (Index i = 0; i < z.size(); ++i) z[i] -= offset * d[i];
    return z;
}

ShiftedRhs shift_nonneg(std::span<const double> f, std::span<const double> d, double alpha) {
    if (f.size() != d.size()) throw ValidationError("shift_nonneg: length mismatch");
    if (alpha == 1.0 || !std::isfinite(alpha)) throw ValidationError("shift_nonneg needs a finite alpha != 1");
    double sigma = 0.0;
    for (Index i = 0; i < f.size(); ++i) {
        if (!(d[i] > 0.0)) throw ValidationError("shift_nonneg needs strictly positive degrees");
        if (!std::isfinite(f[i])) throw ValidationError("shift_nonneg needs a finite right-hand side");
        sigma = std::max(sigma, -f[i] / d[i]);
    }
    ShiftedRhs out{std::vector<double>(f.begin(), f.end()), sigma, alpha};
    for (Index i = 0; i < f.size(); ++i) out.f[i] = std::max(0.0, out.f[i] + sigma * d[i]);
    return out;
}

AlphaLimit limit_alpha_to_one(const StochasticOperator& p, std::span<const double> v, std::span<const double> eps) {
    const Index n = p.size();
    if (n > kDenseLimit) throw ValidationError("limit_alpha_to_one is limited to n <= 2000");
    if (!p.is_stochastic()) throw ValidationError("limit_alpha_to_one needs a column-stochastic operator");
    validate_distribution(v, n, "teleportation vector v");

    const DenseMatrix dense = p.to_dense();
    std::vector<Triplet> pattern;
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
            if (dense(i, j) > 0.0) pattern.push_back({j, i, 1.0});
        }
    }
    if (!is_strongly_connected(SparseMatrix::from_triplets(n, n, std::move(pattern)))) {
        throw ValidationError("chain is reducible; the alpha -> 1 limit is not computed for reducible chains");
    }

    const auto N = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd pm(N, N);
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) pm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dense(i, j);
    }
    Eigen::VectorXd ve(N);
    for (Index i = 0; i < n; ++i) ve(static_cast<Eigen::Index>(i)) = v[i];

    AlphaLimit out;
    for (const double e : eps) {
        if (!(e > 0.0 && e < 1.0)) throw ValidationError("each epsilon must lie in (0, 1)");
        const double alpha = 1.0 - e;
        const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(N, N) - alpha * pm;
        const Eigen::VectorXd x = m.partialPivLu().solve((1.0 - alpha) * ve);
        std::vector<double> xv(n);
        for (Index i = 0; i < n; ++i) xv[i] = x(static_cast<Eigen::Index>(i));
        if (!out.x.empty()) {
            double diff = 0.0;
            for (Index i = 0; i < n; ++i) diff += std::abs(xv[i] - out.x.back()[i]);
            out.cauchy.push_back(diff);
        }
        out.eps.push_back(e);
        out.x.push_back(std::move(xv));
    }
    return out;
}

}  // namespace pagerank
