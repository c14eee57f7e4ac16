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

#include "pagerank/solver.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace pagerank {

namespace {

double norm1(std::span<const double> x) {
    double s = 0.0;
    for (const double v : x) s += std::abs(v);
    return s;
}

std::size_t cap_for(double alpha, double target) {
    const double k = std::ceil(std::log(target) / std::log(alpha));
    return static_cast<std::size_t>(std::max(0.0, k)) + 8;
}

// Shared Richardson loop for x ← α·apply(x) + b.
template <class Apply>
Solution richardson(double alpha, Apply&& apply, std::span<const double> b, std::vector<double> x,
                    double stop_threshold, std::size_t cap, const SolveOptions& opts, SolutionKind kind) {
    const std::size_t n = b.size();
    std::vector<double> next(n);
    std::vector<double> history;
    if (opts.on_iterate) opts.on_iterate(0, x);
    for (std::size_t k = 0; k < cap; ++k) {
        apply(x, next);
        double resid = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = alpha * next[i] + b[i];
            resid += std::abs(next[i] - x[i]);
        }
        x.swap(next);
        history.push_back(resid);
        if (opts.on_iterate) opts.on_iterate(k + 1, x);
        if (resid / (1.0 - alpha) <= stop_threshold) {
            return Solution{std::move(x), k + 1, resid, kind, 1.0};
        }
    }
    std::ostringstream msg;
    msg << "no convergence within " << cap << " iterations (last residual "
        << (history.empty() ? 0.0 : history.back()) << ")";
    throw ConvergenceError(msg.str(), std::move(history));
}

}  // namespace

std::size_t iteration_cap(double alpha, double tol) {
    validate_alpha(alpha);
    return cap_for(alpha, tol * (1.0 - alpha) / 2.0);
}

Solution solve(const PageRankProblem& p, const SolveOptions& opts) {
    if (!(opts.tol > 0.0)) throw ValidationError("tolerance must be positive");
    const double alpha = p.alpha();
    const auto v = p.v();
    std::vector<double> b(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) b[i] = (1.0 - alpha) * v[i];
    std::vector<double> x0 = opts.start == StartVector::teleport ? std::vector<double>(v.begin(), v.end())
                                                                 : std::vector<double>(v.size(), 0.0);
    const auto& op = p.op();
    auto apply = [&op](std::span<const double> x, std::span<double> y) { op.apply<double>(x, y); };
    return richardson(alpha, apply, b, std::move(x0), opts.tol, iteration_cap(alpha, opts.tol), opts,
                      SolutionKind::pagerank);
}

Solution solve_pseudo(const PseudoProblem& p, const SolveOptions& opts) {
    if (!(opts.tol > 0.0)) throw ValidationError("tolerance must be positive");
    const double alpha = p.alpha();
    const auto f = p.f();
    const double mass = norm1(f);
    std::vector<double> x0(f.size(), 0.0);
    if (opts.start == StartVector::teleport) {
        for (std::size_t i = 0; i < f.size(); ++i) x0[i] = f[i] / (1.0 - alpha);
    }
    const auto& pbar = p.pbar().pbar;
    auto apply = [&pbar](std::span<const double> x, std::span<double> y) { pbar.multiply<double>(x, y); };
    const std::size_t cap = cap_for(alpha, opts.tol * (1.0 - alpha) * (1.0 - alpha) / 2.0);
    return richardson(alpha, apply, f, std::move(x0), opts.tol * mass, cap, opts, SolutionKind::pseudo);
}

Solution normalize_to_pagerank(const Solution& pseudo) {
    double total = 0.0;
    for (const double y : pseudo.x) total += y;
    if (!(total > 0.0)) throw DegenerateError("cannot normalize a solution with nonpositive total mass");
    Solution out = pseudo;
    for (auto& xi : out.x) xi /= total;
    out.kind = SolutionKind::pagerank;
    out.scale = 1.0 / total;
    out.residual_1norm = pseudo.residual_1norm / total;
    return out;
}

std::vector<double> solve_dense_system(double alpha, const DenseMatrix& m, std::span<const double> rhs) {
    const Index n = m.rows();
    if (m.cols() != n || rhs.size() != n) throw ValidationError("dense system: shape mismatch");
    DenseMatrix a(n, n);
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) a(i, j) = (i == j ? 1.0 : 0.0) - alpha * m(i, j);
    }
    return lu_solve(std::move(a), std::vector<double>(rhs.begin(), rhs.end()));
}

std::vector<double> solve_dense_oracle(double alpha, const DenseMatrix& p, std::span<const double> v) {
    if (p.rows() > 2000) throw ValidationError("dense oracle limited to n <= 2000");
    std::vector<double> rhs(v.begin(), v.end());
    for (auto& r : rhs) r *= 1.0 - alpha;
    return solve_dense_system(alpha, p, rhs);
}

void write_scores_tsv(std::ostream& out, std::span<const double> x) {
    char buf[64];
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu\t%.17g\n", i, x[i]);
        out << buf;
    }
}

}  // namespace pagerank
