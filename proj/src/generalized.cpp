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

#include "pagerank/generalized.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pagerank/problem.hpp"

namespace pagerank {

namespace {

constexpr std::size_t kMaxTerms = 100'000'000;

double norm1(std::span<const double> x) {
    double s = 0.0;
    for (const double v : x) s += std::abs(v);
    return s;
}

}  // namespace

DampingSequence DampingSequence::geometric(double alpha) {
    validate_alpha(alpha);
    return DampingSequence(
        Kind::geometric, [alpha](std::size_t k) { return std::pow(alpha, static_cast<double>(k)); },
        [alpha](std::size_t K) { return std::pow(alpha, static_cast<double>(K + 1)) / (1.0 - alpha); });
}

DampingSequence DampingSequence::totalrank() {
    return DampingSequence(
        Kind::totalrank,
        [](std::size_t k) {
            const double kk = static_cast<double>(k);
            return 1.0 / ((kk + 1.0) * (kk + 2.0));
        },
        [](std::size_t K) { return 1.0 / (static_cast<double>(K) + 2.0); });
}

DampingSequence DampingSequence::heat(double beta) {
    if (!(beta >= 0.0 && beta <= 30.0)) {
        throw ValidationError("heat kernel needs 0 <= beta <= 30 for the truncated series");
    }
    auto term = [beta](std::size_t k) {
        if (k == 0) return 1.0;
        if (beta == 0.0) return 0.0;
        const double kk = static_cast<double>(k);
        return std::exp(kk * std::log(beta) - std::lgamma(kk + 1.0));
    };
    return DampingSequence(Kind::heat, term, [beta, term](std::size_t K) {
        const double next = static_cast<double>(K) + 2.0;
        if (next <= beta) return std::numeric_limits<double>::infinity();
        return term(K + 1) / (1.0 - beta / next);
    });
}

DampingSequence DampingSequence::moments(std::function<double(std::size_t)> m, double limit) {
    auto tail = [m, limit](std::size_t K) { return m(K + 1) - limit; };
    return DampingSequence(Kind::moments, [m](std::size_t k) { return m(k) - m(k + 1); }, tail);
}

DampingSequence DampingSequence::custom(std::vector<double> gammas) {
    const std::size_t len = gammas.size();
    auto shared = std::make_shared<const std::vector<double>>(std::move(gammas));
    // Suffix sums give an exact tail.
    auto suffix = std::make_shared<std::vector<double>>(len + 1, 0.0);
    for (std::size_t k = len; k-- > 0;) (*suffix)[k] = (*suffix)[k + 1] + (*shared)[k];
    return DampingSequence(
        Kind::custom, [shared](std::size_t k) { return k < shared->size() ? (*shared)[k] : 0.0; },
        [suffix, len](std::size_t K) { return K + 1 < len ? (*suffix)[K + 1] : 0.0; });
}

DampingSequence DampingSequence::custom(std::function<double(std::size_t)> gamma,
                                        std::function<double(std::size_t)> tail) {
    return DampingSequence(Kind::custom, std::move(gamma), std::move(tail));
}

double DampingSequence::coefficient(std::size_t k) const { return gamma_(k); }

std::optional<double> DampingSequence::tail(std::size_t K) const {
    if (!tail_) return std::nullopt;
    return tail_(K);
}

DampedSum damped_sum(const DampingSequence& seq, const StochasticOperator& p, std::span<const double> f,
                     double tol) {
    if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
    if (f.size() != p.size()) throw ValidationError("f has the wrong length");
    if (!seq.tail(0)) throw ValidationError("damping sequence has no certified tail bound; cannot truncate");

    const std::size_t n = f.size();
    std::vector<double> z(n, 0.0);
    std::vector<double> power(f.begin(), f.end());
    std::vector<double> next(n);
    for (std::size_t K = 0; K < kMaxTerms; ++K) {
        const double g = seq.coefficient(K);
        if (!std::isfinite(g) || g < 0.0) {
            throw ValidationError("damping weight gamma_" + std::to_string(K) + " is negative or not finite");
        }
        if (g != 0.0) {
            for (std::size_t i = 0; i < n; ++i) z[i] += g * power[i];
        }
        p.apply<double>(power, next);
        const double tail = *seq.tail(K) * norm1(next);
        if (tail <= tol) return DampedSum{std::move(z), K + 1, tail};
        power.swap(next);
    }
    throw ConvergenceError("damped sum did not reach the tail tolerance within " + std::to_string(kMaxTerms) +
                               " terms",
                           {});
}

DampedSum damped_sum(const DampingSequence& seq, const SubStochastic& pbar, std::span<const double> f,
                     double tol) {
    return damped_sum(seq, StochasticOperator(pbar, Correction::none), f, tol);
}

std::vector<double> totalrank(const StochasticOperator& p, std::span<const double> v, double tol) {
    validate_distribution(v, p.size(), "teleportation vector v");
    return damped_sum(DampingSequence::totalrank(), p, v, tol).z;
}

std::vector<double> heat_kernel(double beta, const StochasticOperator& p, std::span<const double> f, double tol) {
    return damped_sum(DampingSequence::heat(beta), p, f, tol).z;
}

std::function<double(std::size_t)> uniform_moments(double a, double b) {
    if (!(a >= 0.0 && a < b && b <= 1.0)) throw ValidationError("uniform damping needs 0 <= a < b <= 1");
    return [a, b](std::size_t k) {
        const double kk = static_cast<double>(k) + 1.0;
        return (std::pow(b, kk) - std::pow(a, kk)) / (kk * (b - a));
    };
}

std::vector<double> expected_pagerank(std::function<double(std::size_t)> moments, const StochasticOperator& p,
                                      std::span<const double> v, double tol, double moment_limit) {
    validate_distribution(v, p.size(), "teleportation vector v");
    if (!p.is_stochastic()) throw ValidationError("expected PageRank needs a column-stochastic operator");
    auto checked = [moments](std::size_t k) {
        const double m = moments(k);
        if (!(m >= 0.0 && m <= 1.0 + 1e-15)) {
            throw ValidationError("moment E[A^" + std::to_string(k) + "] lies outside [0, 1]");
        }
        return m;
    };
    if (std::abs(checked(0) - 1.0) > 1e-12) throw ValidationError("E[A^0] must equal 1");
    // Increasing moments surface as negative weights inside damped_sum.
    return damped_sum(DampingSequence::moments(checked, moment_limit), p, v, tol).z;
}

ComplexSolution solve_complex(std::complex<double> alpha, const StochasticOperator& p, std::span<const double> v,
                              double tol) {
    const double modulus = std::abs(alpha);
    if (!(modulus < 1.0)) throw ValidationError("complex alpha must satisfy |alpha| < 1");
    if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
    validate_distribution(v, p.size(), "teleportation vector v");
    if (!p.is_stochastic()) throw ValidationError("complex PageRank needs a column-stochastic operator");

    using C = std::complex<double>;
    const std::size_t n = v.size();
    std::vector<C> b(n), x(n), next(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = (1.0 - alpha) * v[i];
        x[i] = v[i];
    }
    std::size_t cap = 8;
    if (modulus > 0.0) {
        cap += static_cast<std::size_t>(std::max(0.0, std::ceil(std::log(tol * (1.0 - modulus) / 2.0) / std::log(modulus))));
    }
    std::vector<double> history;
    for (std::size_t k = 0; k < cap; ++k) {
        p.apply<C>(x, next);
        double resid = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = alpha * next[i] + b[i];
            resid += std::abs(next[i] - x[i]);
        }
        x.swap(next);
        history.push_back(resid);
        if (resid / (1.0 - modulus) <= tol) {
            ComplexSolution sol{std::move(x), std::abs(1.0 - alpha) / (1.0 - modulus), k + 1, resid};
            double norm = 0.0;
            for (const auto& xi : sol.x) norm += std::abs(xi);
            if (norm > sol.bound + 1e-10) {
                std::ostringstream msg;
                msg << "complex PageRank norm " << norm << " exceeds the bound " << sol.bound;
                throw Error(msg.str());
            }
            return sol;
        }
    }
    throw ConvergenceError("complex Richardson iteration did not converge", std::move(history));
}

}  // namespace pagerank
