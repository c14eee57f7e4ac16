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

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pagerank/operator.hpp"

namespace pagerank {

/// Nonnegative summable weights γ_k for z = Σ γ_k P̄^k f, each kind paired
/// with a certified bound on the tail Σ_{k>K} γ_k.
class DampingSequence {
public:
    enum class Kind { geometric, totalrank, heat, moments, custom };

    /// γ_k = α^k, 0 < α < 1.
    static DampingSequence geometric(double alpha);
    /// γ_k = 1/(k+1) - 1/(k+2).
    static DampingSequence totalrank();
    /// γ_k = β^k / k!, 0 <= β <= 30.
    static DampingSequence heat(double beta);
    /// γ_k = m(k) - m(k+1) for moments m(k) = E[A^k] of a random damping
    /// factor A on [0, 1]; `limit` is lim m(k) (the atom of A at 1).
    static DampingSequence moments(std::function<double(std::size_t)> m, double limit = 0.0);
    /// Finitely many weights; the tail after the last one is zero.
    static DampingSequence custom(std::vector<double> gammas);
    /// Arbitrary weights. Without a tail bound the sequence cannot be summed.
    static DampingSequence custom(std::function<double(std::size_t)> gamma,
                                  std::function<double(std::size_t)> tail = {});

    Kind kind() const noexcept { return kind_; }
    double coefficient(std::size_t k) const;
    /// Bound on Σ_{k>K} γ_k, or nullopt when no certified bound exists.
    std::optional<double> tail(std::size_t K) const;

private:
    DampingSequence(Kind kind, std::function<double(std::size_t)> gamma,
                    std::function<double(std::size_t)> tail)
        : kind_(kind), gamma_(std::move(gamma)), tail_(std::move(tail)) {}

    Kind kind_;
    std::function<double(std::size_t)> gamma_;
    std::function<double(std::size_t)> tail_;
};

struct DampedSum {
    std::vector<double> z;
    std::size_t terms = 0;      // γ_0 .. γ_{terms-1} were summed
    double tail_bound = 0.0;    // certified ‖z_true - z‖₁ bound
};

/// Σ_k γ_k P^k f by forward accumulation of P^k f. Truncates at the first K
/// with tail(K) · ‖P^{K+1} f‖₁ ≤ tol. Throws ValidationError when the
/// sequence has no tail bound.
DampedSum damped_sum(const DampingSequence& seq, const StochasticOperator& p, std::span<const double> f,
                     double tol);
DampedSum damped_sum(const DampingSequence& seq, const SubStochastic& pbar, std::span<const double> f,
                     double tol);

/// ∫₀¹ (I - αP̄)⁻¹ (1-α) v dα as a damped sum.
std::vector<double> totalrank(const StochasticOperator& p, std::span<const double> v, double tol);

/// e^{βP̄} f. β must lie in [0, 30].
std::vector<double> heat_kernel(double beta, const StochasticOperator& p, std::span<const double> f, double tol);

/// E[x(A)] = Σ (m(k) - m(k+1)) P^k v for moments m of A on [0, 1]. Moments
/// must be nonincreasing and within [0, 1].
std::vector<double> expected_pagerank(std::function<double(std::size_t)> moments, const StochasticOperator& p,
                                      std::span<const double> v, double tol, double moment_limit = 0.0);

/// Moments E[A^k] of A ~ Uniform[a, b], 0 <= a < b <= 1.
std::function<double(std::size_t)> uniform_moments(double a, double b);

struct ComplexSolution {
    std::vector<std::complex<double>> x;
    double bound = 0.0;  // |1-α| / (1-|α|)
    std::size_t iterations = 0;
    double residual_1norm = 0.0;
};

/// (I - αP) x = (1-α) v for complex α with |α| < 1, by the same Richardson
/// iteration in complex arithmetic. Verifies ‖x‖₁ ≤ bound + 1e-10.
ComplexSolution solve_complex(std::complex<double> alpha, const StochasticOperator& p, std::span<const double> v,
                              double tol = 1e-10);

}  // namespace pagerank
