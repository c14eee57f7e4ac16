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

#include <memory>
#include <span>
#include <vector>

#include "pagerank/dense.hpp"
#include "pagerank/sparse_matrix.hpp"

namespace pagerank {

/// Column sub-stochastic matrix P̄ with its correction c = e - P̄ᵀe.
struct SubStochastic {
    SparseMatrix pbar;
    std::vector<double> correction;

    /// Computes the correction from the column sums. Throws ValidationError if
    /// the matrix is not square or a column sums above 1 + 1e-12; deficits
    /// within rounding (|c| <= 1e-14) are snapped to zero.
    static SubStochastic from_matrix(SparseMatrix pbar);

    Index size() const noexcept { return pbar.rows(); }
};

/// How the dangling deficit c is patched to make the walk stochastic.
enum class Correction {
    none,                  // P = P̄
    strongly_preferential, // P = P̄ + v cᵀ
    weakly_preferential,   // P = P̄ + u cᵀ
    sink_preferential,     // P = P̄ + diag(c)
};

/// P̄ plus an implicit rank-1 or diagonal correction. apply() costs
/// O(nnz + n); the correction is never formed.
class StochasticOperator {
public:
    StochasticOperator() = default;
    /// `dist` is the redistribution vector for the preferential modes (v or u)
    /// and must be a probability vector; it is ignored otherwise.
    StochasticOperator(SubStochastic base, Correction mode, std::vector<double> dist = {});

    template <class T>
    void apply(std::span<const T> x, std::span<T> y) const;
    std::vector<double> apply(std::span<const double> x) const;

    Index size() const noexcept { return base_ ? base_->size() : 0; }
    Correction mode() const noexcept { return mode_; }
    const SubStochastic& base() const { return *base_; }
    std::span<const double> dist() const noexcept { return dist_; }

    /// True when eᵀP = eᵀ, i.e. a correction is applied or c vanishes.
    bool is_stochastic(double tol = 1e-12) const;

    /// Column sums of the implicit matrix.
    std::vector<double> column_sums() const;

    /// Explicit matrix. For oracles and small problems only.
    DenseMatrix to_dense() const;

private:
    std::shared_ptr<const SubStochastic> base_;
    Correction mode_ = Correction::none;
    std::vector<double> dist_;
};

/// Throws ValidationError unless `p` has length n, is nonnegative and finite,
/// and sums to 1 within 1e-12.
void validate_distribution(std::span<const double> p, Index n, const char* name);

std::vector<double> uniform_distribution(Index n);

template <class T>
void StochasticOperator::apply(std::span<const T> x, std::span<T> y) const {
    const auto& b = *base_;
    b.pbar.multiply<T>(x, y);
    const auto& c = b.correction;
    switch (mode_) {
        case Correction::none:
            break;
        case Correction::strongly_preferential:
        case Correction::weakly_preferential: {
            T leak{};
            for (Index j = 0; j < c.size(); ++j) leak += c[j] * x[j];
            if (leak != T{}) {
                for (Index i = 0; i < dist_.size(); ++i) y[i] += dist_[i] * leak;
            }
            break;
        }
        case Correction::sink_preferential:
            for (Index j = 0; j < c.size(); ++j) y[j] += c[j] * x[j];
            break;
    }
}

}  // namespace pagerank
