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

#include "pagerank/operator.hpp"

#include <cmath>
#include <string>

namespace pagerank {

SubStochastic SubStochastic::from_matrix(SparseMatrix pbar) {
    if (pbar.rows() != pbar.cols()) throw ValidationError("sub-stochastic matrix must be square");
    auto c = pbar.column_sums();
    for (Index j = 0; j < c.size(); ++j) {
        if (c[j] > 1.0 + 1e-12) {
            throw ValidationError("column " + std::to_string(j) + " sums to " + std::to_string(c[j]) +
                                  " > 1; matrix is not column sub-stochastic");
        }
        c[j] = 1.0 - c[j];
        if (std::abs(c[j]) <= 1e-14) c[j] = 0.0;
    }
    return SubStochastic{std::move(pbar), std::move(c)};
}

void validate_distribution(std::span<const double> p, Index n, const char* name) {
    if (p.size() != n) {
        throw ValidationError(std::string(name) + " has length " + std::to_string(p.size()) + ", expected " +
                              std::to_string(n));
    }
    double sum = 0.0;
    for (const double x : p) {
        if (!std::isfinite(x) || x < 0.0) {
            throw ValidationError(std::string(name) + " must be nonnegative and finite");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ValidationError(std::string(name) + " must sum to 1 (sums to " + std::to_string(sum) + ")");
    }
}

std::vector<double> uniform_distribution(Index n) {
    return std::vector<double>(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
}

StochasticOperator::StochasticOperator(SubStochastic base, Correction mode, std::vector<double> dist)
    : base_(std::make_shared<const SubStochastic>(std::move(base))), mode_(mode) {
    if (mode_ == Correction::strongly_preferential || mode_ == Correction::weakly_preferential) {
        validate_distribution(dist, base_->size(),
                              mode_ == Correction::strongly_preferential ? "teleportation vector v"
                                                                         : "dangling distribution u");
        dist_ = std::move(dist);
    }
}

std::vector<double> StochasticOperator::apply(std::span<const double> x) const {
    std::vector<double> y(size());
    apply<double>(x, y);
    return y;
}

bool StochasticOperator::is_stochastic(double tol) const {
    if (mode_ != Correction::none) return true;
    for (const double c : base_->correction) {
        if (c > tol) return false;
    }
    return true;
}

std::vector<double> StochasticOperator::column_sums() const {
    auto s = base_->pbar.column_sums();
    if (mode_ != Correction::none) {
        for (Index j = 0; j < s.size(); ++j) s[j] += base_->correction[j];
    }
    return s;
}

DenseMatrix StochasticOperator::to_dense() const {
    auto d = pagerank::to_dense(base_->pbar);
    const auto& c = base_->correction;
    const Index n = size();
    for (Index j = 0; j < n; ++j) {
        if (c[j] == 0.0) continue;
        switch (mode_) {
            case Correction::none:
                break;
            case Correction::strongly_preferential:
            case Correction::weakly_preferential:
                for (Index i = 0; i < n; ++i) d(i, j) += dist_[i] * c[j];
                break;
            case Correction::sink_preferential:
                d(j, j) += c[j];
                break;
        }
    }
    return d;
}

}  // namespace pagerank
