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

#include <span>
#include <vector>

#include "pagerank/operator.hpp"

namespace pagerank {

/// (I - αP) x = (1-α) v with P column stochastic, v a distribution, 0 < α < 1.
class PageRankProblem {
public:
    PageRankProblem(double alpha, StochasticOperator op, std::vector<double> v);

    double alpha() const noexcept { return alpha_; }
    const StochasticOperator& op() const noexcept { return op_; }
    std::span<const double> v() const noexcept { return v_; }
    Index size() const noexcept { return op_.size(); }

private:
    double alpha_;
    StochasticOperator op_;
    std::vector<double> v_;
};

/// (I - αP̄) y = f with P̄ column sub-stochastic, f >= 0 and f != 0.
class PseudoProblem {
public:
    PseudoProblem(double alpha, SubStochastic pbar, std::vector<double> f);

    double alpha() const noexcept { return alpha_; }
    const SubStochastic& pbar() const noexcept { return pbar_; }
    std::span<const double> f() const noexcept { return f_; }
    Index size() const noexcept { return pbar_.size(); }

private:
    double alpha_;
    SubStochastic pbar_;
    std::vector<double> f_;
};

/// Throws ValidationError unless 0 < alpha < 1.
void validate_alpha(double alpha);

}  // namespace pagerank
