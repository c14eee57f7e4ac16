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

#include "pagerank/problem.hpp"

#include <cmath>
#include <sstream>

namespace pagerank {

void validate_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        std::ostringstream msg;
        msg << "alpha must lie in the open interval (0,1), got " << alpha;
        throw ValidationError(msg.str());
    }
}

PageRankProblem::PageRankProblem(double alpha, StochasticOperator op, std::vector<double> v)
    : alpha_(alpha), op_(std::move(op)), v_(std::move(v)) {
    validate_alpha(alpha_);
    validate_distribution(v_, op_.size(), "teleportation vector v");
    if (!op_.is_stochastic()) {
        throw ValidationError("PageRank needs a column-stochastic operator; choose a dangling-node correction");
    }
}

PseudoProblem::PseudoProblem(double alpha, SubStochastic pbar, std::vector<double> f)
    : alpha_(alpha), pbar_(std::move(pbar)), f_(std::move(f)) {
    validate_alpha(alpha_);
    if (f_.size() != pbar_.size()) throw ValidationError("right-hand side f has the wrong length");
    bool nonzero = false;
    for (const double x : f_) {
        if (!std::isfinite(x) || x < 0.0) throw ValidationError("right-hand side f must be nonnegative and finite");
        nonzero = nonzero || x != 0.0;
    }
    if (!nonzero) throw ValidationError("right-hand side f must be nonzero");
}

}  // namespace pagerank
