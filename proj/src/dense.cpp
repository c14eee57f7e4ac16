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

#include "pagerank/dense.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace pagerank {

DenseMatrix DenseMatrix::identity(Index n) {
    DenseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double DenseMatrix::sum() const { return std::accumulate(data_.begin(), data_.end(), 0.0); }

DenseMatrix to_dense(const SparseMatrix& m) {
    DenseMatrix d(m.rows(), m.cols());
    for (const auto& t : m.triplets()) d(t.row, t.col) = t.value;
    return d;
}

std::vector<double> lu_solve(DenseMatrix a, std::vector<double> b) {
    const Index n = a.rows();
    if (a.cols() != n || b.size() != n) throw ValidationError("lu_solve: shape mismatch");
    for (Index k = 0; k < n; ++k) {
        Index pivot = k;
        for (Index i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
        }
        if (a(pivot, k) == 0.0) {
            throw SingularError("lu_solve: zero pivot in column " + std::to_string(k));
        }
        if (pivot != k) {
            for (Index j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (Index i = k + 1; i < n; ++i) {
            const double factor = a(i, k) / a(k, k);
            if (factor == 0.0) continue;
            for (Index j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
            b[i] -= factor * b[k];
        }
    }
    std::vector<double> x(n);
    for (Index i = n; i-- > 0;) {
        double s = b[i];
        for (Index j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace pagerank
