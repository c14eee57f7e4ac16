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

#include "pagerank/sparse_matrix.hpp"

namespace pagerank {

/// Small column-major dense matrix. Column-major storage makes data() the
/// vec() of the matrix, which is the layout the Kronecker code relies on.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(Index rows, Index cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(Index n);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }

    double& operator()(Index i, Index j) { return data_[j * rows_ + i]; }
    double operator()(Index i, Index j) const { return data_[j * rows_ + i]; }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    std::span<double> column(Index j) { return std::span<double>(data_).subspan(j * rows_, rows_); }
    std::span<const double> column(Index j) const {
        return std::span<const double>(data_).subspan(j * rows_, rows_);
    }

    double sum() const;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix to_dense(const SparseMatrix& m);

/// Solves A x = b by Gaussian elimination with partial pivoting. Throws
/// SingularError when a pivot is exactly zero.
std::vector<double> lu_solve(DenseMatrix a, std::vector<double> b);

}  // namespace pagerank
