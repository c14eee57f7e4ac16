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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pagerank/error.hpp"

namespace pagerank {

using Index = std::size_t;

struct Triplet {
    Index row;
    Index col;
    double value;
};

/// Column-compressed nonnegative sparse matrix.
///
/// Stored values are finite and strictly positive: construction sums duplicate
/// (row, col) pairs and drops entries whose sum is zero. Row indices are
/// sorted within each column. Immutable once built.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(Index rows, Index cols);

    /// Builds from unordered triplets. Throws ValidationError on an
    /// out-of-range index or a negative / non-finite value.
    static SparseMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> entries);
    static SparseMatrix identity(Index n);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    Index nnz() const noexcept { return values_.size(); }

    std::span<const Index> col_ptr() const noexcept { return col_ptr_; }
    std::span<const Index> row_indices() const noexcept { return row_idx_; }
    std::span<const double> values() const noexcept { return values_; }

    double coeff(Index row, Index col) const;

    /// y = M x. Accumulates column by column in index order, so results are
    /// bitwise reproducible for a given matrix.
    template <class T>
    void multiply(std::span<const T> x, std::span<T> y) const;

    std::vector<double> column_sums() const;
    std::vector<double> row_sums() const;

    /// M diag(s): column j scaled by s[j]. Zero scales drop the column.
    SparseMatrix scale_columns(std::span<const double> s) const;
    /// diag(s) M.
    SparseMatrix scale_rows(std::span<const double> s) const;
    SparseMatrix scaled(double s) const;

    /// Rows and columns picked (and reordered) by the given index lists.
    SparseMatrix submatrix(std::span<const Index> rows, std::span<const Index> cols) const;

    std::vector<Triplet> triplets() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Index> col_ptr_ = {0};
    std::vector<Index> row_idx_;
    std::vector<double> values_;
};

SparseMatrix transpose(const SparseMatrix& m);

std::vector<double> matvec(const SparseMatrix& m, std::span<const double> x);

bool is_symmetric(const SparseMatrix& m);

template <class T>
void SparseMatrix::multiply(std::span<const T> x, std::span<T> y) const {
    if (x.size() != cols_ || y.size() != rows_) {
        throw ValidationError("matvec dimension mismatch: matrix is " + std::to_string(rows_) + "x" +
                              std::to_string(cols_) + ", x has " + std::to_string(x.size()) +
                              ", y has " + std::to_string(y.size()));
    }
    for (auto& yi : y) yi = T{};
    for (Index j = 0; j < cols_; ++j) {
        const T xj = x[j];
        for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
            y[row_idx_[k]] += values_[k] * xj;
        }
    }
}

}  // namespace pagerank
