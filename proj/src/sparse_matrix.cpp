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

#include "pagerank/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace pagerank {

SparseMatrix::SparseMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), col_ptr_(cols + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols, std::vector<Triplet> entries) {
    for (const auto& t : entries) {
        if (t.row >= rows || t.col >= cols) {
            throw ValidationError("entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                                  ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
        }
        if (!std::isfinite(t.value) || t.value < 0.0) {
            throw ValidationError("entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                                  ") has negative or non-finite weight");
        }
    }
    // Stable so that duplicates are summed in input order.
    std::stable_sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });

    SparseMatrix m(rows, cols);
    m.row_idx_.reserve(entries.size());
    m.values_.reserve(entries.size());
    std::size_t i = 0;
    while (i < entries.size()) {
        const Index r = entries[i].row;
        const Index c = entries[i].col;
        double sum = 0.0;
        for (; i < entries.size() && entries[i].row == r && entries[i].col == c; ++i) {
            sum += entries[i].value;
        }
        if (sum == 0.0) continue;
        m.row_idx_.push_back(r);
        m.values_.push_back(sum);
        ++m.col_ptr_[c + 1];
    }
    for (Index j = 0; j < cols; ++j) m.col_ptr_[j + 1] += m.col_ptr_[j];
    return m;
}

SparseMatrix SparseMatrix::identity(Index n) {
    std::vector<Triplet> t;
    t.reserve(n);
    for (Index i = 0; i < n; ++i) t.push_back({i, i, 1.0});
    return from_triplets(n, n, std::move(t));
}

double SparseMatrix::coeff(Index row, Index col) const {
    if (row >= rows_ || col >= cols_) throw ValidationError("coeff index out of range");
    const auto first = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[col]);
    const auto last = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[col + 1]);
    const auto it = std::lower_bound(first, last, row);
    if (it == last || *it != row) return 0.0;
    return values_[static_cast<std::size_t>(it - row_idx_.begin())];
}

std::vector<double> SparseMatrix::column_sums() const {
    std::vector<double> s(cols_, 0.0);
    for (Index j = 0; j < cols_; ++j) {
        for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) s[j] += values_[k];
    }
    return s;
}

std::vector<double> SparseMatrix::row_sums() const {
    std::vector<double> s(rows_, 0.0);
    for (Index j = 0; j < cols_; ++j) {
        for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) s[row_idx_[k]] += values_[k];
    }
    return s;
}

SparseMatrix SparseMatrix::scale_columns(std::span<const double> s) const {
    if (s.size() != cols_) throw ValidationError("scale_columns: length mismatch");
    auto t = triplets();
    for (auto& e : t) e.value *= s[e.col];
    return from_triplets(rows_, cols_, std::move(t));
}

SparseMatrix SparseMatrix::scale_rows(std::span<const double> s) const {
    if (s.size() != rows_) throw ValidationError("scale_rows: length mismatch");
    auto t = triplets();
    for (auto& e : t) e.value *= s[e.row];
    return from_triplets(rows_, cols_, std::move(t));
}

SparseMatrix SparseMatrix::scaled(double s) const {
    auto t = triplets();
    for (auto& e : t) e.value *= s;
    return from_triplets(rows_, cols_, std::move(t));
}

SparseMatrix SparseMatrix::submatrix(std::span<const Index> rows, std::span<const Index> cols) const {
    constexpr Index absent = static_cast<Index>(-1);
    std::vector<Index> row_map(rows_, absent);
    for (Index i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_) throw ValidationError("submatrix: row index out of range");
        row_map[rows[i]] = i;
    }
    std::vector<Triplet> t;
    for (Index jj = 0; jj < cols.size(); ++jj) {
        const Index j = cols[jj];
        if (j >= cols_) throw ValidationError("submatrix: column index out of range");
        for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
            if (row_map[row_idx_[k]] != absent) t.push_back({row_map[row_idx_[k]], jj, values_[k]});
        }
    }
    return from_triplets(rows.size(), cols.size(), std::move(t));
}

std::vector<Triplet> SparseMatrix::triplets() const {
    std::vector<Triplet> t;
    t.reserve(nnz());
    for (Index j = 0; j < cols_; ++j) {
        for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) t.push_back({row_idx_[k], j, values_[k]});
    }
    return t;
}

SparseMatrix transpose(const SparseMatrix& m) {
    auto t = m.triplets();
    for (auto& e : t) std::swap(e.row, e.col);
    return SparseMatrix::from_triplets(m.cols(), m.rows(), std::move(t));
}

std::vector<double> matvec(const SparseMatrix& m, std::span<const double> x) {
    std::vector<double> y(m.rows());
    m.multiply<double>(x, y);
    return y;
}

bool is_symmetric(const SparseMatrix& m) {
    return m.rows() == m.cols() && transpose(m) == m;
}

}  // namespace pagerank
