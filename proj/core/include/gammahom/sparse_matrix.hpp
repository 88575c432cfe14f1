// Copyright 2026 The gammahom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMMAHOM_SPARSE_MATRIX_HPP
#define GAMMAHOM_SPARSE_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

namespace gammahom {

struct MatrixEntry {
  std::uint32_t row;
  std::int64_t value;

  bool operator==(const MatrixEntry&) const = default;
};

using Triplet = std::tuple<std::size_t, std::size_t, std::int64_t>;

/// Integer matrix in compressed sparse column form. Columns hold strictly
/// increasing row indices with non-zero values.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Duplicates are summed; zeros dropped.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::span<const Triplet> triplets);
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);

  /// Start an empty matrix with `rows` rows to be filled by append_column.
  static SparseMatrix with_rows(std::size_t rows);
  /// Entries may be unsorted and repeated; they are combined.
  void append_column(std::vector<MatrixEntry> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return col_start_.size() - 1; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::span<const MatrixEntry> column(std::size_t j) const {
    return {entries_.data() + col_start_[j], col_start_[j + 1] - col_start_[j]};
  }
  std::int64_t at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  std::vector<std::vector<std::int64_t>> to_dense() const;
  /// Column-major (col, row) order.
  std::vector<Triplet> triplets() const;

  /// Entry (r, c) moves to (row_perm[r], col_perm[c]).
  SparseMatrix permuted(std::span<const std::size_t> row_perm,
                        std::span<const std::size_t> col_perm) const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<MatrixEntry> entries_;
};

/// a * b over the integers. Throws IntegrityError on 64-bit overflow.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace gammahom

#endif  // GAMMAHOM_SPARSE_MATRIX_HPP
