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

#include "gammahom/sparse_matrix.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "gammahom/errors.hpp"

namespace gammahom {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), col_start_(cols + 1, 0) {}

SparseMatrix SparseMatrix::with_rows(std::size_t rows) { return SparseMatrix(rows, 0); }

void SparseMatrix::append_column(std::vector<MatrixEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return a.row < b.row; });
  std::size_t k = 0;
  while (k < entries.size()) {
    const std::uint32_t r = entries[k].row;
    if (r >= rows_) throw ValidationError("matrix entry row out of range");
    std::int64_t v = 0;
    for (; k < entries.size() && entries[k].row == r; ++k) v += entries[k].value;
    if (v != 0) entries_.push_back({r, v});
  }
  col_start_.push_back(entries_.size());
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::span<const Triplet> triplets) {
  std::vector<std::vector<MatrixEntry>> by_col(cols);
  for (const auto& [r, c, v] : triplets) {
    if (r >= rows || c >= cols) throw ValidationError("triplet index out of range");
    by_col[c].push_back({static_cast<std::uint32_t>(r), v});
  }
  SparseMatrix m = with_rows(rows);
  for (auto& col : by_col) m.append_column(std::move(col));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows == 0 ? 0 : dense[0].size();
  SparseMatrix m = with_rows(rows);
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<MatrixEntry> col;
    for (std::size_t r = 0; r < rows; ++r)
      if (dense[r][c] != 0) col.push_back({static_cast<std::uint32_t>(r), dense[r][c]});
    m.append_column(std::move(col));
  }
  return m;
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto col = column(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const MatrixEntry& e, std::size_t row) { return e.row < row; });
  return (it != col.end() && it->row == r) ? it->value : 0;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<MatrixEntry>> by_row(rows_);
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& e : column(c)) by_row[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
  SparseMatrix t = with_rows(cols());
  for (auto& col : by_row) t.append_column(std::move(col));
  return t;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> d(rows_, std::vector<std::int64_t>(cols(), 0));
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& e : column(c)) d[e.row][c] = e.value;
  return d;
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& e : column(c)) out.emplace_back(e.row, c, e.value);
  return out;
}

SparseMatrix SparseMatrix::permuted(std::span<const std::size_t> row_perm,
                                    std::span<const std::size_t> col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols())
    throw ValidationError("permutation length mismatch");
  std::vector<Triplet> t;
  for (const auto& [r, c, v] : triplets()) t.emplace_back(row_perm[r], col_perm[c], v);
  return from_triplets(rows_, cols(), t);
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw CompositionError("matrix dimensions do not match");
  SparseMatrix out = SparseMatrix::with_rows(a.rows());
  std::map<std::uint32_t, std::int64_t> acc;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    acc.clear();
    for (const auto& eb : b.column(c))
      for (const auto& ea : a.column(eb.row)) {
        std::int64_t product = 0;
        auto& slot = acc[ea.row];
        if (__builtin_mul_overflow(ea.value, eb.value, &product) ||
            __builtin_add_overflow(slot, product, &slot))
          throw IntegrityError("integer overflow in matrix product");
      }
    std::vector<MatrixEntry> col;
    for (const auto& [r, v] : acc)
      if (v != 0) col.push_back({r, v});
    out.append_column(std::move(col));
  }
  return out;
}

}  // namespace gammahom
