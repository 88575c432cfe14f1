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

#ifndef GAMMAHOM_SMITH_HPP
#define GAMMAHOM_SMITH_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "gammahom/sparse_matrix.hpp"

namespace gammahom {

using BigInt = mpz_class;
using DenseBigMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Non-zero diagonal entries, positive, each dividing the next.
  std::vector<BigInt> diagonal;
  /// Unimodular transforms with left * M * right = D, when requested.
  std::optional<DenseBigMatrix> left;
  std::optional<DenseBigMatrix> right;

  std::size_t rank() const { return diagonal.size(); }
  /// Diagonal entries greater than one.
  std::vector<BigInt> torsion() const;
};

/// Smith normal form over the integers.
///
/// Without transforms, unit pivots are eliminated sparsely first (in 64-bit
/// arithmetic, redone with arbitrary precision if anything overflows) and
/// only the remaining core is diagonalised densely. With transforms the
/// whole matrix goes through the dense routine; meant for small inputs.
SmithForm smith_normal_form(const SparseMatrix& m, bool with_transforms = false);

/// Dense Smith form over arbitrary-precision integers.
SmithForm smith_normal_form(DenseBigMatrix m, bool with_transforms);

DenseBigMatrix to_big(const SparseMatrix& m);
DenseBigMatrix multiply(const DenseBigMatrix& a, const DenseBigMatrix& b);
/// Determinant by fraction-free elimination.
BigInt determinant(DenseBigMatrix m);

std::size_t rational_rank(const SparseMatrix& m);

}  // namespace gammahom

#endif  // GAMMAHOM_SMITH_HPP
