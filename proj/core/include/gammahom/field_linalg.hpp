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

#ifndef GAMMAHOM_FIELD_LINALG_HPP
#define GAMMAHOM_FIELD_LINALG_HPP

// Exact linear algebra over prime fields F_p. Vectors come in as integer
// sparse columns and are reduced modulo p on entry.

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "gammahom/sparse_matrix.hpp"

namespace gammahom {

/// Sparse vector over F_p: strictly increasing indices, values in [1, p).
using FpVector = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::uint32_t mod_p(std::int64_t v, std::uint32_t p);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
FpVector to_fp(std::span<const MatrixEntry> column, std::uint32_t p);

/// Incrementally maintained span of vectors in F_p^dim. Over F_2 the basis
/// is kept in reduced row echelon form on packed 64-bit words; other primes
/// use a sparse echelon basis.
class RankAccumulator {
 public:
  RankAccumulator(std::uint32_t p, std::size_t dim);
  ~RankAccumulator();
  RankAccumulator(RankAccumulator&&) noexcept;
  RankAccumulator& operator=(RankAccumulator&&) noexcept;

  RankAccumulator clone() const;
  /// Approximate heap size of the stored basis.
  std::size_t footprint() const;

  /// Returns true when the vector was independent of everything so far.
  bool add(std::span<const MatrixEntry> column);
  std::size_t rank() const;
  std::size_t dimension() const { return dim_; }
  std::uint32_t characteristic() const { return p_; }

 private:
  struct Impl;
  std::uint32_t p_;
  std::size_t dim_;
  std::unique_ptr<Impl> impl_;
};

std::size_t field_rank(const SparseMatrix& m, std::uint32_t p);

/// Basis of the null space of m over F_p, as sparse vectors indexed by
/// columns of m.
std::vector<FpVector> field_kernel(const SparseMatrix& m, std::uint32_t p);

}  // namespace gammahom

#endif  // GAMMAHOM_FIELD_LINALG_HPP
