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

#ifndef GAMMAHOM_NORMALIZED_HPP
#define GAMMAHOM_NORMALIZED_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gammahom/chain_complex.hpp"
#include "gammahom/field_linalg.hpp"
#include "gammahom/simplicial.hpp"

namespace gammahom {

struct ChainOptions {
  /// Largest level (non-basepoint cells) we are willing to enumerate.
  std::uint64_t cell_budget = std::uint64_t{1} << 26;
  /// Worker threads for generating boundary columns; 0 means all cores.
  unsigned threads = 1;
};

/// Nondegenerate cells of one level, with constant-time rank lookup.
class LevelBasis {
 public:
  LevelBasis(const MSSet& x, const MultiIndex& q, std::uint64_t cell_budget);

  const MultiIndex& level() const { return level_; }
  std::uint64_t cells() const { return cells_; }
  std::size_t rank() const { return rank_; }
  bool nondegenerate(Cell c) const {
    return c != 0 && (bits_[c >> 6] >> (c & 63) & 1);
  }
  /// Index of a nondegenerate cell among the nondegenerate cells.
  std::size_t position(Cell c) const;

 private:
  MultiIndex level_;
  std::uint64_t cells_;
  std::size_t rank_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> prefix_;
};

/// Normalized reduced chains of a multisimplicial pointed set, totalised
/// with the sign (-1)^{q_1 + ... + q_{j-1}} on direction j. Degree-d basis
/// is ordered by level (lexicographic) and then by cell. Levels are built on
/// demand and cached; safe to share between threads.
class NormalizedChains {
 public:
  struct Block {
    MultiIndex level;
    std::shared_ptr<const LevelBasis> basis;
    std::size_t offset;
  };

  explicit NormalizedChains(MSSetPtr x, ChainOptions options = {});

  const MSSetPtr& object() const { return x_; }
  const ChainOptions& options() const { return options_; }

  std::size_t rank(int d) const;
  const std::vector<Block>& blocks(int d) const;
  /// Global basis index of a cell at level q, or nothing when the cell is
  /// degenerate or the basepoint.
  std::optional<std::size_t> position(const MultiIndex& q, Cell c) const;

  /// Calls `sink` with each column of the boundary C_d -> C_{d-1}, in basis
  /// order, entries unsorted. Stops early once `sink` returns false.
  void for_each_boundary_column(
      int d, const std::function<bool(std::vector<MatrixEntry>&)>& sink) const;
  SparseMatrix boundary(int d) const;
  /// Degrees 0..top, for export and for the integer path.
  ChainComplex complex(const Ring& ring, int top) const;

  /// Rank of the boundary out of degree d over a prime field. Streams the
  /// columns and stops as soon as the rank reaches its a priori maximum.
  std::size_t boundary_rank(int d, std::uint32_t p) const;
  /// Echelon basis of the image of the boundary into degree d - 1.
  RankAccumulator boundary_span(int d, std::uint32_t p) const;

  HomologyGroup homology(int d, const Ring& ring) const;

 private:
  const LevelBasis& level_basis(const MultiIndex& q) const;

  MSSetPtr x_;
  ChainOptions options_;
  mutable std::mutex mutex_;
  mutable std::map<MultiIndex, std::shared_ptr<const LevelBasis>> levels_;
  mutable std::map<int, std::vector<Block>> blocks_;
  mutable std::map<std::pair<int, std::uint32_t>, std::size_t> field_ranks_;
};

/// Matrix of the induced map C_d(source) -> C_d(target).
SparseMatrix chains_of_map(const MSMap& f, const NormalizedChains& source,
                           const NormalizedChains& target, int d);

/// Reduced homology of x in degrees lo..hi.
std::vector<HomologyGroup> level_homology(const NormalizedChains& chains, const Ring& ring,
                                          int lo, int hi);

/// What a map does to H_d.
struct HomologyMapReport {
  HomologyGroup source;
  HomologyGroup target;
  /// Rank of the induced map (over Z: rank of its image's free part).
  std::size_t image_rank = 0;
  bool isomorphism = false;
  /// How the verdict was certified.
  std::string certificate;
};

HomologyMapReport homology_map(const MSMap& f, const NormalizedChains& source,
                               const NormalizedChains& target, const Ring& ring, int d);

}  // namespace gammahom

#endif  // GAMMAHOM_NORMALIZED_HPP
