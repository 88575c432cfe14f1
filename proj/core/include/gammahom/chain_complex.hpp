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

#ifndef GAMMAHOM_CHAIN_COMPLEX_HPP
#define GAMMAHOM_CHAIN_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammahom/multi_index.hpp"
#include "gammahom/ring.hpp"
#include "gammahom/smith.hpp"
#include "gammahom/sparse_matrix.hpp"

namespace gammahom {

/// One homology group: free rank (the dimension over a field) plus, over
/// the integers, invariant factors d_1 | d_2 | ... of the torsion part.
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", "F2^3", ...
  std::string to_string(const Ring& ring) const;

  bool operator==(const HomologyGroup& other) const {
    return rank == other.rank && torsion == other.torsion;
  }
};

/// Homology per degree; an empty slot is a degree that could not be
/// computed (budget) and renders as "?".
struct HomologyTable {
  Ring ring = Ring::integers();
  std::vector<std::optional<HomologyGroup>> groups;

  int max_degree() const { return static_cast<int>(groups.size()) - 1; }
  bool complete() const;
  bool operator==(const HomologyTable& other) const {
    return ring == other.ring && groups == other.groups;
  }
};

/// Free chain complex C_0 <- C_1 <- ... <- C_top with integer boundary
/// matrices. Entries are read modulo p when the ring is F_p. Degrees above
/// `top_degree()` are zero.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// boundaries[d - 1] is the map C_d -> C_{d-1}, for d = 1..ranks.size()-1.
  ChainComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries);

  const Ring& ring() const { return ring_; }
  int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int d) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// d >= 1; past the top degree this is an empty matrix of the right shape.
  SparseMatrix boundary(int d) const;
  const std::vector<SparseMatrix>& boundaries() const { return boundaries_; }

  ChainComplex with_ring(Ring ring) const;

  /// Throws IntegrityError naming the first degree with d_{d-1} d_d != 0
  /// (checked over the integers, then modulo the ring's characteristic).
  void check_square_zero() const;

  bool operator==(const ChainComplex&) const = default;

 private:
  Ring ring_ = Ring::integers();
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> boundaries_;
};

/// Rank of an integer matrix viewed over the ring (rational rank for Z, Q).
std::size_t matrix_rank(const SparseMatrix& m, const Ring& ring);

/// H_d for d = 0..max_degree. Over a field: dim C_d - rk d_d - rk d_{d+1}.
/// Over Z: free part from ranks, torsion from the Smith form of d_{d+1}.
HomologyTable homology(const ChainComplex& c, int max_degree);

/// Homology of a single spot given the two adjacent boundaries.
HomologyGroup homology_at(std::size_t dim, const SparseMatrix& incoming_boundary,
                          const SparseMatrix& outgoing_boundary, const Ring& ring);

/// Euler characteristic of the complex equals that of its homology over the
/// given field (top homology taken as the kernel of the top boundary).
bool euler_characteristic_consistent(const ChainComplex& c, const Ring& field);

/// For each d <= max_degree: Betti over Q equals the Z free rank, and the
/// F_p dimension equals free rank + #(factors divisible by p) in degrees d
/// and d - 1.
bool universal_coefficients_consistent(const ChainComplex& c, int max_degree,
                                       std::uint32_t p);

/// Commuting multicomplex of free modules: a rank at each multi-index and,
/// per direction j, a differential from q to q - e_j. Differentials in
/// different directions commute; the totalisation twists them by Koszul
/// signs.
class Multicomplex {
 public:
  explicit Multicomplex(int directions) : directions_(directions) {}

  int directions() const { return directions_; }
  void set_rank(const MultiIndex& q, std::size_t rank);
  void set_differential(const MultiIndex& q, int direction, SparseMatrix m);

  std::size_t rank(const MultiIndex& q) const;
  const SparseMatrix* differential(const MultiIndex& q, int direction) const;
  /// Multi-indices of the given total degree with non-zero rank, ascending.
  std::vector<MultiIndex> support(int total) const;

 private:
  int directions_;
  std::map<MultiIndex, std::size_t> ranks_;
  std::map<std::pair<MultiIndex, int>, SparseMatrix> differentials_;
};

/// Direct-sum totalisation with d = sum_j (-1)^{q_1+...+q_{j-1}} d^{(j)},
/// degrees 0..top_degree. Throws IntegrityError if the result does not
/// square to zero.
ChainComplex total_complex(const Multicomplex& m, const Ring& ring, int top_degree);

}  // namespace gammahom

#endif  // GAMMAHOM_CHAIN_COMPLEX_HPP
