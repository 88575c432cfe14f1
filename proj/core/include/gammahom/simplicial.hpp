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

#ifndef GAMMAHOM_SIMPLICIAL_HPP
#define GAMMAHOM_SIMPLICIAL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "gammahom/gamma.hpp"
#include "gammahom/multi_index.hpp"

namespace gammahom {

/// Cells of a pointed set with n non-basepoint elements are 0..n, 0 being
/// the basepoint. Sizes never fit in an int once simplicial levels multiply.
using Cell = std::uint64_t;
/// A pointed map between levels, evaluated cell by cell. Structure maps are
/// handed out as kernels rather than tables: a single level can hold 2^24
/// cells and we only ever need to push individual cells through.
using CellFn = std::function<Cell(Cell)>;

/// Multiplication clamped at UINT64_MAX so that absurd levels still compare
/// as "too big" against a budget.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

/// A k-fold multisimplicial pointed set. Implementations must be pure:
/// the same arguments always give the same answer.
class MSSet {
 public:
  virtual ~MSSet() = default;

  virtual int directions() const = 0;
  /// Number of non-basepoint cells at q.
  virtual std::uint64_t count(const MultiIndex& q) const = 0;
  /// The face or degeneracy `op` out of level q.
  virtual CellFn structure(const MultiIndex& q, const DirOp& op) const = 0;
  virtual std::string describe() const = 0;

  FinPointedSet cells(const MultiIndex& q) const;
};

using MSSetPtr = std::shared_ptr<const MSSet>;

/// k directions, nothing but the basepoint.
MSSetPtr point_ss(int directions);
/// A constant pointed set with n non-basepoint cells; discrete_ss(1, 0) is S^0.
MSSetPtr discrete_ss(std::uint64_t n, int directions = 0);
/// Delta[1] with its two endpoints glued: one direction, q cells at level q.
MSSetPtr circle_ss();

/// Levelwise constructions; both arguments need the same number of
/// directions. Smash cells pair as (a, b) -> (a - 1) |y| + b; wedge puts x
/// first; product cells are a (|y| + 1) + b with (0, 0) the basepoint.
MSSetPtr smash_ss(MSSetPtr x, MSSetPtr y);
MSSetPtr wedge_ss(MSSetPtr x, MSSetPtr y);
MSSetPtr product_ss(MSSetPtr x, MSSetPtr y);

/// x with k directions and y with l directions give a (k + l)-fold object
/// with cells x(q) ^ y(r) at (q, r).
MSSetPtr external_smash_ss(MSSetPtr x, MSSetPtr y);
/// The circle as a new leading direction: S(q_0) ^ x(q_1, ..., q_k).
MSSetPtr suspension_ss(MSSetPtr x);
/// Restriction of a two-direction object along the diagonal.
MSSetPtr diagonal_ss(MSSetPtr x);

/// A map of multisimplicial pointed sets given by its components.
class MSMap {
 public:
  using Components = std::function<CellFn(const MultiIndex&)>;

  MSMap(MSSetPtr source, MSSetPtr target, Components components);

  const MSSetPtr& source() const { return source_; }
  const MSSetPtr& target() const { return target_; }
  CellFn component(const MultiIndex& q) const { return components_(q); }

 private:
  MSSetPtr source_;
  MSSetPtr target_;
  Components components_;
};

MSMap identity_map(MSSetPtr x);
MSMap collapse_map(MSSetPtr x, MSSetPtr target);
/// g after f.
MSMap compose(const MSMap& f, const MSMap& g);
/// The canonical x v y -> x * y -> x ^ y.
MSMap wedge_to_product(MSSetPtr x, MSSetPtr y);
MSMap product_to_smash(MSSetPtr x, MSSetPtr y);
/// (f, g): z -> x * y.
MSMap pair_map(const MSMap& f, const MSMap& g);

/// Checks the simplicial identities in every direction and the commutation
/// of operators in distinct directions, on every cell of every level of
/// total degree at most `max_total` that holds no more than `max_cells`
/// cells. Throws IntegrityError describing the first violation.
void verify_simplicial_identities(const MSSet& x, int max_total,
                                  std::uint64_t max_cells = 1u << 16);

/// Checks that f commutes with every face and degeneracy, under the same
/// bounds. Throws ValidationError on the first violation.
void verify_msmap(const MSMap& f, int max_total, std::uint64_t max_cells = 1u << 16);

}  // namespace gammahom

#endif  // GAMMAHOM_SIMPLICIAL_HPP
