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

#ifndef GAMMAHOM_SEGAL_HPP
#define GAMMAHOM_SEGAL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gammahom/gamma.hpp"
#include "gammahom/normalized.hpp"
#include "gammahom/simplicial.hpp"

namespace gammahom {

/// A normalized functor from Gamma_+ to k-fold multisimplicial pointed
/// sets. Values are never tabulated; `act` hands out the composite of a
/// Gamma_+ map with an optional simplicial operator as a cell kernel.
class GammaMSS {
 public:
  virtual ~GammaMSS() = default;

  virtual int directions() const = 0;
  /// Non-basepoint cells of X([m]_+) at level q.
  virtual std::uint64_t count(int m, const MultiIndex& q) const = 0;
  /// X(gamma) at level q followed by `op` (they commute):
  /// X(source)(q) -> X(target)(op.target(q)).
  virtual CellFn act(const PointedMap& gamma, const MultiIndex& q,
                     const std::optional<DirOp>& op) const = 0;
  /// Provenance, e.g. "B(ab:2)".
  virtual std::string describe() const = 0;
};

using GammaPtr = std::shared_ptr<const GammaMSS>;

/// Nothing but basepoints, in k directions.
GammaPtr point_gamma(int directions = 0);
/// [n]_+ -> A^n for A the product of the cyclic groups Z/d, basepoint 0,
/// acting by summing over fibres. Cells encode tuples in radix |A| with the
/// first coordinate least significant.
GammaPtr discrete_abelian(std::vector<std::uint32_t> invariant_factors);
/// [n]_+ -> Y ^ [n]_+; cells (c, s) -> (c - 1) n + s.
GammaPtr t_of(MSSetPtr y);
/// T_of(S^0).
GammaPtr sphere_like();

/// New leading direction carrying sigma: B(X)([m]_+) at (q, rest) is
/// X([q]_+ ^ [m]_+) at rest.
GammaPtr bar(GammaPtr x);
/// New leading direction carrying the circle: S(q) ^ X([m]_+)(rest).
GammaPtr sigma_gamma(GammaPtr x);
/// mu_n^* X: [m]_+ -> X([n]_+ ^ [m]_+).
GammaPtr mu_pullback(int n, GammaPtr x);
GammaPtr wedge_gamma(GammaPtr x, GammaPtr y);
GammaPtr smash_gamma(GammaPtr x, GammaPtr y);

/// X([m]_+) as a multisimplicial pointed set.
MSSetPtr evaluate(GammaPtr x, int m);
/// U(X) = X([1]_+).
MSSetPtr underlying(GammaPtr x);

/// A natural transformation, given by components at ([m]_+, level).
class GammaMap {
 public:
  using Components = std::function<CellFn(int m, const MultiIndex&)>;

  GammaMap(GammaPtr source, GammaPtr target, Components components);

  const GammaPtr& source() const { return source_; }
  const GammaPtr& target() const { return target_; }
  CellFn component(int m, const MultiIndex& q) const { return components_(m, q); }
  /// The component at [m]_+ as a map of multisimplicial sets.
  MSMap at(int m) const;

 private:
  GammaPtr source_;
  GammaPtr target_;
  Components components_;
};

GammaMap identity_gamma_map(GammaPtr x);
/// g after f; the target of f and the source of g must describe the same
/// Gamma-space.
GammaMap compose(const GammaMap& f, const GammaMap& g);

/// tau: T(U(X)) -> X, the wedge over s of X(i_s).
GammaMap tau(GammaPtr x);
/// rho: Sigma(X) -> B(X); at leading level q the k-th circle cell goes in
/// by X(i_k ^ id).
GammaMap rho(GammaPtr x);
GammaMap bar_map(const GammaMap& f);
GammaMap sigma_map(const GammaMap& f);
/// T applied to a map of multisimplicial sets.
GammaMap t_of_map(const MSMap& g);
/// B^n(f).
GammaMap bar_power(const GammaMap& f, int n);
/// (f, g): X v Y -> Z.
GammaMap fold(const GammaMap& f, const GammaMap& g);
/// mu_n^* X -> mu_{n+n'}^* X induced by the first block inclusion
/// [n]_+ -> [n + n']_+, or the second block when `second` is set (then the
/// source is mu_{n'}^* X).
GammaMap block_inclusion(GammaPtr x, int n, int n_prime, bool second);
/// The identification T(U(Sigma X)) = Sigma(T(U X)). With our cell
/// numbering both sides enumerate cells identically.
GammaMap reassociation(GammaPtr x);

/// The iterates B^n X and their underlying objects U(B^n X), built once.
class SpectrumTower {
 public:
  explicit SpectrumTower(GammaPtr x) : iterates_{std::move(x)} {}

  GammaPtr iterate(int n);
  /// U(B^n X), with n + X.directions() directions.
  MSSetPtr level(int n);

 private:
  std::mutex mutex_;
  std::vector<GammaPtr> iterates_;
  std::vector<MSSetPtr> levels_;
};

MSSetPtr spectrum_level(GammaPtr x, int n);

enum class SpecialMode { Bijection, Homology };

struct SpecialVerdict {
  bool special = false;
  SpecialMode mode = SpecialMode::Bijection;
  /// Largest n + n' examined.
  int bound = 0;
  /// Simplicial total degree (bijection) or homological degree examined.
  int depth = 0;
  std::string detail;
};

struct SpecialOptions {
  int bound = 3;
  int depth = 2;
  Ring ring = Ring::prime_field(2);
  ChainOptions chains;
};

/// Compares X([n + n']_+) with X([n]_+) x X([n']_+) via the maps induced by
/// the two block inclusions, for 1 <= n, n' with n + n' <= bound.
SpecialVerdict is_special(GammaPtr x, SpecialMode mode, const SpecialOptions& options = {});

/// Exhaustive functoriality check on objects of size <= max_size and
/// levels of total degree <= max_total: X(id) = id, X(g f) = X(g) X(f),
/// compatibility with structure maps, and X([0]_+) = point. Throws
/// IntegrityError on the first failure.
void verify_functoriality(const GammaMSS& x, int max_size = 3, int max_total = 2,
                          std::uint64_t max_cells = 1u << 12);

/// Checks that a Gamma-map commutes with X(gamma) for all gamma between
/// objects of size <= max_size, and with the simplicial structure.
void verify_naturality(const GammaMap& f, int max_size = 2, int max_total = 2,
                       std::uint64_t max_cells = 1u << 12);

}  // namespace gammahom

#endif  // GAMMAHOM_SEGAL_HPP
