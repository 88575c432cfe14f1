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

#ifndef GAMMAHOM_GAMMA_HPP
#define GAMMAHOM_GAMMA_HPP

// The category Gamma_+ of finite pointed sets [n]_+ = {0, 1, ..., n} (0 is
// the basepoint), its partial-map presentation, and the handful of functors
// the Segal machine is assembled from.

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gammahom {

class FinPointedSet {
 public:
  FinPointedSet() = default;
  explicit FinPointedSet(int n);

  /// Number of non-basepoint elements.
  int size() const { return n_; }
  int cardinality() const { return n_ + 1; }

  auto operator<=>(const FinPointedSet&) const = default;

 private:
  int n_ = 0;
};

/// A basepoint-preserving map [n]_+ -> [m]_+ stored as a lookup table.
class PointedMap {
 public:
  PointedMap() : PointedMap(identity(0)) {}
  PointedMap(FinPointedSet source, FinPointedSet target, std::vector<int> table);

  static PointedMap identity(int n);
  static PointedMap to_basepoint(int n, int m);

  FinPointedSet source() const { return source_; }
  FinPointedSet target() const { return target_; }
  int operator()(int x) const { return table_[static_cast<std::size_t>(x)]; }
  std::span<const int> table() const { return table_; }
  bool is_identity() const;

  std::string to_string() const;

  auto operator<=>(const PointedMap&) const = default;

 private:
  FinPointedSet source_;
  FinPointedSet target_;
  std::vector<int> table_;
};

/// g after f. Throws CompositionError unless f.target() == g.source().
PointedMap compose(const PointedMap& f, const PointedMap& g);

/// A morphism of Gamma'_+: finite sets {0..source-1} -> {0..target-1},
/// defined on `domain` (distinct elements) and sending domain[k] to
/// action[k].
struct PartialMap {
  int source = 0;
  int target = 0;
  std::vector<int> domain;
  std::vector<int> action;

  void validate() const;
};

/// q after p, defined where p is defined and lands in the domain of q.
PartialMap compose(const PartialMap& p, const PartialMap& q);

/// The equivalence Gamma'_+ -> Gamma_+: element a becomes a + 1 and
/// everything outside the domain goes to the basepoint.
PointedMap gamma_from_partial(const PartialMap& p);

/// An injection {0..source-1} -> {0..target-1}.
struct Injection {
  int source = 0;
  int target = 0;
  std::vector<int> map;

  void validate() const;
};

Injection compose(const Injection& first, const Injection& second);

/// gamma(iota^#): [target]_+ -> [source]_+, inverting iota on its image and
/// collapsing the complement.
PointedMap sharp(const Injection& iota);

/// [n]_+ ^ [m]_+ = [nm]_+ with (i, j) -> (i - 1) m + j.
FinPointedSet smash(FinPointedSet a, FinPointedSet b);
PointedMap smash(const PointedMap& f, const PointedMap& g);
int smash_index(int i, int j, int m);
std::pair<int, int> smash_split(int k, int m);

/// [n]_+ v [m]_+ = [n+m]_+, first block then second block.
FinPointedSet wedge(FinPointedSet a, FinPointedSet b);
PointedMap wedge(const PointedMap& f, const PointedMap& g);
std::pair<PointedMap, PointedMap> wedge_inclusions(int n, int m);

/// mu_n(f) = id_{[n]_+} ^ f.
PointedMap mu(int n, const PointedMap& f);

/// i_s: [1]_+ -> [n]_+, 1 -> s.
PointedMap standard_inclusion(int s, int n);

/// A single face or degeneracy operator of the simplex category.
struct SimplicialOp {
  enum class Kind { Face, Degeneracy };
  Kind kind = Kind::Face;
  int index = 0;

  static SimplicialOp face(int i) { return {Kind::Face, i}; }
  static SimplicialOp degeneracy(int i) { return {Kind::Degeneracy, i}; }

  bool is_face() const { return kind == Kind::Face; }
  /// Level reached from level q.
  int apply(int q) const { return is_face() ? q - 1 : q + 1; }
  /// Throws ValidationError unless the operator exists at level q.
  void check_level(int q) const;

  auto operator<=>(const SimplicialOp&) const = default;
};

/// The structure map of the simplicial circle S, read as sigma:
/// Delta^op -> Gamma_+. S([q]) has non-basepoint elements 1..q, element k
/// being the monotone map [q] -> [1] with threshold k.
PointedMap circle_structure(int q, SimplicialOp op);

/// Every pointed map [n]_+ -> [m]_+, in lexicographic order of tables.
std::vector<PointedMap> all_pointed_maps(int n, int m);

}  // namespace gammahom

#endif  // GAMMAHOM_GAMMA_HPP
