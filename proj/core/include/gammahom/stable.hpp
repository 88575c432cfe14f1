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

#ifndef GAMMAHOM_STABLE_HPP
#define GAMMAHOM_STABLE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammahom/chain_complex.hpp"
#include "gammahom/segal.hpp"

namespace gammahom {

struct StableOptions {
  /// Largest n for which U(B^n X) is built.
  int max_iterations = 6;
  ChainOptions chains;
  SpecialOptions special;
};

/// Why a degree's value is believed.
struct DegreeEvidence {
  int degree = 0;
  bool settled = false;
  /// Level n at which the value was confirmed (0 when read off U(X)).
  int n = -1;
  std::optional<HomologyGroup> previous;
  std::optional<HomologyGroup> value;
  /// "i<n" (connective bound, input certified special), "i<2c" (read off
  /// U(X) under connectivity c), "empirical-only" (two equal levels, no
  /// theorem applies: the pre-spectrum route), or "unknown".
  std::string bound;
};

struct StableResult {
  std::string space;
  Ring ring = Ring::integers();
  HomologyTable table;
  std::vector<DegreeEvidence> evidence;
  /// Every computed tower value H~_{i+n}(U(B^n X)), keyed by (n, i).
  std::map<std::pair<int, int>, HomologyGroup> tower;
  SpecialVerdict special;
  bool pre_spectrum = false;
  /// Set when the budget ran out: degrees above this are unknown.
  std::optional<int> unstable_above;
  std::string budget_note;
  int levels_built = 0;
  int connectivity = -1;
};

/// H_i of the spectrum (or pre-spectrum) U(B^n X), i <= i_max: each degree
/// is read from H~_{i+n}(U(B^n X)) once two consecutive levels agree with
/// n > i.
StableResult spectrum_homology(GammaPtr x, const Ring& ring, int i_max,
                               const StableOptions& options = {});

/// Gamma-homology by stabilization; the same pipeline, named after the
/// other side of the comparison theorem.
StableResult gamma_homology(GammaPtr x, const Ring& ring, int i_max,
                            const StableOptions& options = {});

/// Largest c <= bound with H~_i(Y; Z) = 0 for all i <= c; -1 when H~_0 is
/// non-zero. Homological connectivity stands in for the topological notion.
int connectivity(MSSetPtr y, int bound, const ChainOptions& options = {});

/// Outcome of one property check.
struct CheckReport {
  std::string name;
  std::string space;
  bool passed = false;
  /// One line per checked fact, in the order checked.
  std::vector<std::string> details;
  std::vector<StableResult> results;
};

/// The map of stable homology induced by f: X -> Y is an isomorphism in
/// degrees <= d_max, certified by the induced map on U(B^n f) at a level n
/// where both towers have settled.
CheckReport check_map_iso(const std::string& name, const GammaMap& f, const Ring& ring,
                          int d_max, const StableOptions& options = {});

/// rho_X: Sigma(X) -> B(X) induces an isomorphism on Gamma-homology.
CheckReport check_rho_iso(GammaPtr x, const Ring& ring, int d_max,
                          const StableOptions& options = {});
/// mu_n^* X v mu_{n'}^* X -> mu_{n+n'}^* X induces an isomorphism.
CheckReport check_wedge_iso(GammaPtr x, int n, int n_prime, const Ring& ring, int d_max,
                            const StableOptions& options = {});
/// Gamma-homology of mu_n^* X ^ mu_{n'}^* X vanishes.
CheckReport check_smash_vanishing(GammaPtr x, int n, int n_prime, const Ring& ring, int d_max,
                                  const StableOptions& options = {});
/// Tower values agree for every computed n > i; and on the first level
/// B^k X with connectivity c >= 1, H~_i(U(B^k X)) matches stable homology
/// shifted by k for i < 2c.
CheckReport check_stable_range(GammaPtr x, const Ring& ring, int i_max,
                               const StableOptions& options = {});
/// rho_X Sigma(tau_X) = tau_{BX} T(U(rho_X)) as chain maps, objects [m]_+
/// with m <= max_m, total degree <= max_degree.
CheckReport check_square(GammaPtr x, int max_m = 2, int max_degree = 3,
                         const StableOptions& options = {});
/// Specialness verdicts in both modes.
CheckReport check_special(GammaPtr x, const StableOptions& options = {});

}  // namespace gammahom

#endif  // GAMMAHOM_STABLE_HPP
