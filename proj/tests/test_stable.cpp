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

#include <catch2/catch_amalgamated.hpp>

#include "gammahom/gammahom.hpp"

using namespace gammahom;

namespace {

std::vector<std::size_t> dims(const StableResult& r) {
  std::vector<std::size_t> out;
  for (const auto& g : r.table.groups) out.push_back(g ? g->rank : 999);
  return out;
}

}  // namespace

TEST_CASE("T(Y) has the reduced homology of Y", "[stable]") {
  const MSSetPtr s = circle_ss();
  for (const MSSetPtr& y : {discrete_ss(2), wedge_ss(s, s), smash_ss(s, wedge_ss(s, s))}) {
    INFO(y->describe());
    const StableResult r = gamma_homology(t_of(y), Ring::integers(), 3);
    REQUIRE(r.table.complete());
    const auto expected = level_homology(NormalizedChains(y), Ring::integers(), 0, 3);
    for (int i = 0; i <= 3; ++i) REQUIRE(*r.table.groups[i] == expected[i]);
  }
}

TEST_CASE("the two names are one pipeline", "[stable]") {
  for (const GammaPtr& x : {discrete_abelian({2}), sphere_like(), point_gamma()}) {
    const StableResult a = spectrum_homology(x, Ring::prime_field(2), 2);
    const StableResult b = gamma_homology(x, Ring::prime_field(2), 2);
    REQUIRE(a.table == b.table);
    REQUIRE(result_to_json(a) == result_to_json(b));
  }
}

TEST_CASE("Eilenberg-MacLane spectrum of Z/3 mod 3", "[stable]") {
  // Dual Steenrod algebra at p = 3: tau_0 in degree 1, xi_1 in degree 4.
  const StableResult r = spectrum_homology(discrete_abelian({3}), Ring::prime_field(3), 2);
  REQUIRE(dims(r) == std::vector<std::size_t>{1, 1, 0});
  for (const auto& e : r.evidence) {
    REQUIRE(e.settled);
    REQUIRE(e.n > e.degree);
    REQUIRE(e.bound == "i<n");
  }
}

TEST_CASE("Sigma and B towers have equal dimensions over a field", "[stable]") {
  for (const GammaPtr& x : {discrete_abelian({2}), sphere_like()}) {
    INFO(x->describe());
    const StableResult s = spectrum_homology(sigma_gamma(x), Ring::prime_field(2), 2);
    const StableResult b = spectrum_homology(bar(x), Ring::prime_field(2), 2);
    REQUIRE(s.table.complete());
    REQUIRE(dims(s) == dims(b));
  }
  // Delooping shifts: H_i(B ab:2) = H_{i-1}(ab:2).
  const StableResult b = spectrum_homology(bar(discrete_abelian({2})), Ring::prime_field(2), 2);
  REQUIRE(dims(b) == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("pre-spectrum route for non-special input", "[stable]") {
  const StableResult r = spectrum_homology(sphere_like(), Ring::integers(), 2);
  REQUIRE(r.pre_spectrum);
  REQUIRE_FALSE(r.special.special);
  for (const auto& e : r.evidence) REQUIRE(e.bound == "empirical-only");
}

TEST_CASE("budget exhaustion yields a marked partial result", "[stable]") {
  StableOptions o;
  o.chains.cell_budget = 1 << 8;
  o.special.chains = o.chains;
  const StableResult r = spectrum_homology(discrete_abelian({2}), Ring::prime_field(2), 3, o);
  REQUIRE(r.unstable_above);
  REQUIRE_FALSE(r.table.complete());
  REQUIRE_FALSE(r.budget_note.empty());
  // Whatever did settle is still right.
  const std::vector<std::size_t> expected{1, 1, 1, 2};
  for (int i = 0; i <= *r.unstable_above; ++i) {
    REQUIRE(r.table.groups[i]);
    REQUIRE(r.table.groups[i]->rank == expected[i]);
  }
  for (int i = *r.unstable_above + 1; i <= 3; ++i) REQUIRE_FALSE(r.table.groups[i]);
}

TEST_CASE("results do not depend on the thread count", "[stable][determinism]") {
  ChainOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const MSSetPtr level = spectrum_level(discrete_abelian({2}), 2);
  const NormalizedChains a(level, one), b(level, many);
  REQUIRE(a.boundary(8) == b.boundary(8));
  REQUIRE(a.boundary_rank(8, 2) == b.boundary_rank(8, 2));

  StableOptions o1, o4;
  o1.chains = one;
  o4.chains = many;
  REQUIRE(result_to_json(spectrum_homology(discrete_abelian({2}), Ring::prime_field(2), 2, o1)) ==
          result_to_json(spectrum_homology(discrete_abelian({2}), Ring::prime_field(2), 2, o4)));
}

TEST_CASE("connectivity of tower levels", "[stable]") {
  const GammaPtr a = discrete_abelian({2});
  REQUIRE(connectivity(spectrum_level(a, 0), 3) == -1);
  REQUIRE(connectivity(spectrum_level(a, 1), 3) == 0);
  REQUIRE(connectivity(spectrum_level(a, 2), 3) == 1);
  REQUIRE(connectivity(circle_ss(), 3) == 0);
}

TEST_CASE("a failing comparison is reported, not hidden", "[stable]") {
  // tau for T(S^0) is the identity, so compare a map that is not an
  // isomorphism: the collapse of ab:2 onto the point.
  const GammaPtr a = discrete_abelian({2});
  const GammaMap collapse(a, point_gamma(), [](int, const MultiIndex&) -> CellFn {
    return [](Cell) { return Cell{0}; };
  });
  const CheckReport r = check_map_iso("collapse", collapse, Ring::prime_field(2), 1);
  REQUIRE_FALSE(r.passed);
  REQUIRE_FALSE(r.details.empty());
}

TEST_CASE("stable-range evidence names the level that confirmed it", "[stable]") {
  const CheckReport r = check_stable_range(discrete_abelian({2}), Ring::prime_field(2), 2);
  REQUIRE(r.passed);
  REQUIRE(r.results.size() == 1);
  for (const auto& e : r.results[0].evidence) {
    if (!e.settled) continue;
    CHECK(e.n > e.degree);
    CHECK(e.previous == e.value);
  }
}
