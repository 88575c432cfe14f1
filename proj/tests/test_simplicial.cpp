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

#include <set>

#include "gammahom/gammahom.hpp"
#include "oracles.hpp"

using namespace gammahom;

namespace {

HomologyGroup z(std::size_t rank) {
  HomologyGroup g;
  g.rank = rank;
  return g;
}

std::vector<HomologyGroup> reduced_homology(MSSetPtr x, int top, const Ring& ring = Ring::integers()) {
  const NormalizedChains chains(x);
  return level_homology(chains, ring, 0, top);
}

/// Cells at level q hit by no degeneracy, counted by brute force.
std::size_t nondegenerate_count(const MSSet& x, const MultiIndex& q) {
  std::set<Cell> hit{0};
  for (int j = 0; j < x.directions(); ++j) {
    if (q[j] == 0) continue;
    const MultiIndex below = q.with(j, q[j] - 1);
    for (int i = 0; i < q[j]; ++i) {
      const CellFn s = x.structure(below, DirOp{j, SimplicialOp::degeneracy(i)});
      for (Cell c = 1; c <= x.count(below); ++c) hit.insert(s(c));
    }
  }
  return static_cast<std::size_t>(x.count(q) + 1 - hit.size());
}

}  // namespace

TEST_CASE("simplicial identities hold for the built-in constructions", "[simplicial]") {
  const MSSetPtr s = circle_ss();
  const std::vector<MSSetPtr> objects{
      point_ss(1), discrete_ss(3, 1), s, smash_ss(s, s), wedge_ss(s, discrete_ss(2, 1)),
      product_ss(s, s), external_smash_ss(s, s), suspension_ss(s), diagonal_ss(external_smash_ss(s, s))};
  for (const auto& x : objects) {
    INFO(x->describe());
    REQUIRE_NOTHROW(verify_simplicial_identities(*x, 4));
  }
}

TEST_CASE("normalized ranks match a brute-force count", "[simplicial][chains]") {
  const MSSetPtr s = circle_ss();
  for (const MSSetPtr& x : {smash_ss(s, s), product_ss(s, s), external_smash_ss(s, s),
                            suspension_ss(smash_ss(s, s))}) {
    const NormalizedChains chains(x);
    for (int d = 0; d <= 4; ++d) {
      std::size_t expected = 0;
      for (const auto& q : multi_indices_of_total(x->directions(), d))
        expected += nondegenerate_count(*x, q);
      INFO(x->describe() << " degree " << d);
      REQUIRE(chains.rank(d) == expected);
    }
  }
}

TEST_CASE("homology of spheres and their combinations", "[simplicial][chains]") {
  const MSSetPtr s = circle_ss();
  REQUIRE(reduced_homology(s, 3) == std::vector{z(0), z(1), z(0), z(0)});
  REQUIRE(reduced_homology(smash_ss(s, s), 3) == std::vector{z(0), z(0), z(1), z(0)});
  REQUIRE(reduced_homology(wedge_ss(s, s), 2) == std::vector{z(0), z(2), z(0)});
  // Kunneth for the pointed product S x S: reduced homology Z^2 + Z.
  REQUIRE(reduced_homology(product_ss(s, s), 3) == std::vector{z(0), z(2), z(1), z(0)});
  REQUIRE(reduced_homology(discrete_ss(3, 1), 1) == std::vector{z(3), z(0)});
  REQUIRE(reduced_homology(point_ss(1), 2) == std::vector{z(0), z(0), z(0)});
}

TEST_CASE("suspension shifts reduced homology by one", "[simplicial][chains]") {
  const MSSetPtr s = circle_ss();
  for (const MSSetPtr& y : {discrete_ss(2, 1), s, wedge_ss(s, s), product_ss(s, s)}) {
    const auto h = reduced_homology(y, 3);
    const auto hs = reduced_homology(suspension_ss(y), 4);
    INFO(y->describe());
    REQUIRE(hs[0].is_zero());
    for (int i = 0; i <= 3; ++i) REQUIRE(hs[i + 1] == h[i]);
  }
}

TEST_CASE("diagonal and total complex agree", "[simplicial][chains]") {
  // Eilenberg-Zilber: the diagonal of a bisimplicial set and the total
  // complex of its double complex have the same homology.
  const MSSetPtr s = circle_ss();
  for (const MSSetPtr& x : {external_smash_ss(s, s), external_smash_ss(wedge_ss(s, s), s),
                            external_smash_ss(discrete_ss(2, 1), product_ss(s, s))}) {
    INFO(x->describe());
    REQUIRE(reduced_homology(diagonal_ss(x), 4) == reduced_homology(x, 4));
    REQUIRE(reduced_homology(diagonal_ss(x), 3, Ring::prime_field(2)) ==
            reduced_homology(x, 3, Ring::prime_field(2)));
  }
}

TEST_CASE("boundary squares to zero and matches the field oracle", "[chains]") {
  const MSSetPtr s = circle_ss();
  const MSSetPtr x = external_smash_ss(product_ss(s, s), s);
  const NormalizedChains chains(x);
  const ChainComplex c = chains.complex(Ring::integers(), 5);
  REQUIRE_NOTHROW(c.check_square_zero());
  for (int d = 1; d <= 5; ++d)
    REQUIRE(chains.boundary_rank(d, 2) == oracle::rank_mod_p(c.boundary(d).to_dense(), 2));
  REQUIRE(euler_characteristic_consistent(c, Ring::prime_field(3)));
  REQUIRE(universal_coefficients_consistent(c, 4, 2));
}

TEST_CASE("maps of multisimplicial sets", "[simplicial]") {
  const MSSetPtr s = circle_ss();
  const MSSetPtr w = wedge_ss(s, s);
  const MSMap inc = wedge_to_product(s, s);
  REQUIRE_NOTHROW(verify_msmap(inc, 4));
  REQUIRE_NOTHROW(verify_msmap(product_to_smash(s, s), 4));
  REQUIRE_NOTHROW(verify_msmap(compose(inc, product_to_smash(s, s)), 4));
  REQUIRE_THROWS_AS(compose(inc, identity_map(w)), CompositionError);

  // S v S -> S x S is an isomorphism on H_1.
  const NormalizedChains cw(w), cp(product_ss(s, s));
  const auto report = homology_map(inc, cw, cp, Ring::integers(), 1);
  REQUIRE(report.isomorphism);
  const auto report2 = homology_map(inc, cw, cp, Ring::integers(), 2);
  REQUIRE_FALSE(report2.isomorphism);
}

TEST_CASE("chain budget names the offending level", "[chains]") {
  ChainOptions tight;
  tight.cell_budget = 10;
  const MSSetPtr s = circle_ss();
  const NormalizedChains chains(product_ss(product_ss(s, s), product_ss(s, s)), tight);
  try {
    (void)chains.rank(4);
    FAIL("budget not enforced");
  } catch (const BudgetExceeded& e) {
    REQUIRE(std::string(e.where()).find("(") != std::string::npos);
  }
}
