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

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<GammaPtr> sample_spaces() {
  return {point_gamma(),
          discrete_abelian({2}),
          discrete_abelian({3}),
          discrete_abelian({2, 2}),
          sphere_like(),
          t_of(circle_ss()),
          bar(discrete_abelian({2})),
          sigma_gamma(discrete_abelian({2})),
          mu_pullback(2, discrete_abelian({2})),
          wedge_gamma(discrete_abelian({2}), sphere_like()),
          smash_gamma(discrete_abelian({2}), discrete_abelian({3})),
          bar(t_of(circle_ss()))};
}

}  // namespace

TEST_CASE("built-in Gamma-spaces are functors", "[segal]") {
  for (const auto& x : sample_spaces()) {
    INFO(x->describe());
    REQUIRE_NOTHROW(verify_functoriality(*x, 3, 2));
  }
}

TEST_CASE("cell counts", "[segal]") {
  const MultiIndex none;
  // A^n minus the basepoint.
  for (int m = 0; m <= 4; ++m) {
    REQUIRE(discrete_abelian({2})->count(m, none) == ipow(2, m) - 1);
    REQUIRE(discrete_abelian({2, 3})->count(m, none) == ipow(6, m) - 1);
    REQUIRE(sphere_like()->count(m, none) == static_cast<std::uint64_t>(m));
    REQUIRE(mu_pullback(3, discrete_abelian({2}))->count(m, none) == ipow(2, 3 * m) - 1);
  }
  // B(ab:2)([m]_+) at level q is (Z/2)^{qm}.
  const GammaPtr b = bar(discrete_abelian({2}));
  for (int m = 1; m <= 2; ++m)
    for (int q = 0; q <= 4; ++q) REQUIRE(b->count(m, MultiIndex({q})) == ipow(2, q * m) - 1);
  REQUIRE(discrete_abelian({2})->describe() == "ab:2");
  REQUIRE(bar(discrete_abelian({2, 4}))->describe() == "B(ab:2,4)");
}

TEST_CASE("invalid Gamma-space arguments are rejected", "[segal]") {
  REQUIRE_THROWS_AS(discrete_abelian({}), ValidationError);
  REQUIRE_THROWS_AS(discrete_abelian({1}), ValidationError);
  REQUIRE_THROWS_AS(mu_pullback(-1, discrete_abelian({2})), ValidationError);
  REQUIRE_THROWS_AS(wedge_gamma(bar(discrete_abelian({2})), discrete_abelian({2})), ValidationError);
}

TEST_CASE("the nerve of Z/2 has one normalized cell per degree", "[segal]") {
  const NormalizedChains chains(spectrum_level(discrete_abelian({2}), 1));
  REQUIRE(chains.rank(0) == 0);
  for (int d = 1; d <= 6; ++d) REQUIRE(chains.rank(d) == 1);
  // H~(RP^infinity; Z) = Z/2 in odd degrees.
  const auto h = level_homology(chains, Ring::integers(), 0, 4);
  REQUIRE(h[1].torsion == std::vector<BigInt>{2});
  REQUIRE(h[2].is_zero());
  REQUIRE(h[3].torsion == std::vector<BigInt>{2});
}

TEST_CASE("specialness verdicts", "[segal][special]") {
  REQUIRE(is_special(discrete_abelian({2}), SpecialMode::Bijection).special);
  REQUIRE(is_special(discrete_abelian({2, 3}), SpecialMode::Bijection).special);
  REQUIRE(is_special(point_gamma(), SpecialMode::Bijection).special);
  // T(S^0)([2]_+) has 3 points, T(S^0)([1]_+)^2 has 4.
  const SpecialVerdict sphere = is_special(sphere_like(), SpecialMode::Bijection);
  REQUIRE_FALSE(sphere.special);
  REQUIRE_FALSE(is_special(sphere_like(), SpecialMode::Homology).special);
  REQUIRE(is_special(bar(discrete_abelian({2})), SpecialMode::Homology).special);
  REQUIRE(is_special(mu_pullback(2, discrete_abelian({2})), SpecialMode::Bijection).special);
}

TEST_CASE("structure maps are natural", "[segal]") {
  const GammaPtr a = discrete_abelian({2});
  const GammaPtr t = t_of(circle_ss());
  for (const GammaPtr& x : {a, t, sphere_like()}) {
    INFO(x->describe());
    REQUIRE_NOTHROW(verify_naturality(tau(x)));
    REQUIRE_NOTHROW(verify_naturality(rho(x)));
    REQUIRE_NOTHROW(verify_naturality(bar_map(tau(x))));
    REQUIRE_NOTHROW(verify_naturality(sigma_map(tau(x))));
    REQUIRE_NOTHROW(verify_naturality(reassociation(x)));
  }
  REQUIRE_NOTHROW(verify_naturality(block_inclusion(a, 1, 2, false)));
  REQUIRE_NOTHROW(verify_naturality(block_inclusion(a, 1, 2, true)));
  REQUIRE_NOTHROW(verify_naturality(
      fold(block_inclusion(a, 1, 1, false), block_inclusion(a, 1, 1, true))));
  REQUIRE_NOTHROW(verify_naturality(t_of_map(identity_map(circle_ss()))));
}

TEST_CASE("composition of Gamma-maps checks compatibility", "[segal]") {
  const GammaPtr a = discrete_abelian({2});
  REQUIRE_NOTHROW(compose(tau(a), identity_gamma_map(a)));
  REQUIRE_THROWS_AS(compose(rho(a), tau(a)), CompositionError);
  // tau is the identity on U: T(U X)([1]_+) = U X.
  const MSMap u = tau(a).at(1);
  const MultiIndex none;
  for (Cell c = 1; c <= a->count(1, none); ++c) REQUIRE(u.component(none)(c) == c);
}

TEST_CASE("space specifications parse", "[segal][parse]") {
  REQUIRE(parse_space("ab:2")->describe() == "ab:2");
  REQUIRE(parse_space(" ab:2,4 ")->describe() == "ab:2,4");
  REQUIRE(parse_space("wedge(ab:2,4,ab:3)")->describe() == "wedge(ab:2,4,ab:3)");
  REQUIRE(parse_space("mu(2)*B(ab:2)")->describe() == "mu(2)*B(ab:2)");
  REQUIRE(parse_space("sigma(t:circle)")->describe() == "Sigma(T(S))");
  REQUIRE(parse_space("sphere")->describe() == parse_space("t:s0")->describe());
  REQUIRE(parse_space("smash(point,point)")->directions() == 0);
  for (const char* bad : {"", "ab:", "ab:1", "foo", "B(ab:2", "mu(2)ab:2", "wedge(ab:2)",
                          "ab:2 extra", "wedge(B(ab:2),ab:2)"})
    REQUIRE_THROWS_AS(parse_space(bad), ParseError);
}
