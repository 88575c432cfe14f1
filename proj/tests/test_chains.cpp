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

#include <algorithm>
#include <numeric>
#include <random>

#include "gammahom/gammahom.hpp"
#include "oracles.hpp"

using namespace gammahom;

namespace {

oracle::Dense random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi,
                           double density = 1.0) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::bernoulli_distribution keep(density);
  oracle::Dense m(rows, std::vector<std::int64_t>(cols, 0));
  for (auto& row : m)
    for (auto& v : row)
      if (keep(rng)) v = value(rng);
  return m;
}

HomologyGroup group(std::size_t rank, std::vector<long> torsion = {}) {
  HomologyGroup g;
  g.rank = rank;
  for (long t : torsion) g.torsion.emplace_back(t);
  return g;
}

/// Z --2--> Z in both directions of a square.
Multicomplex doubling_square() {
  Multicomplex m(2);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) m.set_rank(MultiIndex({a, b}), 1);
  const auto two = SparseMatrix::from_dense({{2}});
  m.set_differential(MultiIndex({1, 0}), 0, two);
  m.set_differential(MultiIndex({1, 1}), 0, two);
  m.set_differential(MultiIndex({0, 1}), 1, two);
  m.set_differential(MultiIndex({1, 1}), 1, two);
  return m;
}

/// Integer homology of a small complex from the oracle: free part from
/// rational ranks, torsion from determinantal divisors.
HomologyGroup oracle_homology(const ChainComplex& c, int d) {
  const auto in = c.boundary(d + 1).to_dense();
  const std::size_t rank_out =
      d == 0 ? 0 : oracle::rank_rational(c.boundary(d).to_dense());
  const std::size_t rank_in = oracle::rank_rational(in);
  HomologyGroup g;
  g.rank = c.rank(d) - rank_out - rank_in;
  for (const auto& f : oracle::invariant_factors(in))
    if (f > 1) g.torsion.push_back(f);
  return g;
}

}  // namespace

TEST_CASE("Smith form of random small matrices satisfies U M V = D", "[smith]") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 10);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const auto dense = random_dense(rng, rows, cols, -9, 9, trial % 3 == 0 ? 0.3 : 1.0);
    const auto m = SparseMatrix::from_dense(dense);
    const SmithForm s = smith_normal_form(m, true);
    INFO("trial " << trial << " shape " << rows << "x" << cols);

    REQUIRE(s.left);
    REQUIRE(s.right);
    const DenseBigMatrix d = multiply(multiply(*s.left, to_big(m)), *s.right);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const BigInt expected = (r == c && r < s.diagonal.size()) ? s.diagonal[r] : BigInt(0);
        REQUIRE(d[r][c] == expected);
      }
    for (std::size_t k = 0; k < s.diagonal.size(); ++k) {
      REQUIRE(s.diagonal[k] > 0);
      if (k > 0) REQUIRE(s.diagonal[k] % s.diagonal[k - 1] == 0);
    }
    REQUIRE(abs(oracle::determinant(*s.left)) == 1);
    REQUIRE(abs(oracle::determinant(*s.right)) == 1);
    REQUIRE(s.rank() == oracle::rank_rational(dense));
  }
}

TEST_CASE("Smith diagonal matches determinantal divisors", "[smith]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto dense = random_dense(rng, dim(rng), dim(rng), -6, 6);
    const SmithForm s = smith_normal_form(SparseMatrix::from_dense(dense));
    const auto expected = oracle::invariant_factors(dense);
    REQUIRE(s.diagonal.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) REQUIRE(s.diagonal[k] == expected[k]);
  }
}

TEST_CASE("field rank agrees with dense elimination", "[linalg]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 30);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto dense = random_dense(rng, dim(rng), dim(rng), -4, 4, 0.25);
      REQUIRE(field_rank(SparseMatrix::from_dense(dense), p) == oracle::rank_mod_p(dense, p));
    }
  }
}

TEST_CASE("field kernel vectors are annihilated and independent", "[linalg]") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto dense = random_dense(rng, 8, 12, -2, 2, 0.4);
    const auto m = SparseMatrix::from_dense(dense);
    const auto kernel = field_kernel(m, 3);
    REQUIRE(kernel.size() == 12 - oracle::rank_mod_p(dense, 3));
    oracle::Dense basis;
    for (const auto& v : kernel) {
      std::vector<std::int64_t> full(12, 0);
      for (auto [i, x] : v) full[i] = x;
      for (std::size_t r = 0; r < 8; ++r) {
        std::int64_t acc = 0;
        for (std::size_t c = 0; c < 12; ++c) acc += dense[r][c] * full[c];
        REQUIRE(((acc % 3) + 3) % 3 == 0);
      }
      basis.push_back(full);
    }
    REQUIRE(oracle::rank_mod_p(basis, 3) == kernel.size());
  }
}

TEST_CASE("rank accumulator reports new directions", "[linalg]") {
  RankAccumulator acc(2, 4);
  const std::vector<MatrixEntry> a{{0, 1}, {1, 1}}, b{{1, 1}, {2, 1}}, c{{0, 1}, {2, 1}};
  REQUIRE(acc.add(a));
  REQUIRE(acc.add(b));
  REQUIRE_FALSE(acc.add(c));
  REQUIRE(acc.rank() == 2);
}

TEST_CASE("multiplication by two", "[homology]") {
  const ChainComplex c(Ring::integers(), {1, 1}, {SparseMatrix::from_dense({{2}})});
  const HomologyTable h = homology(c, 1);
  REQUIRE(*h.groups[0] == group(0, {2}));
  REQUIRE(*h.groups[1] == group(0));
  REQUIRE(h.groups[0]->to_string(Ring::integers()) == "Z/2");

  const HomologyTable f2 = homology(c.with_ring(Ring::prime_field(2)), 1);
  REQUIRE(f2.groups[0]->rank == 1);
  REQUIRE(f2.groups[1]->rank == 1);
  const HomologyTable q = homology(c.with_ring(Ring::rationals()), 1);
  REQUIRE(q.groups[0]->is_zero());
  REQUIRE(q.groups[1]->is_zero());
}

TEST_CASE("totalised doubling square", "[homology][bicomplex]") {
  // The total complex is Z <- Z^2 <- Z with d1 = (2 2), d2 = (2, -2)^T:
  // H_0 = Z/2, H_1 = Z^2 / <(2,-2)> restricted to ker d1 = <(1,-1)>, so
  // H_1 = Z/2, and d2 is injective.
  const ChainComplex c = total_complex(doubling_square(), Ring::integers(), 2);
  REQUIRE(c.ranks() == std::vector<std::size_t>{1, 2, 1});
  const HomologyTable h = homology(c, 2);
  REQUIRE(*h.groups[0] == group(0, {2}));
  REQUIRE(*h.groups[1] == group(0, {2}));
  REQUIRE(*h.groups[2] == group(0));
  for (int d = 0; d <= 2; ++d) REQUIRE(*h.groups[d] == oracle_homology(c, d));
}

TEST_CASE("non-commuting multicomplex is rejected", "[bicomplex]") {
  Multicomplex m = doubling_square();
  m.set_differential(MultiIndex({1, 1}), 1, SparseMatrix::from_dense({{3}}));
  REQUIRE_THROWS_AS(total_complex(m, Ring::integers(), 2), IntegrityError);
}

TEST_CASE("malformed complexes are rejected", "[homology]") {
  REQUIRE_THROWS_AS(ChainComplex(Ring::integers(), {1, 2}, {SparseMatrix(1, 1)}), ValidationError);
  const ChainComplex bad(Ring::integers(), {1, 1, 1},
                         {SparseMatrix::from_dense({{1}}), SparseMatrix::from_dense({{1}})});
  REQUIRE_THROWS_AS(bad.check_square_zero(), IntegrityError);
}

TEST_CASE("random complexes: homology matches the oracle and is basis independent",
          "[homology]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    // d2 has one non-zero column b; every row of d1 is orthogonal to b.
    const std::size_t n0 = 3, n1 = 5, n2 = 3;
    auto b = random_dense(rng, n1, n2, -3, 3, 0.6);
    for (auto& row : b) row[1] = row[2] = 0;
    oracle::Dense a(n0, std::vector<std::int64_t>(n1, 0));
    std::uniform_int_distribution<int> v(-3, 3);
    for (auto& row : a) {
      std::vector<std::size_t> nz;
      for (std::size_t i = 0; i < n1; ++i)
        if (b[i][0] != 0) nz.push_back(i);
      for (std::size_t i = 0; i < n1; ++i)
        if (b[i][0] == 0) row[i] = v(rng);
      if (nz.size() >= 2) {
        const std::int64_t k = v(rng);
        row[nz[0]] = k * b[nz[1]][0];
        row[nz[1]] = -k * b[nz[0]][0];
      }
    }
    const ChainComplex c(Ring::integers(), {n0, n1, n2},
                         {SparseMatrix::from_dense(a), SparseMatrix::from_dense(b)});
    c.check_square_zero();
    const HomologyTable h = homology(c, 2);
    for (int d = 0; d <= 2; ++d) REQUIRE(*h.groups[d] == oracle_homology(c, d));

    std::vector<std::size_t> p0(n0), p1(n1), p2(n2);
    std::iota(p0.begin(), p0.end(), 0);
    std::iota(p1.begin(), p1.end(), 0);
    std::iota(p2.begin(), p2.end(), 0);
    std::shuffle(p0.begin(), p0.end(), rng);
    std::shuffle(p1.begin(), p1.end(), rng);
    std::shuffle(p2.begin(), p2.end(), rng);
    const ChainComplex permuted(Ring::integers(), {n0, n1, n2},
                                {SparseMatrix::from_dense(a).permuted(p0, p1),
                                 SparseMatrix::from_dense(b).permuted(p1, p2)});
    REQUIRE(homology(permuted, 2) == h);
    REQUIRE(universal_coefficients_consistent(c, 2, 2));
    REQUIRE(universal_coefficients_consistent(c, 2, 3));
    REQUIRE(euler_characteristic_consistent(c, Ring::prime_field(5)));
  }
}

TEST_CASE("matrix and complex JSON round trip", "[io]") {
  const ChainComplex c = total_complex(doubling_square(), Ring::integers(), 2);
  const std::string text = complex_to_json(c);
  REQUIRE(text.find("\"schema_version\": 1") != std::string::npos);
  const ChainComplex back = complex_from_json(text);
  REQUIRE(back == c);
  REQUIRE(homology(back, 2) == homology(c, 2));

  const auto m = SparseMatrix::from_dense({{0, 3}, {-1, 0}, {0, 7}});
  REQUIRE(matrix_from_json(matrix_to_json(m)) == m);
  REQUIRE_THROWS_AS(matrix_from_json("{\"rows\": 1, \"cols\": 1, \"entries\": [[2, 0, 1]]}"),
                    ValidationError);
  REQUIRE_THROWS_AS(complex_from_json("not json"), ParseError);
}

TEST_CASE("homology table renders", "[io]") {
  HomologyTable t;
  t.ring = Ring::integers();
  t.groups = {group(1), group(2, {2, 4}), std::nullopt};
  REQUIRE(t.groups[1]->to_string(t.ring) == "Z^2 + Z/2 + Z/4");
  const std::string text = render_text(t);
  REQUIRE(text.find("Z^2 + Z/2 + Z/4") != std::string::npos);
  REQUIRE(text.find("?") != std::string::npos);
  REQUIRE(render_csv(t).find("1,Z^2 + Z/2 + Z/4,2,2 4") != std::string::npos);
  REQUIRE(table_to_json(t).find("\"complete\": false") != std::string::npos);
}
