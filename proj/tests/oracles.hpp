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

// Reference implementations used only by the tests. They share no code with
// the library: dense, slow, and easy to read.
#ifndef GAMMAHOM_TESTS_ORACLES_HPP
#define GAMMAHOM_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

/// Rank over F_p by schoolbook Gaussian elimination.
inline std::size_t rank_mod_p(Dense m, std::int64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;
  auto inverse = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    for (; e > 0; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = inverse(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Rational rank, via exact fraction-free elimination.
inline std::size_t rank_rational(const Dense& in) {
  if (in.empty()) return 0;
  std::vector<std::vector<mpz_class>> m(in.size(), std::vector<mpz_class>(in[0].size()));
  for (std::size_t r = 0; r < in.size(); ++r)
    for (std::size_t c = 0; c < in[0].size(); ++c) m[r][c] = static_cast<long>(in[r][c]);
  const std::size_t rows = m.size(), cols = m[0].size();
  // Bareiss: every division by the previous pivot is exact.
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class a = m[rank][c], b = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (a * m[r][k] - b * m[rank][k]) / previous;
    }
    previous = m[rank][c];
    ++rank;
  }
  return rank;
}

/// Exact determinant by elimination over Q.
inline mpz_class determinant(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det.get_num();
}

/// gcd of all k x k minors, for k = 1..min(rows, cols). The Smith diagonal
/// is d_k = D_k / D_{k-1}. Exponential: tiny matrices only.
inline std::vector<mpz_class> determinantal_divisors(const Dense& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    std::vector<std::size_t> rs, cs;
    std::function<void(std::size_t)> pick_cols;
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
      if (rs.size() == k) {
        pick_cols(0);
        return;
      }
      for (std::size_t r = start; r < rows; ++r) {
        rs.push_back(r);
        pick_rows(r + 1);
        rs.pop_back();
      }
    };
    pick_cols = [&](std::size_t start) {
      if (cs.size() == k) {
        std::vector<std::vector<mpz_class>> minor(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = static_cast<long>(m[rs[i]][cs[j]]);
        mpz_class d = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        return;
      }
      for (std::size_t c = start; c < cols; ++c) {
        cs.push_back(c);
        pick_cols(c + 1);
        cs.pop_back();
      }
    };
    pick_rows(0);
    out.push_back(g);
  }
  return out;
}

/// Invariant factors (including ones) of a small integer matrix.
inline std::vector<mpz_class> invariant_factors(const Dense& m) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (const auto& dk : determinantal_divisors(m)) {
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

}  // namespace oracle

#endif  // GAMMAHOM_TESTS_ORACLES_HPP
