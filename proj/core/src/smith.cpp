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

#include "gammahom/smith.hpp"

#include <algorithm>
#include <numeric>

#include "gammahom/errors.hpp"

namespace gammahom {

namespace {

struct Overflow {};

template <class Int>
struct Arith;

template <>
struct Arith<std::int64_t> {
  static std::int64_t from(std::int64_t v) { return v; }
  static bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
  static bool is_zero(std::int64_t v) { return v == 0; }
  // a - q * b
  static std::int64_t fms(std::int64_t a, std::int64_t q, std::int64_t b) {
    std::int64_t p, r;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
    return r;
  }
  static BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
};

template <>
struct Arith<BigInt> {
  static BigInt from(std::int64_t v) { return BigInt(static_cast<long>(v)); }
  static bool is_unit(const BigInt& v) { return v == 1 || v == -1; }
  static bool is_zero(const BigInt& v) { return v == 0; }
  static BigInt fms(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }
  static BigInt big(const BigInt& v) { return v; }
};

// Eliminates unit pivots in a static Markowitz-like order and returns the
// number eliminated together with the leftover core.
template <class Int>
std::pair<std::size_t, DenseBigMatrix> eliminate_units(const SparseMatrix& m) {
  using A = Arith<Int>;
  using Row = std::vector<std::pair<std::uint32_t, Int>>;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<Row> rows(nr);
  std::vector<std::vector<std::uint32_t>> col_rows(nc);
  for (std::size_t c = 0; c < nc; ++c)
    for (const auto& e : m.column(c)) {
      rows[e.row].emplace_back(static_cast<std::uint32_t>(c), A::from(e.value));
      col_rows[c].push_back(e.row);
    }
  std::vector<bool> row_alive(nr, true), col_alive(nc, true);

  auto lookup = [&](std::uint32_t r, std::uint32_t c) -> const Int* {
    const Row& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };

  std::size_t units = 0;
  bool progress = true;
  Row merged;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < nc; ++c)
      if (col_alive[c]) order.push_back(c);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return col_rows[a].size() < col_rows[b].size();
    });
    for (std::uint32_t c : order) {
      if (!col_alive[c]) continue;
      // Drop stale row references and pick the sparsest unit row.
      auto& cr = col_rows[c];
      std::sort(cr.begin(), cr.end());
      cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
      std::erase_if(cr, [&](std::uint32_t r) { return !row_alive[r] || lookup(r, c) == nullptr; });
      std::int64_t best = -1;
      std::size_t best_len = 0;
      for (std::uint32_t r : cr) {
        if (!A::is_unit(*lookup(r, c))) continue;
        if (best < 0 || rows[r].size() < best_len) {
          best = r;
          best_len = rows[r].size();
        }
      }
      if (best < 0) continue;
      const auto pr = static_cast<std::uint32_t>(best);
      const Int pivot = *lookup(pr, c);
      const Row prow = rows[pr];
      for (std::uint32_t r : cr) {
        if (r == pr) continue;
        const Int factor = (*lookup(r, c)) * pivot;  // pivot is its own inverse
        const Row& row = rows[r];
        merged.clear();
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < prow.size()) {
          if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
            merged.push_back(row[i++]);
          } else if (i == row.size() || prow[j].first < row[i].first) {
            Int v = A::fms(A::from(0), factor, prow[j].second);
            merged.emplace_back(prow[j].first, v);
            col_rows[prow[j].first].push_back(r);
            ++j;
          } else {
            Int v = A::fms(row[i].second, factor, prow[j].second);
            if (!A::is_zero(v)) merged.emplace_back(row[i].first, v);
            ++i;
            ++j;
          }
        }
        rows[r].swap(merged);
      }
      row_alive[pr] = false;
      col_alive[c] = false;
      rows[pr].clear();
      cr.clear();
      ++units;
      progress = true;
    }
  }

  // Leftover core, restricted to columns still alive.
  std::vector<std::uint32_t> live_rows;
  std::vector<std::int64_t> col_pos(nc, -1);
  std::size_t ncore = 0;
  for (std::uint32_t r = 0; r < nr; ++r) {
    if (!row_alive[r]) continue;
    bool any = false;
    for (const auto& [c, v] : rows[r])
      if (col_alive[c] && !A::is_zero(v)) {
        any = true;
        if (col_pos[c] < 0) col_pos[c] = static_cast<std::int64_t>(ncore++);
      }
    if (any) live_rows.push_back(r);
  }
  DenseBigMatrix core(live_rows.size(), std::vector<BigInt>(ncore, 0));
  for (std::size_t k = 0; k < live_rows.size(); ++k)
    for (const auto& [c, v] : rows[live_rows[k]])
      if (col_alive[c] && !A::is_zero(v)) core[k][static_cast<std::size_t>(col_pos[c])] = A::big(v);
  return {units, std::move(core)};
}

DenseBigMatrix identity_matrix(std::size_t n) {
  DenseBigMatrix id(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

std::vector<BigInt> SmithForm::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

DenseBigMatrix to_big(const SparseMatrix& m) {
  DenseBigMatrix d(m.rows(), std::vector<BigInt>(m.cols(), 0));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) d[e.row][c] = BigInt(static_cast<long>(e.value));
  return d;
}

DenseBigMatrix multiply(const DenseBigMatrix& a, const DenseBigMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k == 0 ? 0 : b[0].size();
  if (n > 0 && a[0].size() != k) throw CompositionError("matrix dimensions do not match");
  DenseBigMatrix out(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

BigInt determinant(DenseBigMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

DenseBigMatrix transpose(const DenseBigMatrix& a, std::size_t rows, std::size_t cols) {
  DenseBigMatrix t(cols, std::vector<BigInt>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

// Rows p, i of m become (x p + y i, u p + v i).
void combine_rows(DenseBigMatrix& m, std::size_t p, std::size_t i, const BigInt& x, const BigInt& y,
                  const BigInt& u, const BigInt& v) {
  for (std::size_t j = 0; j < m[p].size(); ++j) {
    if (m[p][j] == 0 && m[i][j] == 0) continue;
    BigInt a = x * m[p][j] + y * m[i][j];
    m[i][j] = u * m[p][j] + v * m[i][j];
    m[p][j] = std::move(a);
  }
}

void combine_cols(DenseBigMatrix& m, std::size_t p, std::size_t i, const BigInt& x, const BigInt& y,
                  const BigInt& u, const BigInt& v) {
  for (auto& row : m) {
    if (row[p] == 0 && row[i] == 0) continue;
    BigInt a = x * row[p] + y * row[i];
    row[i] = u * row[p] + v * row[i];
    row[p] = std::move(a);
  }
}

// Row-style Hermite form: positive pivots, entries above each pivot reduced
// into [0, pivot). Row operations are mirrored on t when given.
void hermite_rows(DenseBigMatrix& m, std::size_t rows, std::size_t cols, DenseBigMatrix* t) {
  auto both = [&](auto&& op) {
    op(m);
    if (t) op(*t);
  };
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols && p < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = p; i < rows; ++i)
      if (m[i][c] != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
    if (best == rows) continue;
    if (best != p) both([&](DenseBigMatrix& x) { std::swap(x[p], x[best]); });
    for (std::size_t i = p + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const BigInt a = m[p][c], b = m[i][c];
      if (b % a == 0) {
        const BigInt q = b / a;
        both([&](DenseBigMatrix& x) { combine_rows(x, p, i, 1, 0, -q, 1); });
        continue;
      }
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const BigInt u = -b / g, v = a / g;
      both([&](DenseBigMatrix& mat) { combine_rows(mat, p, i, x, y, u, v); });
    }
    if (m[p][c] < 0) both([&](DenseBigMatrix& x) { combine_rows(x, p, p, -1, 0, -1, 0); });
    for (std::size_t r = 0; r < p; ++r) {
      if (m[r][c] == 0) continue;
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[p][c].get_mpz_t());
      if (q != 0) both([&](DenseBigMatrix& x) { combine_rows(x, r, p, 1, -q, 0, 1); });
    }
    ++p;
  }
}

// At most one non-zero per row and per column.
bool is_monomial(const DenseBigMatrix& m, std::size_t rows, std::size_t cols) {
  std::vector<int> col_count(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0) {
        if (++row_count > 1 || ++col_count[j] > 1) return false;
      }
  }
  return true;
}

}  // namespace

SmithForm smith_normal_form(DenseBigMatrix a, bool with_transforms) {
  SmithForm out;
  out.rows = a.size();
  out.cols = a.empty() ? 0 : a[0].size();
  const std::size_t R = out.rows, C = out.cols;
  DenseBigMatrix U, Vt;
  if (with_transforms) {
    U = identity_matrix(R);
    Vt = identity_matrix(C);
  }

  // Alternate row and column Hermite forms; the leading pivots shrink until
  // the matrix is monomial.
  while (true) {
    hermite_rows(a, R, C, with_transforms ? &U : nullptr);
    if (is_monomial(a, R, C)) break;
    DenseBigMatrix at = transpose(a, R, C);
    hermite_rows(at, C, R, with_transforms ? &Vt : nullptr);
    a = transpose(at, C, R);
    if (is_monomial(a, R, C)) break;
  }
  DenseBigMatrix V = with_transforms ? transpose(Vt, C, C) : DenseBigMatrix{};

  // Move the non-zeros onto the diagonal.
  std::size_t rank = 0;
  for (std::size_t i = 0; i < R; ++i) {
    std::size_t j = C;
    for (std::size_t c = 0; c < C; ++c)
      if (a[i][c] != 0) j = c;
    if (j == C) continue;
    if (i != rank) {
      std::swap(a[i], a[rank]);
      if (with_transforms) std::swap(U[i], U[rank]);
    }
    if (j != rank) {
      for (auto& row : a) std::swap(row[j], row[rank]);
      if (with_transforms)
        for (auto& row : V) std::swap(row[j], row[rank]);
    }
    ++rank;
  }

  // diag(a, b) ~ diag(gcd, lcm) until each entry divides the next.
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      const BigInt da = a[i][i], db = a[j][j];
      if (db % da == 0) continue;
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
      // Row i += row j, then a column gcd step, then clear the stray entry.
      combine_rows(a, i, j, 1, 1, 0, 1);
      if (with_transforms) combine_rows(U, i, j, 1, 1, 0, 1);
      combine_cols(a, i, j, x, y, -db / g, da / g);
      if (with_transforms) combine_cols(V, i, j, x, y, -db / g, da / g);
      const BigInt q = a[j][i] / a[i][i];
      combine_rows(a, j, i, 1, -q, 0, 1);
      if (with_transforms) combine_rows(U, j, i, 1, -q, 0, 1);
    }
  for (std::size_t k = 0; k < rank; ++k) {
    if (a[k][k] < 0) {
      combine_rows(a, k, k, -1, 0, -1, 0);
      if (with_transforms) combine_rows(U, k, k, -1, 0, -1, 0);
    }
    out.diagonal.push_back(a[k][k]);
  }
  if (with_transforms) {
    out.left = std::move(U);
    out.right = std::move(V);
  }
  return out;
}

SmithForm smith_normal_form(const SparseMatrix& m, bool with_transforms) {
  if (with_transforms) {
    if (m.rows() == 0) {
      SmithForm out;
      out.cols = m.cols();
      out.left = DenseBigMatrix{};
      out.right = identity_matrix(m.cols());
      return out;
    }
    return smith_normal_form(to_big(m), true);
  }
  std::size_t units = 0;
  DenseBigMatrix core;
  try {
    std::tie(units, core) = eliminate_units<std::int64_t>(m);
  } catch (const Overflow&) {
    std::tie(units, core) = eliminate_units<BigInt>(m);
  }
  SmithForm inner = smith_normal_form(std::move(core), false);
  SmithForm out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.diagonal.assign(units, BigInt(1));
  for (auto& d : inner.diagonal) out.diagonal.push_back(d);
  return out;
}

std::size_t rational_rank(const SparseMatrix& m) { return smith_normal_form(m).rank(); }

}  // namespace gammahom
