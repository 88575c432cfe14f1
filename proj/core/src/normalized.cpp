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

#include "gammahom/normalized.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <thread>

#include "gammahom/errors.hpp"
#include "gammahom/field_linalg.hpp"

namespace gammahom {

LevelBasis::LevelBasis(const MSSet& x, const MultiIndex& q, std::uint64_t cell_budget)
    : level_(q), cells_(x.count(q)) {
  if (cells_ > cell_budget)
    throw BudgetExceeded("level of " + std::to_string(cells_) + " cells exceeds the cell budget",
                         x.describe() + " " + q.to_string());
  bits_.assign((cells_ + 1 + 63) / 64, ~std::uint64_t{0});
  bits_[0] &= ~std::uint64_t{1};
  const std::uint64_t tail = (cells_ + 1) & 63;
  if (tail) bits_.back() &= (std::uint64_t{1} << tail) - 1;

  // A cell is degenerate iff it is hit by some degeneracy from one level down.
  for (int j = 0; j < q.directions(); ++j) {
    if (q[j] == 0) continue;
    const MultiIndex lower = q.with(j, q[j] - 1);
    const std::uint64_t n = x.count(lower);
    if (n > cell_budget)
      throw BudgetExceeded("level exceeds the cell budget", x.describe() + " " + lower.to_string());
    for (int i = 0; i < q[j]; ++i) {
      const CellFn s = x.structure(lower, {j, SimplicialOp::degeneracy(i)});
      for (Cell c = 1; c <= n; ++c) {
        const Cell t = s(c);
        bits_[t >> 6] &= ~(std::uint64_t{1} << (t & 63));
      }
    }
  }
  prefix_.resize(bits_.size());
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    prefix_[w] = acc;
    acc += static_cast<std::uint64_t>(std::popcount(bits_[w]));
  }
  rank_ = static_cast<std::size_t>(acc);
}

std::size_t LevelBasis::position(Cell c) const {
  const std::uint64_t below = bits_[c >> 6] & ((std::uint64_t{1} << (c & 63)) - 1);
  return static_cast<std::size_t>(prefix_[c >> 6] + std::popcount(below));
}

NormalizedChains::NormalizedChains(MSSetPtr x, ChainOptions options)
    : x_(std::move(x)), options_(options) {
  if (options_.threads == 0) options_.threads = std::max(1u, std::thread::hardware_concurrency());
}

const LevelBasis& NormalizedChains::level_basis(const MultiIndex& q) const {
  {
    std::lock_guard lock(mutex_);
    auto it = levels_.find(q);
    if (it != levels_.end()) return *it->second;
  }
  auto basis = std::make_shared<const LevelBasis>(*x_, q, options_.cell_budget);
  std::lock_guard lock(mutex_);
  return *levels_.emplace(q, std::move(basis)).first->second;
}

const std::vector<NormalizedChains::Block>& NormalizedChains::blocks(int d) const {
  {
    std::lock_guard lock(mutex_);
    auto it = blocks_.find(d);
    if (it != blocks_.end()) return it->second;
  }
  std::vector<Block> out;
  std::size_t offset = 0;
  if (d >= 0)
    for (const MultiIndex& q : multi_indices_of_total(x_->directions(), d)) {
      if (x_->count(q) == 0) continue;
      const LevelBasis& b = level_basis(q);
      if (b.rank() == 0) continue;
      std::shared_ptr<const LevelBasis> ptr;
      {
        std::lock_guard lock(mutex_);
        ptr = levels_.at(q);
      }
      out.push_back({q, std::move(ptr), offset});
      offset += b.rank();
    }
  std::lock_guard lock(mutex_);
  return blocks_.emplace(d, std::move(out)).first->second;
}

std::size_t NormalizedChains::rank(int d) const {
  const auto& b = blocks(d);
  return b.empty() ? 0 : b.back().offset + b.back().basis->rank();
}

std::optional<std::size_t> NormalizedChains::position(const MultiIndex& q, Cell c) const {
  for (const Block& b : blocks(q.total()))
    if (b.level == q) {
      if (!b.basis->nondegenerate(c)) return std::nullopt;
      return b.offset + b.basis->position(c);
    }
  return std::nullopt;
}

namespace {

struct Face {
  CellFn fn;
  const NormalizedChains::Block* target;
  std::int64_t coefficient;
};

void tidy(std::vector<MatrixEntry>& col) {
  std::sort(col.begin(), col.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return a.row < b.row; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < col.size();) {
    MatrixEntry e = col[r++];
    while (r < col.size() && col[r].row == e.row) e.value += col[r++].value;
    if (e.value != 0) col[w++] = e;
  }
  col.resize(w);
}

void column_of(Cell c, const std::vector<Face>& faces, std::vector<MatrixEntry>& col) {
  col.clear();
  for (const Face& f : faces) {
    const Cell t = f.fn(c);
    if (f.target->basis->nondegenerate(t))
      col.push_back({static_cast<std::uint32_t>(f.target->offset + f.target->basis->position(t)),
                     f.coefficient});
  }
  tidy(col);
}

}  // namespace

void NormalizedChains::for_each_boundary_column(
    int d, const std::function<bool(std::vector<MatrixEntry>&)>& sink) const {
  if (d <= 0) return;
  const auto& source = blocks(d);
  const auto& target = blocks(d - 1);
  std::vector<MatrixEntry> col;
  for (const Block& block : source) {
    const MultiIndex& q = block.level;
    std::vector<Face> faces;
    int before = 0;
    for (int j = 0; j < q.directions(); ++j) {
      if (q[j] > 0) {
        const MultiIndex t = q.with(j, q[j] - 1);
        const auto it = std::find_if(target.begin(), target.end(),
                                     [&](const Block& b) { return b.level == t; });
        if (it != target.end())
          for (int i = 0; i <= q[j]; ++i)
            faces.push_back({x_->structure(q, {j, SimplicialOp::face(i)}), &*it,
                             ((before + i) % 2) ? -1 : 1});
      }
      before += q[j];
    }

    const LevelBasis& basis = *block.basis;
    const std::uint64_t n = basis.cells();
    const unsigned threads = options_.threads;
    constexpr std::uint64_t kChunk = 1 << 15;
    if (threads <= 1 || n < 2 * kChunk) {
      for (Cell c = 1; c <= n; ++c) {
        if (!basis.nondegenerate(c)) continue;
        column_of(c, faces, col);
        if (!sink(col)) return;
      }
      continue;
    }
    // Workers fill consecutive chunks; columns are handed to the sink in
    // basis order, so the result does not depend on the thread count.
    std::vector<std::vector<std::vector<MatrixEntry>>> out(threads);
    for (Cell start = 1; start <= n; start += kChunk * threads) {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          auto& mine = out[t];
          mine.clear();
          const Cell lo = start + t * kChunk;
          const Cell hi = std::min<Cell>(lo + kChunk, n + 1);
          std::vector<MatrixEntry> scratch;
          for (Cell c = lo; c < hi; ++c) {
            if (!basis.nondegenerate(c)) continue;
            column_of(c, faces, scratch);
            mine.push_back(scratch);
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& chunk : out)
        for (auto& column : chunk)
          if (!sink(column)) return;
    }
  }
}

SparseMatrix NormalizedChains::boundary(int d) const {
  if (d <= 0) return SparseMatrix(0, rank(d));
  SparseMatrix m = SparseMatrix::with_rows(rank(d - 1));
  for_each_boundary_column(d, [&](std::vector<MatrixEntry>& col) {
    m.append_column(col);
    return true;
  });
  return m;
}

ChainComplex NormalizedChains::complex(const Ring& ring, int top) const {
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> boundaries;
  for (int d = 0; d <= top; ++d) {
    ranks.push_back(rank(d));
    if (d > 0) boundaries.push_back(boundary(d));
  }
  return ChainComplex(ring, std::move(ranks), std::move(boundaries));
}

namespace {

// Field ranks depend only on the object, which its description pins down,
// so separately built chains of the same object share them. Boundary spans
// are kept too when small, so later map checks need not stream again.
using RankKey = std::tuple<std::string, int, std::uint32_t>;

struct SharedRanks {
  std::mutex mutex;
  std::map<RankKey, std::size_t> ranks;
  std::map<RankKey, std::shared_ptr<const RankAccumulator>> spans;
};

SharedRanks& shared_ranks() {
  static SharedRanks s;
  return s;
}

constexpr std::size_t kSpanCacheBytes = std::size_t{256} << 20;

}  // namespace

std::size_t NormalizedChains::boundary_rank(int d, std::uint32_t p) const {
  if (d <= 0) return 0;
  {
    std::lock_guard lock(mutex_);
    auto it = field_ranks_.find({d, p});
    if (it != field_ranks_.end()) return it->second;
  }
  const RankKey key{x_->describe(), d, p};
  std::size_t result = 0;
  bool found = false;
  {
    SharedRanks& shared = shared_ranks();
    std::lock_guard lock(shared.mutex);
    auto it = shared.ranks.find(key);
    if (it != shared.ranks.end()) {
      result = it->second;
      found = true;
    }
  }
  if (!found) result = boundary_span(d, p).rank();
  std::lock_guard lock(mutex_);
  field_ranks_[{d, p}] = result;
  return result;
}

RankAccumulator NormalizedChains::boundary_span(int d, std::uint32_t p) const {
  if (d <= 0) return RankAccumulator(p, 0);
  const std::size_t rows = rank(d - 1);
  const RankKey key{x_->describe(), d, p};
  SharedRanks& shared = shared_ranks();
  {
    std::lock_guard lock(shared.mutex);
    auto it = shared.spans.find(key);
    if (it != shared.spans.end()) return it->second->clone();
  }
  const std::size_t cols = rank(d);
  RankAccumulator acc(p, rows);
  if (cols > 0 && rows > 0) {
    // Once the span fills the cycles below it, no column can add to it.
    const std::size_t bound = std::min(cols, rows - boundary_rank(d - 1, p));
    if (bound > 0)
      for_each_boundary_column(d, [&](std::vector<MatrixEntry>& col) {
        acc.add(col);
        return acc.rank() < bound;
      });
  }
  std::lock_guard lock(shared.mutex);
  shared.ranks[key] = acc.rank();
  if (acc.footprint() <= kSpanCacheBytes)
    shared.spans[key] = std::make_shared<const RankAccumulator>(acc.clone());
  return acc;
}

HomologyGroup NormalizedChains::homology(int d, const Ring& ring) const {
  if (ring.is_prime_field()) {
    const std::uint32_t p = ring.characteristic();
    HomologyGroup g;
    g.rank = rank(d) - boundary_rank(d, p) - boundary_rank(d + 1, p);
    return g;
  }
  return homology_at(rank(d), boundary(d + 1), boundary(d), ring);
}

SparseMatrix chains_of_map(const MSMap& f, const NormalizedChains& source,
                           const NormalizedChains& target, int d) {
  SparseMatrix m = SparseMatrix::with_rows(target.rank(d));
  const auto& tb = target.blocks(d);
  for (const auto& block : source.blocks(d)) {
    const CellFn fq = f.component(block.level);
    const auto it = std::find_if(tb.begin(), tb.end(),
                                 [&](const auto& b) { return b.level == block.level; });
    for (Cell c = 1; c <= block.basis->cells(); ++c) {
      if (!block.basis->nondegenerate(c)) continue;
      std::vector<MatrixEntry> col;
      if (it != tb.end()) {
        const Cell t = fq(c);
        if (it->basis->nondegenerate(t))
          col.push_back({static_cast<std::uint32_t>(it->offset + it->basis->position(t)), 1});
      }
      m.append_column(std::move(col));
    }
  }
  return m;
}

std::vector<HomologyGroup> level_homology(const NormalizedChains& chains, const Ring& ring,
                                          int lo, int hi) {
  std::vector<HomologyGroup> out;
  for (int d = lo; d <= hi; ++d) out.push_back(chains.homology(d, ring));
  return out;
}

namespace {

HomologyMapReport field_homology_map(const MSMap& f, const NormalizedChains& source,
                                     const NormalizedChains& target, std::uint32_t p, int d) {
  HomologyMapReport r;
  const std::vector<FpVector> cycles = field_kernel(source.boundary(d), p);
  r.source.rank = cycles.size() - source.boundary_rank(d + 1, p);
  RankAccumulator acc = target.boundary_span(d + 1, p);
  const std::size_t boundaries = acc.rank();
  r.target.rank = target.rank(d) - target.boundary_rank(d, p) - boundaries;

  const SparseMatrix fd = chains_of_map(f, source, target, d);
  for (const FpVector& z : cycles) {
    std::vector<MatrixEntry> image;
    for (const auto& [i, v] : z)
      for (const auto& e : fd.column(i))
        image.push_back({e.row, static_cast<std::int64_t>(mod_p(e.value, p)) * v});
    for (auto& e : image) e.value = mod_p(e.value, p);
    tidy(image);
    acc.add(image);
  }
  r.image_rank = acc.rank() - boundaries;
  r.isomorphism = r.source.rank == r.target.rank && r.image_rank == r.target.rank;
  r.certificate = "rank of induced map over F" + std::to_string(p);
  return r;
}

HomologyMapReport exact_homology_map(const MSMap& f, const NormalizedChains& source,
                                     const NormalizedChains& target, const Ring& ring, int d) {
  HomologyMapReport r;
  r.source = source.homology(d, ring);
  r.target = target.homology(d, ring);

  // Integral cycles of the source: trailing columns of the right transform.
  const SmithForm s = smith_normal_form(source.boundary(d), true);
  const DenseBigMatrix& v = *s.right;
  const std::size_t n = source.rank(d);
  const std::size_t rows = target.rank(d);
  const SparseMatrix fd = chains_of_map(f, source, target, d);
  const SparseMatrix bt = target.boundary(d + 1);

  DenseBigMatrix m(rows);
  for (auto& row : m) row.reserve(n - s.rank() + bt.cols());
  for (std::size_t k = s.rank(); k < n; ++k) {
    std::vector<BigInt> col(rows, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i][k] == 0) continue;
      for (const auto& e : fd.column(i)) col[e.row] += v[i][k] * BigInt(static_cast<long>(e.value));
    }
    for (std::size_t row = 0; row < rows; ++row) m[row].push_back(col[row]);
  }
  for (std::size_t c = 0; c < bt.cols(); ++c) {
    std::vector<BigInt> col(rows, 0);
    for (const auto& e : bt.column(c)) col[e.row] = BigInt(static_cast<long>(e.value));
    for (std::size_t row = 0; row < rows; ++row) m[row].push_back(col[row]);
  }
  const std::size_t boundary_rank = rational_rank(bt);
  const std::size_t cycles_rank = rows - rational_rank(target.boundary(d));
  std::size_t combined_rank = 0;
  bool unit_factors = true;
  if (rows > 0 && !m[0].empty()) {
    const SmithForm sm = smith_normal_form(std::move(m), false);
    combined_rank = sm.rank();
    unit_factors = sm.torsion().empty();
  }
  r.image_rank = combined_rank - boundary_rank;
  if (ring.kind() == Ring::Kind::Integers) {
    r.isomorphism = r.source == r.target && combined_rank == cycles_rank && unit_factors;
    r.certificate = "equal groups and surjectivity onto cycles (unit Smith factors)";
  } else {
    r.isomorphism = r.source.rank == r.target.rank && r.image_rank == r.target.rank;
    r.certificate = "rational rank of induced map";
  }
  return r;
}

}  // namespace

HomologyMapReport homology_map(const MSMap& f, const NormalizedChains& source,
                               const NormalizedChains& target, const Ring& ring, int d) {
  if (ring.is_prime_field()) return field_homology_map(f, source, target, ring.characteristic(), d);
  return exact_homology_map(f, source, target, ring, d);
}

}  // namespace gammahom
