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

#include "gammahom/field_linalg.hpp"

#include <bit>

#include "gammahom/errors.hpp"

namespace gammahom {

std::uint32_t mod_p(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw IntegrityError("zero has no inverse");
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return mod_p(t, p);
}

FpVector to_fp(std::span<const MatrixEntry> column, std::uint32_t p) {
  FpVector v;
  v.reserve(column.size());
  for (const auto& e : column) {
    std::uint32_t x = mod_p(e.value, p);
    if (x != 0) v.emplace_back(e.row, x);
  }
  return v;
}

namespace {

// a - c * b over F_p.
FpVector axpy(const FpVector& a, std::uint32_t c, const FpVector& b, std::uint32_t p) {
  FpVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const std::uint64_t neg = p - c;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, static_cast<std::uint32_t>(neg * b[j].second % p));
      ++j;
    } else {
      std::uint32_t v = static_cast<std::uint32_t>((a[i].second + neg * b[j].second) % p);
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

void scale(FpVector& v, std::uint32_t c, std::uint32_t p) {
  for (auto& [i, x] : v) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * c % p);
}

// Echelon basis keyed by the largest index of each vector, normalised so the
// leading value is 1.
class SparseEchelon {
 public:
  SparseEchelon(std::uint32_t p, std::size_t dim) : p_(p), pivot_of_(dim, -1) {}

  // Reduces v (and, in lockstep, `track`) against the basis.
  void reduce(FpVector& v, FpVector* track) const {
    while (!v.empty()) {
      const auto [idx, val] = v.back();
      const std::int32_t k = pivot_of_[idx];
      if (k < 0) return;
      v = axpy(v, val, rows_[static_cast<std::size_t>(k)], p_);
      if (track) *track = axpy(*track, val, tracks_[static_cast<std::size_t>(k)], p_);
    }
  }

  void insert(FpVector v, FpVector track) {
    const std::uint32_t inv = inverse_mod(v.back().second, p_);
    scale(v, inv, p_);
    scale(track, inv, p_);
    pivot_of_[v.back().first] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(v));
    tracks_.push_back(std::move(track));
  }

  std::size_t rank() const { return rows_.size(); }

  std::size_t footprint() const {
    std::size_t n = pivot_of_.size() * sizeof(std::int32_t);
    for (const auto& r : rows_) n += r.size() * sizeof(r[0]);
    for (const auto& t : tracks_) n += t.size() * sizeof(t[0]);
    return n;
  }

 private:
  std::uint32_t p_;
  std::vector<std::int32_t> pivot_of_;
  std::vector<FpVector> rows_;
  std::vector<FpVector> tracks_;
};

class F2Echelon {
 public:
  explicit F2Echelon(std::size_t dim)
      : words_((dim + 63) / 64), pivot_of_(dim, -1), scratch_(words_) {}

  bool add(std::span<const MatrixEntry> column) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (const auto& e : column)
      if (e.value & 1) scratch_[e.row >> 6] ^= std::uint64_t{1} << (e.row & 63);
    // Reduced form: only the entries originally present at pivot positions
    // need clearing.
    for (const auto& e : column) {
      if (!(e.value & 1)) continue;
      const std::int32_t k = pivot_of_[e.row];
      if (k < 0) continue;
      const std::uint64_t* b = row(static_cast<std::size_t>(k));
      for (std::size_t w = 0; w < words_; ++w) scratch_[w] ^= b[w];
    }
    std::size_t lead = words_ * 64;
    for (std::size_t w = 0; w < words_; ++w)
      if (scratch_[w]) {
        lead = w * 64 + static_cast<std::size_t>(std::countr_zero(scratch_[w]));
        break;
      }
    if (lead == words_ * 64) return false;
    const std::size_t lw = lead >> 6;
    const std::uint64_t lbit = std::uint64_t{1} << (lead & 63);
    for (std::size_t k = 0; k < rank_; ++k) {
      std::uint64_t* b = row(k);
      if (b[lw] & lbit)
        for (std::size_t w = 0; w < words_; ++w) b[w] ^= scratch_[w];
    }
    data_.insert(data_.end(), scratch_.begin(), scratch_.end());
    pivot_of_[lead] = static_cast<std::int32_t>(rank_++);
    return true;
  }

  std::size_t rank() const { return rank_; }

  std::size_t footprint() const {
    return data_.size() * sizeof(std::uint64_t) + pivot_of_.size() * sizeof(std::int32_t);
  }

 private:
  std::uint64_t* row(std::size_t k) { return data_.data() + k * words_; }
  const std::uint64_t* row(std::size_t k) const { return data_.data() + k * words_; }

  std::size_t words_;
  std::size_t rank_ = 0;
  std::vector<std::int32_t> pivot_of_;
  std::vector<std::uint64_t> data_;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace

struct RankAccumulator::Impl {
  std::unique_ptr<F2Echelon> f2;
  std::unique_ptr<SparseEchelon> fp;
};

RankAccumulator::RankAccumulator(std::uint32_t p, std::size_t dim)
    : p_(p), dim_(dim), impl_(std::make_unique<Impl>()) {
  if (p == 2)
    impl_->f2 = std::make_unique<F2Echelon>(dim);
  else
    impl_->fp = std::make_unique<SparseEchelon>(p, dim);
}

RankAccumulator::~RankAccumulator() = default;
RankAccumulator::RankAccumulator(RankAccumulator&&) noexcept = default;
RankAccumulator& RankAccumulator::operator=(RankAccumulator&&) noexcept = default;

RankAccumulator RankAccumulator::clone() const {
  RankAccumulator copy(p_, 0);
  copy.dim_ = dim_;
  if (impl_->f2)
    copy.impl_->f2 = std::make_unique<F2Echelon>(*impl_->f2);
  else
    copy.impl_->fp = std::make_unique<SparseEchelon>(*impl_->fp);
  return copy;
}

std::size_t RankAccumulator::footprint() const {
  return impl_->f2 ? impl_->f2->footprint() : impl_->fp->footprint();
}

bool RankAccumulator::add(std::span<const MatrixEntry> column) {
  if (impl_->f2) return impl_->f2->add(column);
  FpVector v = to_fp(column, p_);
  impl_->fp->reduce(v, nullptr);
  if (v.empty()) return false;
  impl_->fp->insert(std::move(v), {});
  return true;
}

std::size_t RankAccumulator::rank() const {
  return impl_->f2 ? impl_->f2->rank() : impl_->fp->rank();
}

std::size_t field_rank(const SparseMatrix& m, std::uint32_t p) {
  RankAccumulator acc(p, m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) acc.add(m.column(c));
  return acc.rank();
}

std::vector<FpVector> field_kernel(const SparseMatrix& m, std::uint32_t p) {
  SparseEchelon basis(p, m.rows());
  std::vector<FpVector> kernel;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    FpVector v = to_fp(m.column(c), p);
    FpVector track{{static_cast<std::uint32_t>(c), 1}};
    basis.reduce(v, &track);
    if (v.empty())
      kernel.push_back(std::move(track));
    else
      basis.insert(std::move(v), std::move(track));
  }
  return kernel;
}

}  // namespace gammahom
