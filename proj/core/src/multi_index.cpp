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

#include "gammahom/multi_index.hpp"

#include <numeric>
#include <sstream>

#include "gammahom/errors.hpp"

namespace gammahom {

MultiIndex::MultiIndex(std::vector<int> levels) : levels_(std::move(levels)) {
  for (int q : levels_)
    if (q < 0) throw ValidationError("multi-index levels must be non-negative");
}

int MultiIndex::total() const { return std::accumulate(levels_.begin(), levels_.end(), 0); }

MultiIndex MultiIndex::with(int j, int q) const {
  std::vector<int> l = levels_;
  l[static_cast<std::size_t>(j)] = q;
  return MultiIndex(std::move(l));
}

MultiIndex MultiIndex::prepend(int q) const {
  std::vector<int> l;
  l.reserve(levels_.size() + 1);
  l.push_back(q);
  l.insert(l.end(), levels_.begin(), levels_.end());
  return MultiIndex(std::move(l));
}

MultiIndex MultiIndex::drop_front(int count) const {
  return MultiIndex(std::vector<int>(levels_.begin() + count, levels_.end()));
}

MultiIndex MultiIndex::take_front(int count) const {
  return MultiIndex(std::vector<int>(levels_.begin(), levels_.begin() + count));
}

MultiIndex MultiIndex::concat(const MultiIndex& other) const {
  std::vector<int> l = levels_;
  l.insert(l.end(), other.levels_.begin(), other.levels_.end());
  return MultiIndex(std::move(l));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < levels_.size(); ++j) os << (j ? "," : "") << levels_[j];
  os << ")";
  return os.str();
}

MultiIndex DirOp::target(const MultiIndex& q) const {
  return q.with(direction, op.apply(q[direction]));
}

void DirOp::check(const MultiIndex& q) const {
  if (direction < 0 || direction >= q.directions())
    throw ValidationError("direction " + std::to_string(direction) + " out of range for " +
                          q.to_string());
  op.check_level(q[direction]);
}

std::vector<MultiIndex> multi_indices_of_total(int directions, int total) {
  std::vector<MultiIndex> out;
  if (total < 0) return out;
  if (directions == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(directions), 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == directions - 1) {
      cur[static_cast<std::size_t>(j)] = left;
      out.emplace_back(cur);
      return;
    }
    for (int q = 0; q <= left; ++q) {
      cur[static_cast<std::size_t>(j)] = q;
      self(self, j + 1, left - q);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace gammahom
