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

#ifndef GAMMAHOM_MULTI_INDEX_HPP
#define GAMMAHOM_MULTI_INDEX_HPP

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gammahom/gamma.hpp"

namespace gammahom {

/// Levels (q_1, ..., q_k) of a k-fold multisimplicial object.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> levels);
  MultiIndex(std::initializer_list<int> levels) : MultiIndex(std::vector<int>(levels)) {}

  int directions() const { return static_cast<int>(levels_.size()); }
  int total() const;
  int operator[](int j) const { return levels_[static_cast<std::size_t>(j)]; }
  std::span<const int> levels() const { return levels_; }

  MultiIndex with(int j, int q) const;
  MultiIndex prepend(int q) const;
  /// Drops the first `count` directions.
  MultiIndex drop_front(int count = 1) const;
  MultiIndex take_front(int count) const;
  MultiIndex concat(const MultiIndex& other) const;

  std::string to_string() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> levels_;
};

/// A face or degeneracy acting in one direction of a multisimplicial object.
struct DirOp {
  int direction = 0;
  SimplicialOp op;

  MultiIndex target(const MultiIndex& q) const;
  /// Throws ValidationError when the operator does not exist at q.
  void check(const MultiIndex& q) const;

  auto operator<=>(const DirOp&) const = default;
};

/// All k-tuples of non-negative integers summing to `total`, in
/// lexicographic order.
std::vector<MultiIndex> multi_indices_of_total(int directions, int total);

}  // namespace gammahom

#endif  // GAMMAHOM_MULTI_INDEX_HPP
