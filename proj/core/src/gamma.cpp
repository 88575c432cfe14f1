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

#include "gammahom/gamma.hpp"

#include <sstream>

#include "gammahom/errors.hpp"

namespace gammahom {

FinPointedSet::FinPointedSet(int n) : n_(n) {
  if (n < 0) throw ValidationError("pointed set size must be non-negative");
}

PointedMap::PointedMap(FinPointedSet source, FinPointedSet target, std::vector<int> table)
    : source_(source), target_(target), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != source_.cardinality())
    throw ValidationError("pointed map table has wrong length");
  if (table_[0] != 0) throw ValidationError("pointed map must fix the basepoint");
  for (int v : table_)
    if (v < 0 || v > target_.size())
      throw ValidationError("pointed map value out of range");
}

PointedMap PointedMap::identity(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) t[static_cast<std::size_t>(i)] = i;
  return PointedMap(FinPointedSet(n), FinPointedSet(n), std::move(t));
}

PointedMap PointedMap::to_basepoint(int n, int m) {
  return PointedMap(FinPointedSet(n), FinPointedSet(m),
                    std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
}

bool PointedMap::is_identity() const {
  if (source_ != target_) return false;
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string PointedMap::to_string() const {
  std::ostringstream os;
  os << "[" << source_.size() << "]->[" << target_.size() << "]{";
  for (std::size_t i = 1; i < table_.size(); ++i) os << (i > 1 ? "," : "") << table_[i];
  os << "}";
  return os.str();
}

PointedMap compose(const PointedMap& f, const PointedMap& g) {
  if (f.target() != g.source())
    throw CompositionError("cannot compose " + f.to_string() + " with " + g.to_string());
  std::vector<int> t(static_cast<std::size_t>(f.source().cardinality()));
  for (int x = 0; x <= f.source().size(); ++x) t[static_cast<std::size_t>(x)] = g(f(x));
  return PointedMap(f.source(), g.target(), std::move(t));
}

void PartialMap::validate() const {
  if (source < 0 || target < 0) throw ValidationError("partial map sizes must be non-negative");
  if (domain.size() != action.size())
    throw ValidationError("partial map domain and action differ in length");
  std::vector<bool> seen(static_cast<std::size_t>(source), false);
  for (int a : domain) {
    if (a < 0 || a >= source) throw ValidationError("partial map domain element out of range");
    if (seen[static_cast<std::size_t>(a)])
      throw ValidationError("partial map domain has a repeated element");
    seen[static_cast<std::size_t>(a)] = true;
  }
  for (int b : action)
    if (b < 0 || b >= target) throw ValidationError("partial map value out of range");
}

PartialMap compose(const PartialMap& p, const PartialMap& q) {
  p.validate();
  q.validate();
  if (p.target != q.source) throw CompositionError("partial maps are not composable");
  std::vector<int> where(static_cast<std::size_t>(q.source), -1);
  for (std::size_t k = 0; k < q.domain.size(); ++k)
    where[static_cast<std::size_t>(q.domain[k])] = q.action[k];
  PartialMap r{p.source, q.target, {}, {}};
  for (std::size_t k = 0; k < p.domain.size(); ++k) {
    int y = where[static_cast<std::size_t>(p.action[k])];
    if (y < 0) continue;
    r.domain.push_back(p.domain[k]);
    r.action.push_back(y);
  }
  return r;
}

PointedMap gamma_from_partial(const PartialMap& p) {
  p.validate();
  std::vector<int> t(static_cast<std::size_t>(p.source) + 1, 0);
  for (std::size_t k = 0; k < p.domain.size(); ++k)
    t[static_cast<std::size_t>(p.domain[k]) + 1] = p.action[k] + 1;
  return PointedMap(FinPointedSet(p.source), FinPointedSet(p.target), std::move(t));
}

void Injection::validate() const {
  if (static_cast<int>(map.size()) != source)
    throw ValidationError("injection table has wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(target), false);
  for (int v : map) {
    if (v < 0 || v >= target) throw ValidationError("injection value out of range");
    if (hit[static_cast<std::size_t>(v)]) throw ValidationError("map is not injective");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Injection compose(const Injection& first, const Injection& second) {
  first.validate();
  second.validate();
  if (first.target != second.source) throw CompositionError("injections are not composable");
  Injection r{first.source, second.target, {}};
  for (int v : first.map) r.map.push_back(second.map[static_cast<std::size_t>(v)]);
  return r;
}

PointedMap sharp(const Injection& iota) {
  iota.validate();
  std::vector<int> t(static_cast<std::size_t>(iota.target) + 1, 0);
  for (int x = 0; x < iota.source; ++x)
    t[static_cast<std::size_t>(iota.map[static_cast<std::size_t>(x)]) + 1] = x + 1;
  return PointedMap(FinPointedSet(iota.target), FinPointedSet(iota.source), std::move(t));
}

int smash_index(int i, int j, int m) { return (i == 0 || j == 0) ? 0 : (i - 1) * m + j; }

std::pair<int, int> smash_split(int k, int m) {
  if (k == 0) return {0, 0};
  return {(k - 1) / m + 1, (k - 1) % m + 1};
}

FinPointedSet smash(FinPointedSet a, FinPointedSet b) {
  return FinPointedSet(a.size() * b.size());
}

PointedMap smash(const PointedMap& f, const PointedMap& g) {
  const int n = f.source().size(), m = g.source().size();
  const int m2 = g.target().size();
  std::vector<int> t(static_cast<std::size_t>(n * m) + 1, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      t[static_cast<std::size_t>(smash_index(i, j, m))] = smash_index(f(i), g(j), m2);
  return PointedMap(smash(f.source(), g.source()), smash(f.target(), g.target()), std::move(t));
}

FinPointedSet wedge(FinPointedSet a, FinPointedSet b) { return FinPointedSet(a.size() + b.size()); }

PointedMap wedge(const PointedMap& f, const PointedMap& g) {
  const int n = f.source().size(), m = g.source().size();
  const int n2 = f.target().size();
  std::vector<int> t(static_cast<std::size_t>(n + m) + 1, 0);
  for (int i = 1; i <= n; ++i) t[static_cast<std::size_t>(i)] = f(i);
  for (int j = 1; j <= m; ++j)
    t[static_cast<std::size_t>(n + j)] = g(j) == 0 ? 0 : n2 + g(j);
  return PointedMap(wedge(f.source(), g.source()), wedge(f.target(), g.target()), std::move(t));
}

std::pair<PointedMap, PointedMap> wedge_inclusions(int n, int m) {
  std::vector<int> left(static_cast<std::size_t>(n) + 1), right(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= n; ++i) left[static_cast<std::size_t>(i)] = i;
  right[0] = 0;
  for (int j = 1; j <= m; ++j) right[static_cast<std::size_t>(j)] = n + j;
  return {PointedMap(FinPointedSet(n), FinPointedSet(n + m), std::move(left)),
          PointedMap(FinPointedSet(m), FinPointedSet(n + m), std::move(right))};
}

PointedMap mu(int n, const PointedMap& f) {
  if (n < 0) throw ValidationError("mu_n needs n >= 0");
  return smash(PointedMap::identity(n), f);
}

PointedMap standard_inclusion(int s, int n) {
  if (s < 1 || s > n) throw ValidationError("standard inclusion index out of range");
  return PointedMap(FinPointedSet(1), FinPointedSet(n), {0, s});
}

void SimplicialOp::check_level(int q) const {
  if (q < 0) throw ValidationError("negative simplicial level");
  if (is_face() && q == 0) throw ValidationError("no face operators at level 0");
  if (index < 0 || index > q) throw ValidationError("simplicial operator index out of range");
}

PointedMap circle_structure(int q, SimplicialOp op) {
  op.check_level(q);
  const int target = op.apply(q);
  std::vector<int> t(static_cast<std::size_t>(q) + 1, 0);
  const int i = op.index;
  for (int k = 1; k <= q; ++k) {
    int v;
    if (op.is_face()) {
      // Precomposing the threshold-k map with the coface skipping i.
      v = k <= i ? k : k - 1;
      if (v == 0 || v == q) v = 0;
    } else {
      v = k <= i ? k : k + 1;
    }
    t[static_cast<std::size_t>(k)] = v;
  }
  return PointedMap(FinPointedSet(q), FinPointedSet(target), std::move(t));
}

std::vector<PointedMap> all_pointed_maps(int n, int m) {
  std::vector<PointedMap> out;
  std::vector<int> t(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    out.emplace_back(FinPointedSet(n), FinPointedSet(m), t);
    int pos = n;
    while (pos >= 1 && t[static_cast<std::size_t>(pos)] == m) {
      t[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 1) break;
    ++t[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace gammahom
