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

#include "gammahom/simplicial.hpp"

#include <limits>
#include <vector>

#include "gammahom/errors.hpp"

namespace gammahom {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    return std::numeric_limits<std::uint64_t>::max();
  return a + b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = saturating_mul(r, base);
    if (r == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return r;
}

FinPointedSet MSSet::cells(const MultiIndex& q) const {
  const std::uint64_t n = count(q);
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw BudgetExceeded("level too large to tabulate", describe() + " " + q.to_string());
  return FinPointedSet(static_cast<int>(n));
}

namespace {

CellFn identity_fn() {
  return [](Cell c) { return c; };
}

class PointSS final : public MSSet {
 public:
  explicit PointSS(int k) : k_(k) {}
  int directions() const override { return k_; }
  std::uint64_t count(const MultiIndex&) const override { return 0; }
  CellFn structure(const MultiIndex&, const DirOp&) const override { return identity_fn(); }
  std::string describe() const override { return "pt"; }

 private:
  int k_;
};

class DiscreteSS final : public MSSet {
 public:
  DiscreteSS(std::uint64_t n, int k) : n_(n), k_(k) {}
  int directions() const override { return k_; }
  std::uint64_t count(const MultiIndex&) const override { return n_; }
  CellFn structure(const MultiIndex&, const DirOp&) const override { return identity_fn(); }
  std::string describe() const override {
    return n_ == 1 ? "S0" : "discrete(" + std::to_string(n_) + ")";
  }

 private:
  std::uint64_t n_;
  int k_;
};

class CircleSS final : public MSSet {
 public:
  int directions() const override { return 1; }
  std::uint64_t count(const MultiIndex& q) const override {
    return static_cast<std::uint64_t>(q[0]);
  }
  CellFn structure(const MultiIndex& q, const DirOp& op) const override {
    const PointedMap m = circle_structure(q[0], op.op);
    return [m](Cell c) { return static_cast<Cell>(m(static_cast<int>(c))); };
  }
  std::string describe() const override { return "S"; }
};

class SmashSS final : public MSSet {
 public:
  SmashSS(MSSetPtr x, MSSetPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  int directions() const override { return x_->directions(); }
  std::uint64_t count(const MultiIndex& q) const override {
    return saturating_mul(x_->count(q), y_->count(q));
  }
  CellFn structure(const MultiIndex& q, const DirOp& op) const override {
    const std::uint64_t ny = y_->count(q);
    const std::uint64_t ny2 = y_->count(op.target(q));
    return [fx = x_->structure(q, op), fy = y_->structure(q, op), ny, ny2](Cell c) -> Cell {
      if (c == 0) return 0;
      const Cell a = fx((c - 1) / ny + 1);
      const Cell b = fy((c - 1) % ny + 1);
      return a == 0 || b == 0 ? 0 : (a - 1) * ny2 + b;
    };
  }
  std::string describe() const override {
    return "(" + x_->describe() + " ^ " + y_->describe() + ")";
  }

 private:
  MSSetPtr x_, y_;
};

class WedgeSS final : public MSSet {
 public:
  WedgeSS(MSSetPtr x, MSSetPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  int directions() const override { return x_->directions(); }
  std::uint64_t count(const MultiIndex& q) const override {
    return saturating_add(x_->count(q), y_->count(q));
  }
  CellFn structure(const MultiIndex& q, const DirOp& op) const override {
    const std::uint64_t nx = x_->count(q);
    const std::uint64_t nx2 = x_->count(op.target(q));
    return [fx = x_->structure(q, op), fy = y_->structure(q, op), nx, nx2](Cell c) -> Cell {
      if (c <= nx) return fx(c);
      const Cell b = fy(c - nx);
      return b == 0 ? 0 : nx2 + b;
    };
  }
  std::string describe() const override {
    return "(" + x_->describe() + " v " + y_->describe() + ")";
  }

 private:
  MSSetPtr x_, y_;
};

class ProductSS final : public MSSet {
 public:
  ProductSS(MSSetPtr x, MSSetPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  int directions() const override { return x_->directions(); }
  std::uint64_t count(const MultiIndex& q) const override {
    const std::uint64_t all =
        saturating_mul(saturating_add(x_->count(q), 1), saturating_add(y_->count(q), 1));
    return all == std::numeric_limits<std::uint64_t>::max() ? all : all - 1;
  }
  CellFn structure(const MultiIndex& q, const DirOp& op) const override {
    const std::uint64_t ny = y_->count(q) + 1;
    const std::uint64_t ny2 = y_->count(op.target(q)) + 1;
    return [fx = x_->structure(q, op), fy = y_->structure(q, op), ny, ny2](Cell c) -> Cell {
      return fx(c / ny) * ny2 + fy(c % ny);
    };
  }
  std::string describe() const override {
    return "(" + x_->describe() + " x " + y_->describe() + ")";
  }

 private:
  MSSetPtr x_, y_;
};

class ExternalSmashSS final : public MSSet {
 public:
  ExternalSmashSS(MSSetPtr x, MSSetPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  int directions() const override { return x_->directions() + y_->directions(); }
  std::uint64_t count(const MultiIndex& q) const override {
    const int k = x_->directions();
    return saturating_mul(x_->count(q.take_front(k)), y_->count(q.drop_front(k)));
  }
  CellFn structure(const MultiIndex& q, const DirOp& op) const override {
    const int k = x_->directions();
    const MultiIndex qx = q.take_front(k), qy = q.drop_front(k);
    const std::uint64_t ny = y_->count(qy);
    CellFn fx = identity_fn(), fy = identity_fn();
    std::uint64_t ny2 = ny;
    if (op.direction < k) {
      fx = x_->structure(qx, op);
    } else {
      const DirOp shifted{op.direction - k, op.op};
      fy = y_->structure(qy, shifted);
      ny2 = y_->count(shifted.target(qy));
    }
    return [fx, fy, ny, ny2](Cell c) -> Cell {
      if (c == 0) return 0;
      const Cell a = fx((c - 1) / ny + 1);
      const Cell b = fy((c - 1) % ny + 1);
      return a == 0 || b == 0 ? 0 : (a - 1) * ny2 + b;
    };
  }
  std::string describe() const override {
    return "(" + x_->describe() + " ^ext " + y_->describe() + ")";
  }

 private:
  MSSetPtr x_, y_;
};

class DiagonalSS final : public MSSet {
 public:
  explicit DiagonalSS(MSSetPtr x) : x_(std::move(x)) {}
  int directions() const override { return 1; }
  std::uint64_t count(const MultiIndex& q) const override { return x_->count({q[0], q[0]}); }
  CellFn structure(const MultiIndex& q, const DirOp& op) const override {
    const MultiIndex both{q[0], q[0]};
    const DirOp first{0, op.op}, second{1, op.op};
    CellFn f = x_->structure(both, first);
    CellFn g = x_->structure(first.target(both), second);
    return [f, g](Cell c) { return g(f(c)); };
  }
  std::string describe() const override { return "diag" + x_->describe(); }

 private:
  MSSetPtr x_;
};

// Every level of total degree at most `max_total`.
std::vector<MultiIndex> levels_up_to(int directions, int max_total) {
  std::vector<MultiIndex> out;
  for (int t = 0; t <= max_total; ++t)
    for (auto& q : multi_indices_of_total(directions, t)) out.push_back(std::move(q));
  return out;
}

std::vector<DirOp> operators_at(const MultiIndex& q) {
  std::vector<DirOp> ops;
  for (int j = 0; j < q.directions(); ++j) {
    for (int i = 0; i <= q[j]; ++i) {
      if (q[j] >= 1) ops.push_back({j, SimplicialOp::face(i)});
      ops.push_back({j, SimplicialOp::degeneracy(i)});
    }
  }
  return ops;
}

// Applies ops left to right starting at q.
Cell apply_ops(const MSSet& x, MultiIndex q, std::initializer_list<DirOp> ops, Cell c) {
  for (const DirOp& op : ops) {
    c = x.structure(q, op)(c);
    q = op.target(q);
  }
  return c;
}

}  // namespace

MSSetPtr point_ss(int directions) { return std::make_shared<PointSS>(directions); }

MSSetPtr discrete_ss(std::uint64_t n, int directions) {
  return std::make_shared<DiscreteSS>(n, directions);
}

MSSetPtr circle_ss() { return std::make_shared<CircleSS>(); }

MSSetPtr smash_ss(MSSetPtr x, MSSetPtr y) {
  if (x->directions() != y->directions())
    throw ValidationError("smash of objects with different numbers of directions");
  return std::make_shared<SmashSS>(std::move(x), std::move(y));
}

MSSetPtr wedge_ss(MSSetPtr x, MSSetPtr y) {
  if (x->directions() != y->directions())
    throw ValidationError("wedge of objects with different numbers of directions");
  return std::make_shared<WedgeSS>(std::move(x), std::move(y));
}

MSSetPtr product_ss(MSSetPtr x, MSSetPtr y) {
  if (x->directions() != y->directions())
    throw ValidationError("product of objects with different numbers of directions");
  return std::make_shared<ProductSS>(std::move(x), std::move(y));
}

MSSetPtr external_smash_ss(MSSetPtr x, MSSetPtr y) {
  return std::make_shared<ExternalSmashSS>(std::move(x), std::move(y));
}

MSSetPtr suspension_ss(MSSetPtr x) { return external_smash_ss(circle_ss(), std::move(x)); }

MSSetPtr diagonal_ss(MSSetPtr x) {
  if (x->directions() != 2) throw ValidationError("diagonal needs a two-direction object");
  return std::make_shared<DiagonalSS>(std::move(x));
}

MSMap::MSMap(MSSetPtr source, MSSetPtr target, Components components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_->directions() != target_->directions())
    throw ValidationError("map between objects with different numbers of directions");
}

MSMap identity_map(MSSetPtr x) {
  return MSMap(x, x, [](const MultiIndex&) { return identity_fn(); });
}

MSMap collapse_map(MSSetPtr x, MSSetPtr target) {
  return MSMap(std::move(x), std::move(target),
               [](const MultiIndex&) -> CellFn { return [](Cell) -> Cell { return 0; }; });
}

MSMap compose(const MSMap& f, const MSMap& g) {
  if (f.target()->describe() != g.source()->describe())
    throw CompositionError("cannot compose maps into " + f.target()->describe() + " and out of " +
                           g.source()->describe());
  return MSMap(f.source(), g.target(), [f, g](const MultiIndex& q) -> CellFn {
    return [a = f.component(q), b = g.component(q)](Cell c) { return b(a(c)); };
  });
}

MSMap wedge_to_product(MSSetPtr x, MSSetPtr y) {
  MSSetPtr w = wedge_ss(x, y), p = product_ss(x, y);
  return MSMap(w, p, [x, y](const MultiIndex& q) -> CellFn {
    const std::uint64_t nx = x->count(q), ny = y->count(q) + 1;
    return [nx, ny](Cell c) -> Cell { return c <= nx ? c * ny : c - nx; };
  });
}

MSMap product_to_smash(MSSetPtr x, MSSetPtr y) {
  MSSetPtr p = product_ss(x, y), s = smash_ss(x, y);
  return MSMap(p, s, [y](const MultiIndex& q) -> CellFn {
    const std::uint64_t ny = y->count(q);
    return [ny](Cell c) -> Cell {
      const Cell a = c / (ny + 1), b = c % (ny + 1);
      return a == 0 || b == 0 ? 0 : (a - 1) * ny + b;
    };
  });
}

MSMap pair_map(const MSMap& f, const MSMap& g) {
  if (f.source()->describe() != g.source()->describe())
    throw CompositionError("pairing maps with different sources");
  MSSetPtr y = g.target();
  return MSMap(f.source(), product_ss(f.target(), g.target()),
               [f, g, y](const MultiIndex& q) -> CellFn {
                 const std::uint64_t ny = y->count(q) + 1;
                 return [a = f.component(q), b = g.component(q), ny](Cell c) {
                   return a(c) * ny + b(c);
                 };
               });
}

void verify_simplicial_identities(const MSSet& x, int max_total, std::uint64_t max_cells) {
  auto fail = [&](const MultiIndex& q, const std::string& what, Cell c) {
    throw IntegrityError(x.describe() + ": " + what + " fails at " + q.to_string() + " on cell " +
                         std::to_string(c));
  };
  for (const MultiIndex& q : levels_up_to(x.directions(), max_total)) {
    const std::uint64_t n = x.count(q);
    if (n > max_cells) continue;
    for (Cell c = 0; c <= n; ++c) {
      for (int j = 0; j < q.directions(); ++j) {
        const int m = q[j];
        auto d = [j](int i) { return DirOp{j, SimplicialOp::face(i)}; };
        auto s = [j](int i) { return DirOp{j, SimplicialOp::degeneracy(i)}; };
        if (m >= 2)
          for (int jj = 1; jj <= m; ++jj)
            for (int i = 0; i < jj; ++i)
              if (apply_ops(x, q, {d(jj), d(i)}, c) != apply_ops(x, q, {d(i), d(jj - 1)}, c))
                fail(q, "d_i d_j = d_{j-1} d_i", c);
        for (int jj = 0; jj <= m; ++jj) {
          for (int i = 0; i <= m + 1; ++i) {
            const Cell lhs = apply_ops(x, q, {s(jj), d(i)}, c);
            Cell rhs;
            if (i < jj)
              rhs = apply_ops(x, q, {d(i), s(jj - 1)}, c);
            else if (i == jj || i == jj + 1)
              rhs = c;
            else
              rhs = apply_ops(x, q, {d(i - 1), s(jj)}, c);
            if (lhs != rhs) fail(q, "d_i s_j relation", c);
          }
          for (int i = 0; i <= jj; ++i)
            if (apply_ops(x, q, {s(jj), s(i)}, c) != apply_ops(x, q, {s(i), s(jj + 1)}, c))
              fail(q, "s_i s_j = s_{j+1} s_i", c);
        }
      }
      for (const DirOp& a : operators_at(q))
        for (const DirOp& b : operators_at(q)) {
          if (a.direction >= b.direction) continue;
          if (apply_ops(x, q, {a, b}, c) != apply_ops(x, q, {b, a}, c))
            fail(q, "operators in distinct directions commute", c);
        }
    }
  }
}

void verify_msmap(const MSMap& f, int max_total, std::uint64_t max_cells) {
  const MSSet& src = *f.source();
  const MSSet& tgt = *f.target();
  for (const MultiIndex& q : levels_up_to(src.directions(), max_total)) {
    const std::uint64_t n = src.count(q);
    if (n > max_cells) continue;
    const CellFn fq = f.component(q);
    for (const DirOp& op : operators_at(q)) {
      const CellFn a = src.structure(q, op);
      const CellFn b = tgt.structure(q, op);
      const CellFn ft = f.component(op.target(q));
      for (Cell c = 0; c <= n; ++c)
        if (ft(a(c)) != b(fq(c)))
          throw ValidationError("map " + src.describe() + " -> " + tgt.describe() +
                                " does not commute with structure at " + q.to_string() +
                                " on cell " + std::to_string(c));
    }
  }
}

}  // namespace gammahom
