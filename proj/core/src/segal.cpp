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

#include "gammahom/segal.hpp"

#include <array>
#include <limits>
#include <map>
#include <numeric>

#include "gammahom/errors.hpp"

namespace gammahom {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

CellFn identity_fn() {
  return [](Cell c) { return c; };
}

std::optional<DirOp> shift_down(const std::optional<DirOp>& op) {
  if (!op) return std::nullopt;
  return DirOp{op->direction - 1, op->op};
}

MultiIndex target_level(const MultiIndex& q, const std::optional<DirOp>& op) {
  return op ? op->target(q) : q;
}

class PointGamma final : public GammaMSS {
 public:
  explicit PointGamma(int k) : k_(k) {}
  int directions() const override { return k_; }
  std::uint64_t count(int, const MultiIndex&) const override { return 0; }
  CellFn act(const PointedMap&, const MultiIndex&, const std::optional<DirOp>&) const override {
    return [](Cell) -> Cell { return 0; };
  }
  std::string describe() const override { return "point"; }

 private:
  int k_;
};

// Pushforward along a pointed map, precomputed once per map.
struct Pushforward {
  // Elementary abelian 2-groups: cells are bit strings, and the pushforward
  // is an XOR of per-byte lookups.
  std::vector<std::array<std::uint64_t, 256>> byte_tables;
  // Everything else: the map itself.
  std::vector<int> table;
  int target = 0;
};

class DiscreteAbelian final : public GammaMSS {
 public:
  explicit DiscreteAbelian(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw ValidationError("an abelian group needs at least one factor");
    order_ = 1;
    bool all_two = true;
    for (std::uint32_t d : factors_) {
      if (d < 2) throw ValidationError("invariant factors must be at least 2");
      order_ = saturating_mul(order_, d);
      all_two = all_two && d == 2;
    }
    if (order_ > (std::uint64_t{1} << 32)) throw ValidationError("abelian group too large");
    bits_ = all_two ? static_cast<int>(factors_.size()) : 0;
  }

  int directions() const override { return 0; }

  std::uint64_t count(int m, const MultiIndex&) const override {
    const std::uint64_t all = saturating_pow(order_, static_cast<std::uint64_t>(m));
    return all == kSaturated ? kSaturated : all - 1;
  }

  CellFn act(const PointedMap& gamma, const MultiIndex&,
             const std::optional<DirOp>& op) const override {
    if (op) throw ValidationError("a discrete Gamma-space has no simplicial directions");
    const int n = gamma.source().size(), m = gamma.target().size();
    if (count(n, {}) == kSaturated || count(m, {}) == kSaturated)
      throw BudgetExceeded("cells do not fit in 64 bits", describe() + "([" +
                                                              std::to_string(std::max(n, m)) +
                                                              "]_+)");
    std::shared_ptr<const Pushforward> p = pushforward(gamma);
    if (bits_ > 0) {
      return [p](Cell c) {
        std::uint64_t out = 0;
        for (const auto& t : p->byte_tables) {
          out ^= t[c & 0xff];
          c >>= 8;
        }
        return out;
      };
    }
    return [p, factors = factors_, order = order_](Cell c) {
      std::vector<std::uint64_t> sums(static_cast<std::size_t>(p->target) + 1, 0);
      for (std::size_t i = 1; i < p->table.size(); ++i) {
        const std::uint64_t a = c % order;
        c /= order;
        const int j = p->table[i];
        if (j != 0)
          sums[static_cast<std::size_t>(j)] = add(factors, sums[static_cast<std::size_t>(j)], a);
      }
      Cell out = 0;
      for (int j = p->target; j >= 1; --j) out = out * order + sums[static_cast<std::size_t>(j)];
      return out;
    };
  }

  std::string describe() const override {
    std::string s = "ab:";
    for (std::size_t k = 0; k < factors_.size(); ++k)
      s += (k ? "," : "") + std::to_string(factors_[k]);
    return s;
  }

 private:
  // Componentwise addition; group elements are mixed-radix with the first
  // factor least significant.
  static std::uint64_t add(const std::vector<std::uint32_t>& factors, std::uint64_t a,
                           std::uint64_t b) {
    std::uint64_t out = 0, scale = 1;
    for (std::uint32_t d : factors) {
      out += ((a % d + b % d) % d) * scale;
      a /= d;
      b /= d;
      scale *= d;
    }
    return out;
  }

  std::shared_ptr<const Pushforward> pushforward(const PointedMap& gamma) const {
    std::vector<int> key(gamma.table().begin(), gamma.table().end());
    key.push_back(gamma.target().size());
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    auto p = std::make_shared<Pushforward>();
    p->table.assign(gamma.table().begin(), gamma.table().end());
    p->target = gamma.target().size();
    if (bits_ > 0) {
      const int source_bits = gamma.source().size() * bits_;
      const int bytes = (source_bits + 7) / 8;
      p->byte_tables.assign(static_cast<std::size_t>(bytes), {});
      for (int byte = 0; byte < bytes; ++byte) {
        std::array<std::uint64_t, 256> images{};
        for (int bit = 0; bit < 8; ++bit) {
          const int b = byte * 8 + bit;
          if (b >= source_bits) break;
          const int j = gamma(b / bits_ + 1);
          if (j == 0) continue;
          const std::uint64_t image = std::uint64_t{1} << ((j - 1) * bits_ + b % bits_);
          for (int v = 0; v < 256; ++v)
            if (v >> bit & 1) images[static_cast<std::size_t>(v)] ^= image;
        }
        p->byte_tables[static_cast<std::size_t>(byte)] = images;
      }
    }
    std::lock_guard lock(mutex_);
    return memo_.emplace(std::move(key), std::move(p)).first->second;
  }

  std::vector<std::uint32_t> factors_;
  std::uint64_t order_ = 1;
  int bits_ = 0;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<int>, std::shared_ptr<const Pushforward>> memo_;
};

class TOf final : public GammaMSS {
 public:
  explicit TOf(MSSetPtr y) : y_(std::move(y)) {}
  int directions() const override { return y_->directions(); }
  std::uint64_t count(int m, const MultiIndex& q) const override {
    return saturating_mul(y_->count(q), static_cast<std::uint64_t>(m));
  }
  CellFn act(const PointedMap& gamma, const MultiIndex& q,
             const std::optional<DirOp>& op) const override {
    const std::uint64_t m = static_cast<std::uint64_t>(gamma.source().size());
    const std::uint64_t m2 = static_cast<std::uint64_t>(gamma.target().size());
    CellFn fy = op ? y_->structure(q, *op) : identity_fn();
    return [fy, gamma, m, m2](Cell c) -> Cell {
      if (c == 0) return 0;
      const Cell y = fy((c - 1) / m + 1);
      const int s = gamma(static_cast<int>((c - 1) % m + 1));
      return y == 0 || s == 0 ? 0 : (y - 1) * m2 + static_cast<Cell>(s);
    };
  }
  std::string describe() const override { return "T(" + y_->describe() + ")"; }

 private:
  MSSetPtr y_;
};

class Bar final : public GammaMSS {
 public:
  explicit Bar(GammaPtr x) : x_(std::move(x)) {}
  int directions() const override { return x_->directions() + 1; }
  std::uint64_t count(int m, const MultiIndex& q) const override {
    return x_->count(q[0] * m, q.drop_front());
  }
  CellFn act(const PointedMap& gamma, const MultiIndex& q,
             const std::optional<DirOp>& op) const override {
    const MultiIndex rest = q.drop_front();
    if (op && op->direction == 0)
      return x_->act(smash(circle_structure(q[0], op->op), gamma), rest, std::nullopt);
    return x_->act(smash(PointedMap::identity(q[0]), gamma), rest, shift_down(op));
  }
  std::string describe() const override { return "B(" + x_->describe() + ")"; }

 private:
  GammaPtr x_;
};

class SigmaGamma final : public GammaMSS {
 public:
  explicit SigmaGamma(GammaPtr x) : x_(std::move(x)) {}
  int directions() const override { return x_->directions() + 1; }
  std::uint64_t count(int m, const MultiIndex& q) const override {
    return saturating_mul(static_cast<std::uint64_t>(q[0]), x_->count(m, q.drop_front()));
  }
  CellFn act(const PointedMap& gamma, const MultiIndex& q,
             const std::optional<DirOp>& op) const override {
    const MultiIndex rest = q.drop_front();
    const bool leading = op && op->direction == 0;
    const PointedMap s = leading ? circle_structure(q[0], op->op) : PointedMap::identity(q[0]);
    const std::optional<DirOp> inner = leading ? std::nullopt : shift_down(op);
    const CellFn fx = x_->act(gamma, rest, inner);
    const std::uint64_t nx = x_->count(gamma.source().size(), rest);
    const std::uint64_t nx2 = x_->count(gamma.target().size(), target_level(rest, inner));
    return [s, fx, nx, nx2](Cell c) -> Cell {
      if (c == 0) return 0;
      const int k = s(static_cast<int>((c - 1) / nx + 1));
      const Cell y = fx((c - 1) % nx + 1);
      return k == 0 || y == 0 ? 0 : static_cast<Cell>(k - 1) * nx2 + y;
    };
  }
  std::string describe() const override { return "Sigma(" + x_->describe() + ")"; }

 private:
  GammaPtr x_;
};

class MuPullback final : public GammaMSS {
 public:
  MuPullback(int n, GammaPtr x) : n_(n), x_(std::move(x)) {}
  int directions() const override { return x_->directions(); }
  std::uint64_t count(int m, const MultiIndex& q) const override {
    return x_->count(n_ * m, q);
  }
  CellFn act(const PointedMap& gamma, const MultiIndex& q,
             const std::optional<DirOp>& op) const override {
    return x_->act(mu(n_, gamma), q, op);
  }
  std::string describe() const override {
    return "mu(" + std::to_string(n_) + ")*" + x_->describe();
  }

 private:
  int n_;
  GammaPtr x_;
};

class WedgeGamma final : public GammaMSS {
 public:
  WedgeGamma(GammaPtr x, GammaPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  int directions() const override { return x_->directions(); }
  std::uint64_t count(int m, const MultiIndex& q) const override {
    return saturating_add(x_->count(m, q), y_->count(m, q));
  }
  CellFn act(const PointedMap& gamma, const MultiIndex& q,
             const std::optional<DirOp>& op) const override {
    const std::uint64_t nx = x_->count(gamma.source().size(), q);
    const std::uint64_t nx2 = x_->count(gamma.target().size(), target_level(q, op));
    return [fx = x_->act(gamma, q, op), fy = y_->act(gamma, q, op), nx, nx2](Cell c) -> Cell {
      if (c <= nx) return fx(c);
      const Cell b = fy(c - nx);
      return b == 0 ? 0 : nx2 + b;
    };
  }
  std::string describe() const override {
    return "wedge(" + x_->describe() + "," + y_->describe() + ")";
  }

 private:
  GammaPtr x_, y_;
};

class SmashGamma final : public GammaMSS {
 public:
  SmashGamma(GammaPtr x, GammaPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  int directions() const override { return x_->directions(); }
  std::uint64_t count(int m, const MultiIndex& q) const override {
    return saturating_mul(x_->count(m, q), y_->count(m, q));
  }
  CellFn act(const PointedMap& gamma, const MultiIndex& q,
             const std::optional<DirOp>& op) const override {
    const std::uint64_t ny = y_->count(gamma.source().size(), q);
    const std::uint64_t ny2 = y_->count(gamma.target().size(), target_level(q, op));
    return [fx = x_->act(gamma, q, op), fy = y_->act(gamma, q, op), ny, ny2](Cell c) -> Cell {
      if (c == 0) return 0;
      const Cell a = fx((c - 1) / ny + 1);
      const Cell b = fy((c - 1) % ny + 1);
      return a == 0 || b == 0 ? 0 : (a - 1) * ny2 + b;
    };
  }
  std::string describe() const override {
    return "smash(" + x_->describe() + "," + y_->describe() + ")";
  }

 private:
  GammaPtr x_, y_;
};

class Evaluated final : public MSSet {
 public:
  Evaluated(GammaPtr x, int m) : x_(std::move(x)), m_(m) {}
  int directions() const override { return x_->directions(); }
  std::uint64_t count(const MultiIndex& q) const override { return x_->count(m_, q); }
  CellFn structure(const MultiIndex& q, const DirOp& op) const override {
    return x_->act(PointedMap::identity(m_), q, op);
  }
  std::string describe() const override {
    return x_->describe() + "([" + std::to_string(m_) + "])";
  }

 private:
  GammaPtr x_;
  int m_;
};

void require_same(const GammaPtr& a, const GammaPtr& b, const std::string& what) {
  if (a->describe() != b->describe())
    throw CompositionError(what + ": " + a->describe() + " vs " + b->describe());
}

PointedMap block_map(int n, int n_prime, bool second) {
  const int size = second ? n_prime : n;
  std::vector<int> t(static_cast<std::size_t>(size) + 1, 0);
  for (int i = 1; i <= size; ++i) t[static_cast<std::size_t>(i)] = second ? n + i : i;
  return PointedMap(FinPointedSet(size), FinPointedSet(n + n_prime), std::move(t));
}

std::vector<MultiIndex> levels_up_to(int directions, int max_total) {
  std::vector<MultiIndex> out;
  for (int t = 0; t <= max_total; ++t)
    for (auto& q : multi_indices_of_total(directions, t)) out.push_back(std::move(q));
  return out;
}

std::vector<DirOp> operators_at(const MultiIndex& q) {
  std::vector<DirOp> ops;
  for (int j = 0; j < q.directions(); ++j)
    for (int i = 0; i <= q[j]; ++i) {
      if (q[j] >= 1) ops.push_back({j, SimplicialOp::face(i)});
      ops.push_back({j, SimplicialOp::degeneracy(i)});
    }
  return ops;
}

}  // namespace

GammaPtr point_gamma(int directions) { return std::make_shared<PointGamma>(directions); }

GammaPtr discrete_abelian(std::vector<std::uint32_t> invariant_factors) {
  return std::make_shared<DiscreteAbelian>(std::move(invariant_factors));
}

GammaPtr t_of(MSSetPtr y) { return std::make_shared<TOf>(std::move(y)); }

GammaPtr sphere_like() { return t_of(discrete_ss(1)); }

GammaPtr bar(GammaPtr x) { return std::make_shared<Bar>(std::move(x)); }

GammaPtr sigma_gamma(GammaPtr x) { return std::make_shared<SigmaGamma>(std::move(x)); }

GammaPtr mu_pullback(int n, GammaPtr x) {
  if (n < 0) throw ValidationError("mu_n needs n >= 0");
  return std::make_shared<MuPullback>(n, std::move(x));
}

GammaPtr wedge_gamma(GammaPtr x, GammaPtr y) {
  if (x->directions() != y->directions())
    throw ValidationError("wedge of Gamma-spaces with different numbers of directions");
  return std::make_shared<WedgeGamma>(std::move(x), std::move(y));
}

GammaPtr smash_gamma(GammaPtr x, GammaPtr y) {
  if (x->directions() != y->directions())
    throw ValidationError("smash of Gamma-spaces with different numbers of directions");
  return std::make_shared<SmashGamma>(std::move(x), std::move(y));
}

MSSetPtr evaluate(GammaPtr x, int m) { return std::make_shared<Evaluated>(std::move(x), m); }

MSSetPtr underlying(GammaPtr x) { return evaluate(std::move(x), 1); }

GammaMap::GammaMap(GammaPtr source, GammaPtr target, Components components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_->directions() != target_->directions())
    throw ValidationError("Gamma-map between objects with different numbers of directions");
}

MSMap GammaMap::at(int m) const {
  return MSMap(evaluate(source_, m), evaluate(target_, m),
               [c = components_, m](const MultiIndex& q) { return c(m, q); });
}

GammaMap identity_gamma_map(GammaPtr x) {
  return GammaMap(x, x, [](int, const MultiIndex&) { return identity_fn(); });
}

GammaMap compose(const GammaMap& f, const GammaMap& g) {
  require_same(f.target(), g.source(), "cannot compose Gamma-maps");
  return GammaMap(f.source(), g.target(), [f, g](int m, const MultiIndex& q) -> CellFn {
    return [a = f.component(m, q), b = g.component(m, q)](Cell c) { return b(a(c)); };
  });
}

GammaMap tau(GammaPtr x) {
  return GammaMap(t_of(underlying(x)), x, [x](int m, const MultiIndex& q) -> CellFn {
    std::vector<CellFn> summands;
    for (int s = 1; s <= m; ++s)
      summands.push_back(x->act(standard_inclusion(s, m), q, std::nullopt));
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    return [summands, mm](Cell c) -> Cell {
      if (c == 0) return 0;
      return summands[(c - 1) % mm]((c - 1) / mm + 1);
    };
  });
}

GammaMap rho(GammaPtr x) {
  return GammaMap(sigma_gamma(x), bar(x), [x](int m, const MultiIndex& q) -> CellFn {
    const MultiIndex rest = q.drop_front();
    std::vector<CellFn> slices;
    for (int k = 1; k <= q[0]; ++k)
      slices.push_back(x->act(smash(standard_inclusion(k, q[0]), PointedMap::identity(m)), rest,
                              std::nullopt));
    const std::uint64_t nx = x->count(m, rest);
    return [slices, nx](Cell c) -> Cell {
      if (c == 0) return 0;
      return slices[(c - 1) / nx]((c - 1) % nx + 1);
    };
  });
}

GammaMap bar_map(const GammaMap& f) {
  return GammaMap(bar(f.source()), bar(f.target()), [f](int m, const MultiIndex& q) {
    return f.component(q[0] * m, q.drop_front());
  });
}

GammaMap sigma_map(const GammaMap& f) {
  const GammaPtr src = f.source(), tgt = f.target();
  return GammaMap(sigma_gamma(src), sigma_gamma(tgt),
                  [f, src, tgt](int m, const MultiIndex& q) -> CellFn {
                    const MultiIndex rest = q.drop_front();
                    const std::uint64_t nx = src->count(m, rest), ny = tgt->count(m, rest);
                    return [inner = f.component(m, rest), nx, ny](Cell c) -> Cell {
                      if (c == 0) return 0;
                      const Cell y = inner((c - 1) % nx + 1);
                      return y == 0 ? 0 : ((c - 1) / nx) * ny + y;
                    };
                  });
}

GammaMap t_of_map(const MSMap& g) {
  return GammaMap(t_of(g.source()), t_of(g.target()), [g](int m, const MultiIndex& q) -> CellFn {
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    return [inner = g.component(q), mm](Cell c) -> Cell {
      if (c == 0) return 0;
      const Cell y = inner((c - 1) / mm + 1);
      return y == 0 ? 0 : (y - 1) * mm + (c - 1) % mm + 1;
    };
  });
}

GammaMap bar_power(const GammaMap& f, int n) {
  GammaMap out = f;
  for (int i = 0; i < n; ++i) out = bar_map(out);
  return out;
}

GammaMap fold(const GammaMap& f, const GammaMap& g) {
  require_same(f.target(), g.target(), "fold of maps with different targets");
  const GammaPtr left = f.source();
  return GammaMap(wedge_gamma(f.source(), g.source()), f.target(),
                  [f, g, left](int m, const MultiIndex& q) -> CellFn {
                    const std::uint64_t nx = left->count(m, q);
                    return [a = f.component(m, q), b = g.component(m, q), nx](Cell c) {
                      return c <= nx ? a(c) : b(c - nx);
                    };
                  });
}

GammaMap block_inclusion(GammaPtr x, int n, int n_prime, bool second) {
  const PointedMap iota = block_map(n, n_prime, second);
  return GammaMap(mu_pullback(second ? n_prime : n, x), mu_pullback(n + n_prime, x),
                  [x, iota](int m, const MultiIndex& q) {
                    return x->act(smash(iota, PointedMap::identity(m)), q, std::nullopt);
                  });
}

GammaMap reassociation(GammaPtr x) {
  return GammaMap(t_of(underlying(sigma_gamma(x))), sigma_gamma(t_of(underlying(x))),
                  [](int, const MultiIndex&) { return identity_fn(); });
}

GammaPtr SpectrumTower::iterate(int n) {
  std::lock_guard lock(mutex_);
  while (static_cast<int>(iterates_.size()) <= n) iterates_.push_back(bar(iterates_.back()));
  return iterates_[static_cast<std::size_t>(n)];
}

MSSetPtr SpectrumTower::level(int n) {
  const GammaPtr x = iterate(n);
  std::lock_guard lock(mutex_);
  if (static_cast<int>(levels_.size()) <= n) levels_.resize(static_cast<std::size_t>(n) + 1);
  auto& slot = levels_[static_cast<std::size_t>(n)];
  if (!slot) slot = underlying(x);
  return slot;
}

MSSetPtr spectrum_level(GammaPtr x, int n) {
  for (int i = 0; i < n; ++i) x = bar(x);
  return underlying(x);
}

SpecialVerdict is_special(GammaPtr x, SpecialMode mode, const SpecialOptions& options) {
  SpecialVerdict v;
  v.mode = mode;
  v.bound = options.bound;
  v.depth = options.depth;
  for (int total = 2; total <= options.bound; ++total)
    for (int n = 1; n < total; ++n) {
      const int np = total - n;
      const PointedMap p1 = sharp(Injection{n, total, [&] {
                                              std::vector<int> m(static_cast<std::size_t>(n));
                                              std::iota(m.begin(), m.end(), 0);
                                              return m;
                                            }()});
      const PointedMap p2 = sharp(Injection{np, total, [&] {
                                              std::vector<int> m(static_cast<std::size_t>(np));
                                              std::iota(m.begin(), m.end(), n);
                                              return m;
                                            }()});
      const std::string where = "X([" + std::to_string(total) + "]) -> X([" + std::to_string(n) +
                                "]) x X([" + std::to_string(np) + "])";
      if (mode == SpecialMode::Bijection) {
        for (const MultiIndex& q : levels_up_to(x->directions(), options.depth)) {
          const std::uint64_t big = x->count(total, q);
          const std::uint64_t a = x->count(n, q) + 1, b = x->count(np, q) + 1;
          if (saturating_mul(a, b) != saturating_add(big, 1)) {
            v.detail = where + " at " + q.to_string() + ": " + std::to_string(big + 1) +
                       " cells against " + std::to_string(a) + " x " + std::to_string(b);
            return v;
          }
          if (big > options.chains.cell_budget) {
            v.detail = where + " at " + q.to_string() + " exceeds the cell budget";
            return v;
          }
          const CellFn f1 = x->act(p1, q, std::nullopt), f2 = x->act(p2, q, std::nullopt);
          std::vector<bool> hit(static_cast<std::size_t>(big + 1), false);
          for (Cell c = 0; c <= big; ++c) {
            const Cell image = f1(c) * b + f2(c);
            if (hit[image]) {
              v.detail = where + " at " + q.to_string() + " is not injective";
              return v;
            }
            hit[image] = true;
          }
        }
      } else {
        const MSSetPtr src = evaluate(x, total);
        const MSMap m1(src, evaluate(x, n), [x, p1](const MultiIndex& q) {
          return x->act(p1, q, std::nullopt);
        });
        const MSMap m2(src, evaluate(x, np), [x, p2](const MultiIndex& q) {
          return x->act(p2, q, std::nullopt);
        });
        const MSMap pair = pair_map(m1, m2);
        try {
          const NormalizedChains cs(pair.source(), options.chains);
          const NormalizedChains ct(pair.target(), options.chains);
          for (int d = 0; d <= options.depth; ++d) {
            const HomologyMapReport r = homology_map(pair, cs, ct, options.ring, d);
            if (!r.isomorphism) {
              v.detail = where + " is not a homology isomorphism in degree " + std::to_string(d) +
                         " over " + options.ring.symbol();
              return v;
            }
          }
        } catch (const BudgetExceeded& e) {
          v.detail = where + ": " + e.what();
          return v;
        }
      }
    }
  v.special = true;
  v.detail = mode == SpecialMode::Bijection
                 ? "levelwise bijection for n + n' <= " + std::to_string(options.bound)
                 : "homology isomorphism over " + options.ring.symbol() + " in degrees <= " +
                       std::to_string(options.depth) + " for n + n' <= " +
                       std::to_string(options.bound);
  return v;
}

void verify_functoriality(const GammaMSS& x, int max_size, int max_total,
                          std::uint64_t max_cells) {
  auto fail = [&](const std::string& what) {
    throw IntegrityError(x.describe() + ": " + what);
  };
  const auto levels = levels_up_to(x.directions(), max_total);
  for (const MultiIndex& q : levels)
    if (x.count(0, q) != 0) fail("not normalized at " + q.to_string());

  for (int a = 0; a <= max_size; ++a)
    for (const MultiIndex& q : levels) {
      const std::uint64_t n = x.count(a, q);
      if (n > max_cells) continue;
      const CellFn id = x.act(PointedMap::identity(a), q, std::nullopt);
      for (Cell c = 0; c <= n; ++c)
        if (id(c) != c) fail("X(id) is not the identity at " + q.to_string());
    }

  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b) {
      const auto fs = all_pointed_maps(a, b);
      for (const MultiIndex& q : levels) {
        const std::uint64_t n = x.count(a, q);
        if (n > max_cells) continue;
        for (const PointedMap& f : fs) {
          const CellFn xf = x.act(f, q, std::nullopt);
          if (x.act(f, q, std::nullopt)(0) != 0) fail("basepoint moved by " + f.to_string());
          for (const DirOp& op : operators_at(q)) {
            const CellFn both = x.act(f, q, op);
            const CellFn op_src = x.act(PointedMap::identity(a), q, op);
            const CellFn op_tgt = x.act(PointedMap::identity(b), q, op);
            const CellFn f_after = x.act(f, op.target(q), std::nullopt);
            for (Cell c = 0; c <= n; ++c) {
              const Cell v = both(c);
              if (v != op_tgt(xf(c)) || v != f_after(op_src(c)))
                fail("X(" + f.to_string() + ") does not commute with the structure at " +
                     q.to_string());
            }
          }
          for (int cs = 0; cs <= max_size; ++cs)
            for (const PointedMap& g : all_pointed_maps(b, cs)) {
              const CellFn xg = x.act(g, q, std::nullopt);
              const CellFn xgf = x.act(compose(f, g), q, std::nullopt);
              for (Cell c = 0; c <= n; ++c)
                if (xgf(c) != xg(xf(c)))
                  fail("X(g f) != X(g) X(f) for f = " + f.to_string() + ", g = " + g.to_string() +
                       " at " + q.to_string());
            }
        }
      }
    }
}

void verify_naturality(const GammaMap& f, int max_size, int max_total, std::uint64_t max_cells) {
  const GammaMSS& x = *f.source();
  const GammaMSS& y = *f.target();
  auto fail = [&](const std::string& what) {
    throw IntegrityError("map " + x.describe() + " -> " + y.describe() + ": " + what);
  };
  for (const MultiIndex& q : levels_up_to(x.directions(), max_total))
    for (int a = 0; a <= max_size; ++a) {
      const std::uint64_t n = x.count(a, q);
      if (n > max_cells) continue;
      const CellFn fa = f.component(a, q);
      for (int b = 0; b <= max_size; ++b)
        for (const PointedMap& g : all_pointed_maps(a, b)) {
          const CellFn xg = x.act(g, q, std::nullopt), yg = y.act(g, q, std::nullopt);
          const CellFn fb = f.component(b, q);
          for (Cell c = 0; c <= n; ++c)
            if (fb(xg(c)) != yg(fa(c))) fail("not natural for " + g.to_string() + " at " + q.to_string());
        }
      for (const DirOp& op : operators_at(q)) {
        const CellFn xs = x.act(PointedMap::identity(a), q, op);
        const CellFn ys = y.act(PointedMap::identity(a), q, op);
        const CellFn ft = f.component(a, op.target(q));
        for (Cell c = 0; c <= n; ++c)
          if (ft(xs(c)) != ys(fa(c)))
            fail("does not commute with the structure at " + q.to_string());
      }
    }
}

}  // namespace gammahom
