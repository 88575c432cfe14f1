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

#include "gammahom/stable.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "gammahom/errors.hpp"

namespace gammahom {

namespace {

std::string group_string(const std::optional<HomologyGroup>& g, const Ring& ring) {
  return g ? g->to_string(ring) : "?";
}

SpecialVerdict certify_special(const GammaPtr& x, const SpecialOptions& options) {
  SpecialVerdict v = is_special(x, SpecialMode::Bijection, options);
  if (v.special) return v;
  SpecialVerdict h = is_special(x, SpecialMode::Homology, options);
  if (h.special) return h;
  h.detail = v.detail + "; " + h.detail;
  return h;
}

}  // namespace

int connectivity(MSSetPtr y, int bound, const ChainOptions& options) {
  const NormalizedChains chains(std::move(y), options);
  for (int i = 0; i <= bound; ++i)
    if (!chains.homology(i, Ring::integers()).is_zero()) return i - 1;
  return bound;
}

StableResult spectrum_homology(GammaPtr x, const Ring& ring, int i_max,
                               const StableOptions& options) {
  StableResult r;
  r.space = x->describe();
  r.ring = ring;
  r.special = certify_special(x, options.special);
  r.pre_spectrum = !r.special.special;
  r.evidence.resize(static_cast<std::size_t>(i_max) + 1);
  for (int i = 0; i <= i_max; ++i) {
    r.evidence[static_cast<std::size_t>(i)].degree = i;
    r.evidence[static_cast<std::size_t>(i)].bound = "unknown";
  }

  // Below twice the connectivity of U(X) the answer is H~(U(X)) itself.
  if (r.special.special) {
    try {
      r.connectivity = connectivity(underlying(x), i_max, options.chains);
    } catch (const BudgetExceeded&) {
      r.connectivity = -1;
    }
    if (r.connectivity >= 1) {
      const NormalizedChains chains(underlying(x), options.chains);
      for (int i = 0; i <= i_max && i < 2 * r.connectivity; ++i) {
        auto& ev = r.evidence[static_cast<std::size_t>(i)];
        try {
          ev.value = chains.homology(i, ring);
        } catch (const BudgetExceeded&) {
          break;
        }
        ev.settled = true;
        ev.n = 0;
        ev.bound = "i<2c";
        r.tower[{0, i}] = *ev.value;
      }
    }
  }

  SpectrumTower tower(x);
  std::vector<std::optional<HomologyGroup>> previous(static_cast<std::size_t>(i_max) + 1);
  bool exhausted = false;
  for (int n = 0; n <= options.max_iterations && !exhausted; ++n) {
    std::vector<int> pending;
    for (int i = 0; i <= i_max; ++i)
      if (!r.evidence[static_cast<std::size_t>(i)].settled) pending.push_back(i);
    if (pending.empty()) break;
    const NormalizedChains chains(tower.level(n), options.chains);
    r.levels_built = n + 1;
    for (int i : pending) {
      HomologyGroup v;
      try {
        v = chains.homology(i + n, ring);
      } catch (const BudgetExceeded& e) {
        r.budget_note = e.what();
        exhausted = true;
        break;
      }
      r.tower[{n, i}] = v;
      auto& ev = r.evidence[static_cast<std::size_t>(i)];
      auto& prev = previous[static_cast<std::size_t>(i)];
      ev.previous = prev;
      ev.value = v;
      ev.n = n;
      if (n > i && prev && *prev == v) {
        ev.settled = true;
        ev.bound = r.pre_spectrum ? "empirical-only" : "i<n";
      }
      prev = v;
    }
  }

  r.table.ring = ring;
  for (int i = 0; i <= i_max; ++i) {
    const auto& ev = r.evidence[static_cast<std::size_t>(i)];
    if (ev.settled) {
      r.table.groups.push_back(ev.value);
    } else {
      r.table.groups.push_back(std::nullopt);
      if (!r.unstable_above) r.unstable_above = i - 1;
    }
  }
  if (r.unstable_above && r.budget_note.empty())
    r.budget_note = "iteration cap " + std::to_string(options.max_iterations) + " reached";
  return r;
}

StableResult gamma_homology(GammaPtr x, const Ring& ring, int i_max,
                            const StableOptions& options) {
  return spectrum_homology(std::move(x), ring, i_max, options);
}

CheckReport check_map_iso(const std::string& name, const GammaMap& f, const Ring& ring,
                          int d_max, const StableOptions& options) {
  CheckReport rep;
  rep.name = name;
  rep.space = f.source()->describe() + " -> " + f.target()->describe();
  const StableResult src = gamma_homology(f.source(), ring, d_max, options);
  const StableResult tgt = gamma_homology(f.target(), ring, d_max, options);
  rep.passed = true;

  struct Level {
    MSMap map;
    std::unique_ptr<NormalizedChains> source, target;
  };
  std::map<int, Level> levels;
  for (int i = 0; i <= d_max; ++i) {
    const auto& es = src.evidence[static_cast<std::size_t>(i)];
    const auto& et = tgt.evidence[static_cast<std::size_t>(i)];
    std::ostringstream line;
    line << "degree " << i << ": ";
    if (!es.settled || !et.settled) {
      line << "not stabilized (" << group_string(src.table.groups[static_cast<std::size_t>(i)], ring)
           << " vs " << group_string(tgt.table.groups[static_cast<std::size_t>(i)], ring) << ")";
      rep.details.push_back(line.str());
      rep.passed = false;
      continue;
    }
    const int n = std::max({es.n, et.n, i + 1});
    try {
      auto it = levels.find(n);
      if (it == levels.end()) {
        MSMap m = bar_power(f, n).at(1);
        auto s = std::make_unique<NormalizedChains>(m.source(), options.chains);
        auto t = std::make_unique<NormalizedChains>(m.target(), options.chains);
        it = levels.emplace(n, Level{std::move(m), std::move(s), std::move(t)}).first;
      }
      const HomologyMapReport h =
          homology_map(it->second.map, *it->second.source, *it->second.target, ring, i + n);
      const bool ok = h.isomorphism && h.source == *src.table.groups[static_cast<std::size_t>(i)] &&
                      h.target == *tgt.table.groups[static_cast<std::size_t>(i)];
      line << h.source.to_string(ring) << " -> " << h.target.to_string(ring) << " at n=" << n
           << ", induced rank " << h.image_rank << ", " << (ok ? "isomorphism" : "NOT an isomorphism")
           << " (" << h.certificate << ")";
      rep.passed = rep.passed && ok;
    } catch (const BudgetExceeded& e) {
      line << "budget exceeded: " << e.what();
      rep.passed = false;
    }
    rep.details.push_back(line.str());
  }
  rep.results = {src, tgt};
  return rep;
}

CheckReport check_rho_iso(GammaPtr x, const Ring& ring, int d_max, const StableOptions& options) {
  CheckReport r = check_map_iso("rho-iso", rho(x), ring, d_max, options);
  r.space = x->describe();
  return r;
}

CheckReport check_wedge_iso(GammaPtr x, int n, int n_prime, const Ring& ring, int d_max,
                            const StableOptions& options) {
  const GammaMap f =
      fold(block_inclusion(x, n, n_prime, false), block_inclusion(x, n, n_prime, true));
  CheckReport r = check_map_iso("wedge-iso(" + std::to_string(n) + "," + std::to_string(n_prime) + ")",
                                f, ring, d_max, options);
  r.space = x->describe();
  return r;
}

CheckReport check_smash_vanishing(GammaPtr x, int n, int n_prime, const Ring& ring, int d_max,
                                  const StableOptions& options) {
  CheckReport rep;
  rep.name = "smash-vanishing(" + std::to_string(n) + "," + std::to_string(n_prime) + ")";
  rep.space = x->describe();
  const StableResult r =
      gamma_homology(smash_gamma(mu_pullback(n, x), mu_pullback(n_prime, x)), ring, d_max, options);
  rep.passed = true;
  for (int i = 0; i <= d_max; ++i) {
    const auto& g = r.table.groups[static_cast<std::size_t>(i)];
    const bool ok = g && g->is_zero();
    rep.passed = rep.passed && ok;
    rep.details.push_back("degree " + std::to_string(i) + ": " + group_string(g, ring) +
                          (ok ? "" : " (expected 0)"));
  }
  rep.results = {r};
  return rep;
}

CheckReport check_stable_range(GammaPtr x, const Ring& ring, int i_max,
                               const StableOptions& options) {
  CheckReport rep;
  rep.name = "stable-range";
  rep.space = x->describe();
  rep.passed = true;

  SpectrumTower tower(x);
  std::map<std::pair<int, int>, HomologyGroup> values;
  const int n_max = std::min(options.max_iterations, i_max + 2);
  int built = -1;
  for (int n = 0; n <= n_max; ++n) {
    const NormalizedChains chains(tower.level(n), options.chains);
    bool full = true;
    for (int i = 0; i <= i_max; ++i) {
      try {
        values[{n, i}] = chains.homology(i + n, ring);
      } catch (const BudgetExceeded& e) {
        rep.details.push_back("level n=" + std::to_string(n) + " stops at degree " +
                              std::to_string(i) + ": " + e.what());
        full = false;
        break;
      }
    }
    built = n;
    if (!full) break;
  }

  StableResult summary;
  summary.space = rep.space;
  summary.ring = ring;
  summary.tower = values;
  summary.table.ring = ring;
  for (int i = 0; i <= i_max; ++i) {
    std::ostringstream line;
    line << "degree " << i << ":";
    std::optional<HomologyGroup> last, previous;
    int compared = 0, last_n = -1;
    bool ok = true;
    for (int n = i + 1; n <= built; ++n) {
      auto it = values.find({n, i});
      if (it == values.end()) break;
      line << " n=" << n << " " << it->second.to_string(ring);
      if (last) {
        ++compared;
        ok = ok && *last == it->second;
      }
      previous = last;
      last = it->second;
      last_n = n;
    }
    if (compared == 0) line << " (fewer than two levels above the bound)";
    line << (ok ? "" : " DISAGREE");
    rep.passed = rep.passed && ok;
    rep.details.push_back(line.str());
    summary.table.groups.push_back(compared > 0 && ok ? last : std::nullopt);
    DegreeEvidence ev;
    ev.degree = i;
    ev.settled = compared > 0 && ok;
    ev.n = last_n;
    ev.previous = previous;
    ev.value = last;
    ev.bound = ev.settled ? "i<n" : "unknown";
    summary.evidence.push_back(ev);
  }

  // Read H~(U(B^k X)) below twice its connectivity and compare with the
  // stable values shifted by k.
  for (int k = 1; k <= std::min(3, built); ++k) {
    int c = -1;
    try {
      c = connectivity(tower.level(k), k + 1, options.chains);
    } catch (const BudgetExceeded&) {
      break;
    }
    if (c < 1) continue;
    const NormalizedChains chains(tower.level(k), options.chains);
    for (int i = 0; i < 2 * c; ++i) {
      const HomologyGroup h = chains.homology(i, ring);
      std::optional<HomologyGroup> expected;
      if (i - k < 0)
        expected = HomologyGroup{};
      else if (i - k <= i_max)
        expected = summary.table.groups[static_cast<std::size_t>(i - k)];
      if (!expected) continue;
      const bool ok = h == *expected;
      rep.passed = rep.passed && ok;
      rep.details.push_back("U(B^" + std::to_string(k) + "X) is " + std::to_string(c) +
                            "-connected; H~_" + std::to_string(i) + " = " + h.to_string(ring) +
                            (ok ? " matches" : " does NOT match") + " the stable value");
    }
    break;
  }
  rep.results = {summary};
  return rep;
}

CheckReport check_square(GammaPtr x, int max_m, int max_degree, const StableOptions& options) {
  CheckReport rep;
  rep.name = "square";
  rep.space = x->describe();
  rep.passed = true;
  try {
    verify_naturality(tau(x));
    verify_naturality(rho(x));
    rep.details.push_back("tau and rho are natural on objects of size <= 2");
  } catch (const Error& e) {
    rep.passed = false;
    rep.details.push_back(e.what());
  }

  const GammaMap path_a = compose(compose(reassociation(x), sigma_map(tau(x))), rho(x));
  const GammaMap path_b = compose(t_of_map(rho(x).at(1)), tau(bar(x)));
  for (int m = 0; m <= max_m; ++m) {
    const MSMap a = path_a.at(m), b = path_b.at(m);
    try {
      const NormalizedChains src(a.source(), options.chains);
      const NormalizedChains tgt(a.target(), options.chains);
      for (int d = 0; d <= max_degree; ++d) {
        const SparseMatrix ma = chains_of_map(a, src, tgt, d);
        const SparseMatrix mb = chains_of_map(b, src, tgt, d);
        bool chain_map = true;
        if (d > 0)
          chain_map = multiply(tgt.boundary(d), ma) ==
                      multiply(chains_of_map(a, src, tgt, d - 1), src.boundary(d));
        const bool ok = ma == mb && chain_map;
        rep.passed = rep.passed && ok;
        rep.details.push_back("[" + std::to_string(m) + "]_+ degree " + std::to_string(d) + ": " +
                              std::to_string(ma.rows()) + "x" + std::to_string(ma.cols()) +
                              (ma == mb ? " composites equal" : " composites DIFFER") +
                              (chain_map ? "" : ", not a chain map"));
      }
    } catch (const BudgetExceeded& e) {
      rep.passed = false;
      rep.details.push_back("[" + std::to_string(m) + "]_+: " + e.what());
    }
  }
  return rep;
}

CheckReport check_special(GammaPtr x, const StableOptions& options) {
  CheckReport rep;
  rep.name = "special";
  rep.space = x->describe();
  rep.passed = true;
  const SpecialVerdict b = is_special(x, SpecialMode::Bijection, options.special);
  rep.details.push_back(std::string("bijection mode: ") + (b.special ? "special" : "not special") +
                        " (" + b.detail + ")");
  if (b.special) {
    // Delooping preserves specialness.
    const SpecialVerdict h = is_special(bar(x), SpecialMode::Homology, options.special);
    rep.passed = h.special;
    rep.details.push_back(std::string("B(X) in homology mode: ") +
                          (h.special ? "special" : "not special") + " (" + h.detail + ")");
  } else {
    const SpecialVerdict h = is_special(x, SpecialMode::Homology, options.special);
    rep.details.push_back(std::string("homology mode: ") + (h.special ? "special" : "not special") +
                          " (" + h.detail + ")");
  }
  return rep;
}

}  // namespace gammahom
